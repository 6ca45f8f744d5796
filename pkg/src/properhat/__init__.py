"""Toolkit for the hat guessing game restricted to proper colorings:
exact threshold computation, explicit winning strategies, verification,
closed-form bounds, and model export."""

__version__ = "0.1.0"
