"""Closed-form bounds on the game value: the vertex-count-plus-chromatic
upper bound, the bound through the ordinary (unrestricted-adversary) game,
the maximum-degree bound, and the sharper counting bounds for book graphs.
Lower bounds come from explicit strategies and are available as witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, chromatic_number, clique_number, complete_graph
from .strategies import Strategy, lift_subgraph_strategy
from .constructions import gk_complete_strategy, p3_strategy

# Known values of the ordinary hat guessing number, for feeding
# ordinary_hg_bound: complete graphs, and book graphs in the many-page limit.


def ordinary_hg_complete(n: int) -> int:
    return n


def ordinary_hg_book_limit(k: int) -> int:
    return 1 + sum(m**m for m in range(1, k + 1))


def chromatic_bound(g: Graph) -> int:
    """Upper bound n + chi - 1, from averaging correct guesses over the
    colorings that use a minimum palette."""
    return g.n + chromatic_number(g) - 1


def ordinary_hg_bound(g: Graph, hg: int) -> int:
    """Inclusive upper bound chi*(hg+1) - 1 given the ordinary game value."""
    if hg < 1:
        raise ValueError("ordinary game value must be >= 1")
    return chromatic_number(g) * (hg + 1) - 1


def max_degree_bound(g: Graph) -> int | None:
    """Inclusive upper bound ceil(e*D)*(D+1) - 1 from the maximum degree D;
    not applicable to edgeless graphs."""
    d = g.max_degree()
    if d == 0:
        return None
    return math.ceil(math.e * d) * (d + 1) - 1


def book_condition_bound(k: int, n: int) -> int:
    """Smallest q (minus one) at which the page-counting condition
    (q-k-1)^n > k*(q-k+1)^(n-1) certifies a loss; exact integer scan."""
    if k < 1 or n < 1:
        raise ValueError("book parameters must be >= 1")
    q = k + 1
    while (q - k - 1) ** n - k * (q - k + 1) ** (n - 1) <= 0:
        q += 1
    return q - 1


def book_closed_form_bound(k: int, n: int) -> int | None:
    """Largest integer strictly below (e^2*k/n)^(1/n)*n + k + 1 when the
    page count satisfies n > e^2*k; None otherwise.  Falls back to the exact
    integer scan when the float lands suspiciously close to an integer."""
    if k < 1 or n < 1:
        raise ValueError("book parameters must be >= 1")
    if n <= math.e**2 * k:
        return None
    value = (math.e**2 * k / n) ** (1.0 / n) * n + k + 1
    if abs(value - round(value)) < 1e-9:
        return book_condition_bound(k, n)
    return math.ceil(value) - 1


def _lex_min_clique(g: Graph, size: int) -> list[int]:
    masks = g.adjacency_masks
    full = (1 << g.n) - 1

    def extend(chosen: list[int], cand: int, start: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        for v in range(start, g.n):
            if cand >> v & 1:
                found = extend(chosen + [v + 1], cand & masks[v], v + 1)
                if found:
                    return found
        return None

    found = extend([], full, 0)
    assert found is not None
    return found


def lower_bound(g: Graph) -> tuple[int, str]:
    """Best constructive lower bound with its provenance: 2w-1 for clique
    number w, 4 once some vertex has two neighbors, 3 once there is an edge,
    1 always.  Each is certified by lower_bound_witness."""
    best = (1, "single-vertex")
    if g.edges:
        best = (3, "edge")
    if g.max_degree() >= 2 and best[0] < 4:
        best = (4, "path-on-3")
    omega = clique_number(g)
    if omega >= 2 and 2 * omega - 1 > best[0]:
        best = (2 * omega - 1, f"clique-{omega}")
    return best


def lower_bound_witness(g: Graph) -> Strategy:
    """A strategy realizing lower_bound(g), obtained by lifting the matching
    complete-graph or path strategy into g."""
    value, provenance = lower_bound(g)
    if provenance == "single-vertex":
        return Strategy(g, 1, rule=lambda v, p: 1, label="constant")
    if provenance == "edge":
        u, w = min(g.edges)
        return lift_subgraph_strategy(g, {1: u, 2: w}, gk_complete_strategy(2))
    if provenance == "path-on-3":
        center = next(v for v in g.vertices() if g.degree(v) >= 2)
        a, b = g.neighbors(center)[:2]
        return lift_subgraph_strategy(g, {1: a, 2: center, 3: b}, p3_strategy())
    omega = (value + 1) // 2
    clique = _lex_min_clique(g, omega)
    embedding = {i + 1: v for i, v in enumerate(clique)}
    return lift_subgraph_strategy(g, embedding, gk_complete_strategy(omega))


def best_upper_bound(g: Graph) -> tuple[int, str]:
    """Tightest applicable closed-form upper bound with provenance."""
    best = (chromatic_bound(g), "chromatic")
    md = max_degree_bound(g)
    if md is not None and md < best[0]:
        best = (md, "max-degree")
    return best


@dataclass
class BoundRow:
    name: str
    kind: str  # "lower" or "upper"
    value: int | None
    applicable: bool
    note: str = ""


@dataclass
class BoundsReport:
    graph: Graph
    rows: list[BoundRow]
    lower: int
    lower_provenance: str
    upper: int
    upper_provenance: str


def bounds_report(
    g: Graph, hg: int | None = None, book: tuple[int, int] | None = None
) -> BoundsReport:
    """Evaluate every applicable bound and pick the best of each direction.

    ``hg`` feeds the ordinary-game bound when the caller knows that value;
    ``book`` = (spine, pages) switches on the book-specific bounds.
    """
    rows: list[BoundRow] = []
    lo, lo_prov = lower_bound(g)
    for name, value, applicable, note in (
        ("single-vertex", 1, True, "someone guesses a fixed color"),
        ("edge", 3 if g.edges else None, bool(g.edges), "lifted two-clique strategy"),
        (
            "path-on-3",
            4 if g.max_degree() >= 2 else None,
            g.max_degree() >= 2,
            "lifted three-path strategy",
        ),
    ):
        rows.append(BoundRow(name, "lower", value, applicable, note))
    omega = clique_number(g)
    rows.append(
        BoundRow(
            f"clique-{omega}",
            "lower",
            2 * omega - 1 if omega >= 2 else None,
            omega >= 2,
            "lifted complete-graph strategy",
        )
    )

    hi, hi_prov = chromatic_bound(g), "chromatic"
    rows.append(BoundRow("chromatic", "upper", hi, True, "n + chi - 1"))
    md = max_degree_bound(g)
    rows.append(
        BoundRow(
            "max-degree",
            "upper",
            md,
            md is not None,
            "ceil(e*D)*(D+1) - 1",
        )
    )
    if md is not None and md < hi:
        hi, hi_prov = md, "max-degree"
    if hg is not None:
        value = ordinary_hg_bound(g, hg)
        rows.append(
            BoundRow("ordinary-game", "upper", value, True, f"chi*(hg+1)-1 with hg={hg}")
        )
        if value < hi:
            hi, hi_prov = value, "ordinary-game"
    if book is not None:
        k, pages = book
        value = book_condition_bound(k, pages)
        rows.append(
            BoundRow("book-condition", "upper", value, True, "exact counting scan")
        )
        if value < hi:
            hi, hi_prov = value, "book-condition"
        closed = book_closed_form_bound(k, pages)
        rows.append(
            BoundRow(
                "book-closed-form",
                "upper",
                closed,
                closed is not None,
                "requires pages > e^2 * spine",
            )
        )
        if closed is not None and closed < hi:
            hi, hi_prov = closed, "book-closed-form"
    return BoundsReport(
        graph=g,
        rows=rows,
        lower=lo,
        lower_provenance=lo_prov,
        upper=hi,
        upper_provenance=hi_prov,
    )
