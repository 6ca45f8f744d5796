"""Guessing strategies, exhaustive verification, and the strategy
transformations (subgraph lift, leaf removal, color restriction).

A strategy assigns every vertex a total guess table over its *attainable*
neighborhood patterns: the neighbor-color tuples that occur in at least one
proper coloring.  Unattainable patterns are outside the domain; hitting a
missing attainable pattern is a hard error, never a silent wrong guess.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .graphs import (
    Graph,
    attainable_patterns,
    chromatic_number,
    delete_vertex,
    enumerate_proper_colorings,
)


class NeighborhoodPattern(NamedTuple):
    """The colors a vertex sees, in its canonical (ascending) neighbor order."""

    vertex: int
    colors: tuple[int, ...]


class MissingPatternEntry(Exception):
    """A strategy has no guess for an attainable pattern."""

    def __init__(self, vertex: int, pattern: tuple[int, ...]):
        self.vertex = vertex
        self.pattern = tuple(pattern)
        super().__init__(f"no guess for vertex {vertex} at pattern {self.pattern}")


class EmbeddingError(ValueError):
    """A vertex map that is not a subgraph embedding."""


class DegreeNotOneError(ValueError):
    pass


class QTooSmallError(ValueError):
    pass


class StrategyFormatError(ValueError):
    """Strategy document violating the schema."""


class GraphMismatchError(ValueError):
    """Strategy document written for a different graph or color count."""


class Strategy:
    """Per-vertex guess tables over attainable patterns.

    Backed either by explicit tables or by a pure rule evaluated on demand;
    rule results are memoized, so a built strategy is stable and shareable.
    """

    def __init__(
        self,
        graph: Graph,
        q: int,
        tables: dict[int, dict[tuple[int, ...], int]] | None = None,
        rule: Callable[[int, tuple[int, ...]], int | None] | None = None,
        label: str = "",
    ):
        if q < 1:
            raise ValueError("q must be >= 1")
        self.graph = graph
        self.q = q
        self.label = label
        self._rule = rule
        self._tables: dict[int, dict[tuple[int, ...], int]] = {
            v: {} for v in graph.vertices()
        }
        if tables:
            for v, table in tables.items():
                for pattern, guess in table.items():
                    if not 1 <= guess <= q:
                        raise ValueError(
                            f"guess {guess} for vertex {v} outside 1..{q}"
                        )
                    self._tables[v][tuple(pattern)] = guess

    def guess(self, vertex: int, pattern: tuple[int, ...]) -> int:
        """The color ``vertex`` guesses when it sees ``pattern``."""
        table = self._tables[vertex]
        guess = table.get(pattern)
        if guess is None:
            if self._rule is not None:
                guess = self._rule(vertex, pattern)
            if guess is None:
                raise MissingPatternEntry(vertex, pattern)
            if not 1 <= guess <= self.q:
                raise ValueError(f"rule guess {guess} outside 1..{self.q}")
            table[pattern] = guess
        return guess

    def materialize(self) -> dict[int, dict[tuple[int, ...], int]]:
        """Explicit tables over every attainable pattern of every vertex."""
        return {
            v: {
                p: self.guess(v, p)
                for p in sorted(attainable_patterns(self.graph, v, self.q))
            }
            for v in self.graph.vertices()
        }


@dataclass
class VerificationReport:
    wins: bool
    colorings_checked: int
    losing_colorings: int
    counterexamples: list[tuple[int, ...]]
    counterexamples_capped: bool
    per_vertex_correct: list[int]


def _sweep(
    g: Graph, s: Strategy, first_color: int | None, cap: int
) -> tuple[int, int, list[tuple[int, ...]], list[int]]:
    neighbor_idx = [tuple(u - 1 for u in g.neighbors(v)) for v in g.vertices()]
    checked = 0
    losing = 0
    counterexamples: list[tuple[int, ...]] = []
    correct = [0] * g.n
    guess = s.guess
    for c in enumerate_proper_colorings(g, s.q, first_color):
        checked += 1
        any_correct = False
        for v in range(g.n):
            pattern = tuple(c[j] for j in neighbor_idx[v])
            if guess(v + 1, pattern) == c[v]:
                correct[v] += 1
                any_correct = True
        if not any_correct:
            losing += 1
            if len(counterexamples) < cap:
                counterexamples.append(c)
    return checked, losing, counterexamples, correct


def verify_strategy(
    g: Graph,
    s: Strategy,
    counterexample_cap: int = 10,
    jobs: int = 1,
) -> VerificationReport:
    """Sweep every proper coloring of g with s.q colors and check that some
    vertex guesses correctly.

    Counterexamples come out in lexicographic order (capped); per-vertex
    correct-guess counts cover the full sweep.  ``jobs`` > 1 partitions the
    sweep by the color of vertex 1; the merged report does not depend on the
    job count.
    """
    if jobs <= 1 or g.n == 0:
        checked, losing, cex, correct = _sweep(g, s, None, counterexample_cap)
    else:
        parts = []
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_sweep, g, s, color, counterexample_cap)
                for color in range(1, s.q + 1)
            ]
            parts = [f.result() for f in futures]
        checked = sum(p[0] for p in parts)
        losing = sum(p[1] for p in parts)
        cex = sorted(c for p in parts for c in p[2])[:counterexample_cap]
        correct = [sum(p[3][v] for p in parts) for v in range(g.n)]
    return VerificationReport(
        wins=losing == 0,
        colorings_checked=checked,
        losing_colorings=losing,
        counterexamples=cex,
        counterexamples_capped=losing > len(cex),
        per_vertex_correct=correct,
    )


def lift_subgraph_strategy(
    g: Graph, embedding: dict[int, int], s_h: Strategy
) -> Strategy:
    """Play a subgraph strategy on the larger graph.

    ``embedding`` maps every vertex of s_h's graph injectively into g, sending
    edges to edges.  Embedded vertices read only the colors on the images of
    their subgraph neighbors; every other vertex guesses the constant color 1.
    A proper coloring of g restricts to a proper coloring of the subgraph, so
    a winning s_h lifts to a winning strategy on g.
    """
    h = s_h.graph
    if sorted(embedding) != list(h.vertices()):
        raise EmbeddingError("embedding must map exactly the subgraph's vertices")
    images = list(embedding.values())
    if len(set(images)) != len(images):
        raise EmbeddingError("embedding must be injective")
    if any(not 1 <= w <= g.n for w in images):
        raise EmbeddingError("embedding image outside the host graph")
    for a, b in h.edges:
        if not g.has_edge(embedding[a], embedding[b]):
            raise EmbeddingError(
                f"edge ({a},{b}) maps to non-edge ({embedding[a]},{embedding[b]})"
            )

    back = {w: u for u, w in embedding.items()}
    extract: dict[int, tuple[int, ...]] = {}
    for u, w in embedding.items():
        host_order = g.neighbors(w)
        extract[w] = tuple(host_order.index(embedding[x]) for x in h.neighbors(u))

    def rule(vertex: int, pattern: tuple[int, ...]) -> int:
        u = back.get(vertex)
        if u is None:
            return 1
        sub = tuple(pattern[i] for i in extract[vertex])
        return s_h.guess(u, sub)

    return Strategy(g, s_h.q, rule=rule, label=f"lift[{s_h.label}]")


def leaf_removal_transform(g: Graph, v: int, s: Strategy) -> Strategy:
    """Remove a degree-1 vertex from a strategy's graph.

    The leaf's unique neighbor w switches to guessing, for each pattern on
    N(w) minus the leaf, the most frequent guess it made over the attainable
    extensions of that pattern by a leaf color (ties broken by lowest color).
    Everyone else keeps their table.  Requires q >= 5, which is what makes the
    majority argument sound; a winning s stays winning on the smaller graph.
    """
    if g.degree(v) != 1:
        raise DegreeNotOneError(f"vertex {v} has degree {g.degree(v)}, need 1")
    if s.q < 5:
        raise QTooSmallError(f"leaf removal needs q >= 5, got {s.q}")
    w = g.neighbors(v)[0]
    g2, relabel = delete_vertex(g, v)
    leaf_pos = g.neighbors(w).index(v)

    votes: dict[tuple[int, ...], Counter] = {}
    for pattern in sorted(attainable_patterns(g, w, s.q)):
        reduced = pattern[:leaf_pos] + pattern[leaf_pos + 1 :]
        votes.setdefault(reduced, Counter())[s.guess(w, pattern)] += 1
    majority_table = {
        reduced: min(c for c, k in tally.items() if k == max(tally.values()))
        for reduced, tally in votes.items()
    }

    w2 = relabel[w]
    original = {new: old for old, new in relabel.items()}

    def rule(vertex: int, pattern: tuple[int, ...]) -> int | None:
        if vertex == w2:
            return None  # the explicit table is total for w2
        return s.guess(original[vertex], pattern)

    return Strategy(
        g2, s.q, tables={w2: majority_table}, rule=rule, label=f"drop-leaf[{s.label}]"
    )


def restrict_strategy(g: Graph, s: Strategy) -> Strategy:
    """Turn a strategy for q colors into one for q-1 colors.

    Surviving patterns keep their guess; a guess of q is remapped to the
    smallest color of 1..q-1 missing from the pattern (smallest overall if the
    pattern uses them all).  A proper (q-1)-coloring is also a proper
    q-coloring, so a winning s wins after restriction; this is what makes
    "winning" monotone downward in q.
    """
    if s.q < 2:
        raise ValueError("cannot restrict below one color")
    new_q = s.q - 1
    if new_q < chromatic_number(g):
        raise ValueError(f"q-1={new_q} is below the chromatic number")

    def rule(vertex: int, pattern: tuple[int, ...]) -> int:
        guess = s.guess(vertex, pattern)
        if guess < s.q:
            return guess
        for c in range(1, new_q + 1):
            if c not in pattern:
                return c
        return 1

    return Strategy(g, new_q, rule=rule, label=f"restrict[{s.label}]")


FORMAT_VERSION = 1


def serialize_strategy(s: Strategy) -> str:
    """Render a strategy as the canonical JSON document (stable field order,
    patterns sorted lexicographically)."""
    g = s.graph
    tables = []
    for v in g.vertices():
        entries = [
            {"pattern": list(p), "guess": s.guess(v, p)}
            for p in sorted(attainable_patterns(g, v, s.q))
        ]
        tables.append(
            {"vertex": v, "neighbor_order": list(g.neighbors(v)), "entries": entries}
        )
    doc = {
        "format_version": FORMAT_VERSION,
        "graph": {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]},
        "q": s.q,
        "tables": tables,
    }
    return json.dumps(doc, indent=2) + "\n"


def strategy_document(s: Strategy) -> dict:
    """The document as a plain dict (what serialize_strategy dumps)."""
    return json.loads(serialize_strategy(s))


def parse_strategy(text: str | dict, g: Graph) -> Strategy:
    """Load a strategy document and validate it against g: schema, graph
    match, guesses in range, and totality over attainable patterns."""
    if isinstance(text, dict):
        doc = text
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StrategyFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise StrategyFormatError("document must be an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise StrategyFormatError(
            f"unsupported format_version {doc.get('format_version')!r}"
        )
    graph_info = doc.get("graph")
    if not isinstance(graph_info, dict):
        raise StrategyFormatError("missing graph section")
    if graph_info.get("n") != g.n:
        raise GraphMismatchError(
            f"document has n={graph_info.get('n')}, graph has n={g.n}"
        )
    try:
        doc_edges = frozenset((min(u, v), max(u, v)) for u, v in graph_info["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise StrategyFormatError("malformed edge list") from exc
    if doc_edges != g.edges:
        raise GraphMismatchError("document edge set differs from the graph")
    q = doc.get("q")
    if not isinstance(q, int) or q < 1:
        raise StrategyFormatError(f"bad q: {q!r}")
    raw_tables = doc.get("tables")
    if not isinstance(raw_tables, list):
        raise StrategyFormatError("missing tables")

    tables: dict[int, dict[tuple[int, ...], int]] = {}
    for item in raw_tables:
        if not isinstance(item, dict):
            raise StrategyFormatError("table entries must be objects")
        v = item.get("vertex")
        if not isinstance(v, int) or not 1 <= v <= g.n:
            raise StrategyFormatError(f"bad vertex {v!r}")
        if v in tables:
            raise StrategyFormatError(f"duplicate table for vertex {v}")
        if tuple(item.get("neighbor_order", ())) != g.neighbors(v):
            raise StrategyFormatError(
                f"neighbor_order for vertex {v} must be {list(g.neighbors(v))}"
            )
        table: dict[tuple[int, ...], int] = {}
        for entry in item.get("entries", ()):
            pattern = entry.get("pattern")
            guess = entry.get("guess")
            if (
                not isinstance(pattern, list)
                or len(pattern) != g.degree(v)
                or not all(isinstance(c, int) and 1 <= c <= q for c in pattern)
            ):
                raise StrategyFormatError(
                    f"bad pattern {pattern!r} for vertex {v}"
                )
            if not isinstance(guess, int) or not 1 <= guess <= q:
                raise StrategyFormatError(
                    f"guess {guess!r} for vertex {v} outside 1..{q}"
                )
            key = tuple(pattern)
            if key in table:
                raise StrategyFormatError(f"duplicate pattern {key} for vertex {v}")
            table[key] = guess
        tables[v] = table

    for v in g.vertices():
        attainable = attainable_patterns(g, v, q)
        table = tables.get(v, {})
        for pattern in sorted(attainable):
            if pattern not in table:
                raise MissingPatternEntry(v, pattern)
        extra = set(table) - attainable
        if extra:
            raise StrategyFormatError(
                f"vertex {v} has entries for unattainable patterns, e.g. {min(extra)}"
            )
    return Strategy(g, q, tables=tables, label="parsed")
