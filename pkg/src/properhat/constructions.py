"""Explicit winning strategies: the parenthesis-matching rule for complete
graphs, the equivalent matching-based construction over strings of distinct
colors, the 4-color path strategy, and its lift to arbitrary trees.

Complete-graph strategies use q = 2n-1 colors.  What a vertex of K_n sees is a
string of n-1 distinct colors; matching those strings against the strings of
length n (one per coloring) is what drives the constructions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, complete_graph, connected_components, path_graph
from .matching import hopcroft_karp
from .strategies import Strategy, lift_subgraph_strategy

# A "distinct string" is a tuple of pairwise-distinct colors from 1..2n-1,
# of length n-1 (what a vertex sees) or n (a full coloring of K_n).
DistinctString = tuple[int, ...]


class NotATreeError(ValueError):
    pass


class TooSmallError(ValueError):
    pass


def distinct_strings(length: int, q: int):
    """All strings of ``length`` pairwise-distinct symbols from 1..q, in
    lexicographic order."""
    return itertools.permutations(range(1, q + 1), length)


def gk_guess(n: int, seen) -> int:
    """The parenthesis rule: mark seen colors ')' and unseen colors '(' in
    color order, match parentheses with a stack, and return the leftmost
    unmatched '('.

    With n unseen and n-1 seen colors there is always an unmatched '(', and it
    is never a seen color.
    """
    q = 2 * n - 1
    seen = frozenset(seen)
    if len(seen) != n - 1:
        raise ValueError(f"need exactly {n - 1} distinct seen colors, got {len(seen)}")
    if not all(1 <= c <= q for c in seen):
        raise ValueError(f"seen colors must lie in 1..{q}")
    stack: list[int] = []
    for color in range(1, q + 1):
        if color in seen:
            if stack:
                stack.pop()
        else:
            stack.append(color)
    return stack[0]


def gk_complete_strategy(n: int) -> Strategy:
    """Rule-backed strategy on K_n with 2n-1 colors: every vertex applies the
    parenthesis rule to the set of colors it sees."""
    if n < 2:
        raise ValueError("needs n >= 2")

    def rule(vertex: int, pattern: tuple[int, ...]) -> int:
        return gk_guess(n, pattern)

    return Strategy(complete_graph(n), 2 * n - 1, rule=rule, label="complete-gk")


@dataclass(frozen=True)
class SetMatching:
    """A perfect matching of the containment graph between (n-1)-subsets and
    n-subsets of [2n-1], stored as key -> superset."""

    n: int
    pairs: dict[frozenset, frozenset]

    def __post_init__(self) -> None:
        images = set()
        for key, value in self.pairs.items():
            if not key < value or len(value) != len(key) + 1:
                raise AssertionError(f"{set(key)} is not covered by {set(value)}")
            images.add(value)
        if len(images) != len(self.pairs):
            raise AssertionError("set matching is not injective")


def gk_set_matching(n: int) -> SetMatching:
    """Match every (n-1)-subset A of [2n-1] to A plus its parenthesis-rule
    color.  Injectivity is checked at construction."""
    if n < 1:
        raise ValueError("needs n >= 1")
    pairs = {}
    for combo in itertools.combinations(range(1, 2 * n), n - 1):
        key = frozenset(combo)
        pairs[key] = key | {gk_guess(n, key)}
    return SetMatching(n, pairs)


@dataclass(frozen=True)
class StringMatching:
    """A bijection from [n] x S_{n-1} to S_n such that deleting the r-th entry
    of the image of (r, s) gives back s."""

    n: int
    pairs: dict[tuple[int, DistinctString], DistinctString]

    def __post_init__(self) -> None:
        images = set()
        for (r, short), full in self.pairs.items():
            if full[: r - 1] + full[r:] != short:
                raise AssertionError(f"deleting entry {r} of {full} is not {short}")
            images.add(full)
        if len(images) != len(self.pairs):
            raise AssertionError("string matching is not injective")

    def strategy(self) -> Strategy:
        """Vertex i, seeing the string s, guesses entry i of the string
        matched to (i, s)."""
        n = self.n
        pairs = self.pairs

        def rule(vertex: int, pattern: tuple[int, ...]) -> int:
            return pairs[(vertex, pattern)][vertex - 1]

        return Strategy(complete_graph(n), 2 * n - 1, rule=rule, label="complete-matching")


def lift_set_matching_to_strings(m: SetMatching) -> StringMatching:
    """Pull a subset matching back to strings: the key (i, s) maps to s with
    the new color of m(set(s)) inserted at position i."""
    n = m.n
    pairs: dict[tuple[int, DistinctString], DistinctString] = {}
    for short in distinct_strings(n - 1, 2 * n - 1):
        key = frozenset(short)
        added = min(m.pairs[key] - key)
        for i in range(1, n + 1):
            pairs[(i, short)] = short[: i - 1] + (added,) + short[i - 1 :]
    return StringMatching(n, pairs)


def strings_bipartite_graph(n: int):
    """The bipartite graph between S_n and [n] x S_{n-1} whose edges join a
    string to every (position, string-with-that-entry-deleted) pair.

    Returns (lefts, rights, adjacency) with everything in deterministic
    lexicographic order; both sides are n-regular.
    """
    lefts = list(distinct_strings(n, 2 * n - 1))
    rights = [
        (i, s) for i in range(1, n + 1) for s in distinct_strings(n - 1, 2 * n - 1)
    ]
    adjacency = {
        s: [(r, s[: r - 1] + s[r:]) for r in range(1, n + 1)] for s in lefts
    }
    return lefts, rights, adjacency


def matching_complete_strategy(n: int, source: str = "gk-lifted") -> Strategy:
    """Strategy on K_n with 2n-1 colors built from a perfect matching of the
    strings graph, either lifted from the parenthesis-rule subset matching or
    found directly by Hopcroft-Karp (deterministic order)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    if source == "gk-lifted":
        return lift_set_matching_to_strings(gk_set_matching(n)).strategy()
    if source == "hopcroft-karp":
        lefts, rights, adjacency = strings_bipartite_graph(n)
        matching = hopcroft_karp(lefts, adjacency)
        if len(matching) != len(lefts):
            raise AssertionError("strings graph matching is not perfect")
        pairs = {right: left for left, right in matching.items()}
        return StringMatching(n, pairs).strategy()
    raise ValueError(f"unknown source {source!r}")


def _encode(color: int) -> tuple[int, int]:
    return (color - 1) >> 1, (color - 1) & 1


def _decode(x: int, y: int) -> int:
    return 1 + 2 * (x & 1) + (y & 1)


def p3_strategy() -> Strategy:
    """The winning 4-color strategy on the path 1-2-3, with colors 1..4 read
    as the bit pairs (0,0),(0,1),(1,0),(1,1): the ends flip one bit of the
    center's color, the center combines one bit from each end."""
    tables: dict[int, dict[tuple[int, ...], int]] = {1: {}, 2: {}, 3: {}}
    for c2 in range(1, 5):
        x2, y2 = _encode(c2)
        tables[1][(c2,)] = _decode(x2 + 1, y2)
        tables[3][(c2,)] = _decode(x2, y2 + 1)
    for c1 in range(1, 5):
        for c3 in range(1, 5):
            (_, y1), (x3, _) = _encode(c1), _encode(c3)
            tables[2][(c1, c3)] = _decode(x3 + 1, y1 + 1)
    return Strategy(path_graph(3), 4, tables=tables, label="p3")


def tree_strategy(t: Graph) -> Strategy:
    """Winning 4-color strategy on any tree with at least 3 vertices: find a
    path around the lowest branching vertex and lift the path strategy."""
    if t.n < 3:
        raise TooSmallError("needs at least 3 vertices")
    if len(t.edges) != t.n - 1 or len(connected_components(t)) != 1:
        raise NotATreeError("graph is not a tree")
    center = next(v for v in t.vertices() if t.degree(v) >= 2)
    a, b = t.neighbors(center)[:2]
    return lift_subgraph_strategy(t, {1: a, 2: center, 3: b}, p3_strategy())
