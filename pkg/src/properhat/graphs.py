"""Undirected simple graphs with a canonical vertex order, plus the coloring
machinery every other module builds on.

Vertices are numbered 1..n and colors 1..q throughout.  The neighborhood of a
vertex is always reported in ascending vertex order; that order is the pattern
order used by strategies and by the feasibility solver, so it must never
change.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

# Enumeration-based operations refuse larger graphs: beyond this size the
# exhaustive guarantees of this library stop being honest.
MAX_ENUMERATION_VERTICES = 16


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class EdgeCountError(GraphFormatError):
    pass


class NamedGraphError(ValueError):
    """Unknown family or invalid parameters for a named graph."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 1..n.

    ``edges`` holds unordered pairs normalized as (u, v) with u < v.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise VertexRangeError(f"edge ({u},{v}) out of range 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        normalized = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return cls(n, normalized)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """adjacency[v-1] = neighbors of v in ascending order."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u - 1].append(v)
            nbrs[v - 1].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask per vertex (bit v-1 set when v is a neighbor)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={len(self.edges)})"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header line ``n m`` followed by m lines
    ``u v``.  Endpoint order within a line is not significant.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError("empty document")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    if len(lines) - 1 != m:
        raise EdgeCountError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line {line!r}") from exc
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexRangeError(f"edge ({u},{v}) out of range 1..{n}")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise DuplicateEdgeError(f"duplicate edge {edge}")
        seen.add(edge)
    return Graph(n, frozenset(seen))


@dataclass(frozen=True)
class NamedGraphSpec:
    """A graph family tag plus its parameters, as parsed from the
    mini-language (``K5``, ``P4``, ``C6``, ``K2,3``, ``B2,3``, ``K4-e``,
    ``W4``, ``star4``, ``house``, ``closed-house``, ``fan5``, ``hourglass``).
    """

    family: str
    params: tuple[int, ...] = ()


def parse_named(name: str) -> NamedGraphSpec:
    s = name.strip()
    fixed = {"house", "closed-house", "hourglass"}
    if s in fixed:
        return NamedGraphSpec(s)
    try:
        if s.startswith("star"):
            return NamedGraphSpec("star", (int(s[4:]),))
        if s.startswith("fan"):
            return NamedGraphSpec("fan", (int(s[3:]),))
        if s.startswith("B"):
            k, n = s[1:].split(",")
            return NamedGraphSpec("book", (int(k), int(n)))
        if s.startswith("W"):
            return NamedGraphSpec("wheel", (int(s[1:]),))
        if s.startswith("P"):
            return NamedGraphSpec("path", (int(s[1:]),))
        if s.startswith("C"):
            return NamedGraphSpec("cycle", (int(s[1:]),))
        if s.startswith("K"):
            body = s[1:]
            if body.endswith("-e"):
                return NamedGraphSpec("complete-minus-edge", (int(body[:-2]),))
            if "," in body:
                a, b = body.split(",")
                return NamedGraphSpec("complete-bipartite", (int(a), int(b)))
            return NamedGraphSpec("complete", (int(body),))
    except ValueError:
        pass
    raise NamedGraphError(f"unrecognized graph name {name!r}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise NamedGraphError("K_n needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise NamedGraphError("P_n needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise NamedGraphError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise NamedGraphError("K_{a,b} needs a, b >= 1")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)))


def book_graph(k: int, n: int) -> Graph:
    """Book B_{k,n}: spine clique on vertices 1..k, pages k+1..k+n each joined
    to every spine vertex."""
    if k < 1 or n < 1:
        raise NamedGraphError("B_{k,n} needs k, n >= 1")
    edges = [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
    edges += [(u, k + p) for u in range(1, k + 1) for p in range(1, n + 1)]
    return Graph.from_edges(k + n, edges)


def complete_minus_edge_graph(n: int) -> Graph:
    """K_n with the edge {1,2} removed."""
    if n < 2:
        raise NamedGraphError("K_n - e needs n >= 2")
    return Graph.from_edges(
        n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) != (1, 2))
    )


def star_graph(leaves: int) -> Graph:
    """Star with hub 1 and the given number of leaves 2..leaves+1."""
    if leaves < 1:
        raise NamedGraphError("star needs >= 1 leaf")
    return Graph.from_edges(leaves + 1, ((1, v) for v in range(2, leaves + 2)))


def wheel_graph(rim: int) -> Graph:
    """Wheel W_rim: cycle on 1..rim plus hub rim+1 joined to every rim vertex."""
    if rim < 3:
        raise NamedGraphError("W_n needs rim >= 3")
    edges = [(i, i + 1) for i in range(1, rim)] + [(1, rim)]
    edges += [(i, rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def fan_graph(n: int) -> Graph:
    """Fan on n vertices: path 1..n-1 plus hub n joined to every path vertex."""
    if n < 2:
        raise NamedGraphError("fan needs n >= 2")
    edges = [(i, i + 1) for i in range(1, n - 1)]
    edges += [(i, n) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def house_graph() -> Graph:
    """Square 1-2-3-4 with roof apex 5 above edge {3,4}."""
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (3, 5), (4, 5)])


def closed_house_graph() -> Graph:
    """House plus both diagonals of the square (so 1..4 form a clique)."""
    return Graph.from_edges(
        5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 4), (3, 5), (4, 5)]
    )


def hourglass_graph() -> Graph:
    """Two triangles {1,2,5} and {3,4,5} sharing the center vertex 5."""
    return Graph.from_edges(5, [(1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)])


_FAMILIES = {
    "complete": complete_graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "complete-bipartite": complete_bipartite_graph,
    "book": book_graph,
    "complete-minus-edge": complete_minus_edge_graph,
    "star": star_graph,
    "wheel": wheel_graph,
    "fan": fan_graph,
    "house": house_graph,
    "closed-house": closed_house_graph,
    "hourglass": hourglass_graph,
}


def named_graph(spec: NamedGraphSpec | str) -> Graph:
    """Build a graph from a NamedGraphSpec or a mini-language string."""
    if isinstance(spec, str):
        spec = parse_named(spec)
    if spec.family not in _FAMILIES:
        raise NamedGraphError(f"unknown family {spec.family!r}")
    return _FAMILIES[spec.family](*spec.params)


def _check_enumeration_size(g: Graph) -> None:
    if g.n > MAX_ENUMERATION_VERTICES:
        raise ValueError(
            f"graph has {g.n} vertices; enumeration paths support at most "
            f"{MAX_ENUMERATION_VERTICES}"
        )


def enumerate_proper_colorings(
    g: Graph, q: int, first_color: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every proper coloring of g with colors 1..q, exactly once, in
    lexicographic order of the color vector.

    ``first_color`` restricts vertex 1 to a single color; the concatenation of
    the streams for first_color = 1..q equals the unrestricted stream, which
    is what parallel consumers rely on.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    _check_enumeration_size(g)
    if g.n == 0:
        yield ()
        return
    adjacency = g.adjacency
    earlier = [tuple(u - 1 for u in adjacency[v] if u - 1 < v) for v in range(g.n)]
    colors = [0] * g.n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == g.n:
            yield tuple(colors)
            return
        if v == 0 and first_color is not None:
            candidates = (first_color,)
        else:
            candidates = range(1, q + 1)
        for c in candidates:
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                yield from extend(v + 1)
        colors[v] = 0

    yield from extend(0)


def _falling(q: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= q - i
    return out


def _independent_partition_counts(g: Graph) -> dict[int, int]:
    """counts[k] = number of partitions of the vertex set into exactly k
    nonempty independent sets.  The chromatic polynomial is then
    sum_k counts[k] * (q)_k, which keeps all arithmetic in exact integers.
    """
    counts: dict[int, int] = {}
    masks = g.adjacency_masks
    class_masks: list[int] = []

    def assign(v: int) -> None:
        if v == g.n:
            k = len(class_masks)
            counts[k] = counts.get(k, 0) + 1
            return
        vbit = 1 << v
        for i, cm in enumerate(class_masks):
            if cm & masks[v] == 0:
                class_masks[i] = cm | vbit
                assign(v + 1)
                class_masks[i] = cm
        class_masks.append(vbit)
        assign(v + 1)
        class_masks.pop()

    assign(0)
    return counts


def count_proper_colorings(g: Graph, q: int) -> int:
    """Exact number of proper colorings of g with colors 1..q."""
    if q < 1:
        raise ValueError("q must be >= 1")
    _check_enumeration_size(g)
    if g.n == 0:
        return 1
    counts = _independent_partition_counts(g)
    return sum(a * _falling(q, k) for k, a in counts.items())


def clique_number(g: Graph) -> int:
    """Exact maximum clique size, by branch and bound over candidate sets."""
    if g.n == 0:
        return 0
    masks = g.adjacency_masks
    best = 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            vbit = cand & -cand
            cand ^= vbit
            v = vbit.bit_length() - 1
            if size + 1 > best:
                best = size + 1
            sub = cand & masks[v]
            if sub:
                expand(sub, size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def _greedy_coloring_bound(g: Graph) -> int:
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values(), default=0)


def _is_k_colorable(g: Graph, k: int) -> bool:
    if k >= g.n:
        return True
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    colors = [0] * g.n

    def extend(idx: int, max_used: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        used = 0
        for u in g.neighbors(v):
            if position[u] < idx:
                used |= 1 << colors[position[u]]
        # new colors are interchangeable, so trying max_used+1 covers them all
        for c in range(1, min(k, max_used + 1) + 1):
            if not used & (1 << c):
                colors[idx] = c
                if extend(idx + 1, max(max_used, c)):
                    return True
        return False

    return extend(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: clique lower bound, greedy upper bound, then
    ascending k-colorability tests by backtracking."""
    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    lo = clique_number(g)
    hi = _greedy_coloring_bound(g)
    for k in range(lo, hi):
        if _is_k_colorable(g, k):
            return k
    return hi


def _extendable(g: Graph, fixed: dict[int, int], q: int) -> bool:
    """Is there a proper q-coloring of g agreeing with ``fixed``?"""
    adjacency = g.adjacency
    free = [v for v in g.vertices() if v not in fixed]
    for u, v in g.edges:
        if u in fixed and v in fixed and fixed[u] == fixed[v]:
            return False
    assignment = dict(fixed)

    def extend(idx: int) -> bool:
        if idx == len(free):
            return True
        v = free[idx]
        taken = {assignment[u] for u in adjacency[v - 1] if u in assignment}
        for c in range(1, q + 1):
            if c not in taken:
                assignment[v] = c
                if extend(idx + 1):
                    return True
                del assignment[v]
        return False

    return extend(0)


def attainable_patterns(g: Graph, v: int, q: int) -> set[tuple[int, ...]]:
    """All neighbor-color tuples of v (in ascending-neighbor order) that occur
    in at least one proper q-coloring.

    Candidates are generated as proper colorings of the subgraph induced on
    N(v) and kept when they extend to the whole graph; no full coloring sweep
    is needed.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    _check_enumeration_size(g)
    nbrs = g.neighbors(v)
    out: set[tuple[int, ...]] = set()
    pattern: list[int] = []

    def gen(idx: int) -> None:
        if idx == len(nbrs):
            fixed = dict(zip(nbrs, pattern))
            if _extendable(g, fixed, q):
                out.add(tuple(pattern))
            return
        u = nbrs[idx]
        for c in range(1, q + 1):
            ok = True
            for j in range(idx):
                if g.has_edge(u, nbrs[j]) and pattern[j] == c:
                    ok = False
                    break
            if ok:
                pattern.append(c)
                gen(idx + 1)
                pattern.pop()

    gen(0)
    return out


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus v, relabeled to 1..n-1.

    Returns the new graph and the old-id -> new-id map for surviving vertices
    (order preserving: ids above v shift down by one).
    """
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} not in 1..{g.n}")
    relabel = {u: (u if u < v else u - 1) for u in g.vertices() if u != v}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if v not in (a, b)]
    return Graph.from_edges(g.n - 1, edges), relabel


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by their
    smallest vertex."""
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in g.vertices():
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def induced_subgraph(g: Graph, vertices: list[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertices, relabeled to 1..len(vertices)
    in their sorted order.  Returns the graph and the old -> new map."""
    ordered = sorted(set(vertices))
    relabel = {old: i + 1 for i, old in enumerate(ordered)}
    keep = set(ordered)
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if a in keep and b in keep]
    return Graph.from_edges(len(ordered), edges), relabel
