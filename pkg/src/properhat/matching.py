"""Hopcroft-Karp maximum matching on bipartite graphs.

Vertices are opaque hashables; the caller supplies left vertices in the order
that should drive the search, which makes the returned matching deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Sequence

INFINITY = float("inf")


def hopcroft_karp(
    lefts: Sequence[Hashable], adjacency: dict[Hashable, Sequence[Hashable]]
) -> dict[Hashable, Hashable]:
    """Maximum matching as a left -> right dict.

    ``adjacency[left]`` lists the right neighbors; list order and the order of
    ``lefts`` fix which maximum matching comes out.
    """
    match_left: dict = {}
    match_right: dict = {}
    dist: dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in lefts:
            if u not in match_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INFINITY
        found = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right.get(v)
                if w is None:
                    found = True
                elif dist[w] is INFINITY:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u) -> bool:
        for v in adjacency[u]:
            w = match_right.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INFINITY
        return False

    while bfs():
        for u in lefts:
            if u not in match_left:
                dfs(u)
    return match_left
