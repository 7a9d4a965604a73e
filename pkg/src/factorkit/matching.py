"""Hopcroft-Karp maximum matching on bipartite graphs.

Deterministic: adjacency lists are taken in the given order and BFS/DFS
visit vertices in increasing index order, so repeated runs (and certificate
extraction built on top) always produce the same matching.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

_INF = -1


def hopcroft_karp(
    n_left: int, n_right: int, adj: Sequence[Sequence[int]]
) -> tuple[int, list[int], list[int]]:
    """Maximum matching; adj[u] lists the right-neighbors of left vertex u.

    Returns (size, match_left, match_right) with -1 for unmatched vertices.
    """
    match_l = [_INF] * n_left
    match_r = [_INF] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == _INF:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == _INF:
                    reachable_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return reachable_free

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w == _INF or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = _INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_l[u] == _INF and dfs(u):
                size += 1
    return size, match_l, match_r
