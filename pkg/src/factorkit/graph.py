"""Immutable simple undirected graphs on dense vertex labels 0..n-1.

Adjacency is stored as one Python-int bitmask per vertex, which keeps the
exhaustive subset kernels cheap and makes graphs hashable and safely
shareable between workers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import MissingEdgeError

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop {u}-{v} not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph; vertices are exactly 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            u, v = _normalize_edge(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adj_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        full = (1 << g.n) - 1
        for v, m in enumerate(masks):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if m & ~full:
                raise ValueError(f"adjacency of {v} out of range")
        for v in range(g.n):
            for u in _bits(masks[v]):
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")
        return g

    # -- basic accessors ---------------------------------------------------

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def adj_masks(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return _popcount(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(_popcount(m) for m in self._adj) // 2

    @property
    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self._adj[v] == full ^ (1 << v) for v in range(self.n))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def vertex_set_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


# -- constructors ----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_adj_masks([full ^ (1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """g + h: disjoint union plus all edges between the two vertex sets.

    g's vertices keep their labels; h's are shifted by g.n.
    """
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    masks = [g.adj_mask(v) | hmask for v in range(g.n)]
    masks += [(h.adj_mask(v) << g.n) | gmask for v in range(h.n)]
    return Graph.from_adj_masks(masks) if n else Graph(0)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    masks: list[int] = []
    for g in graphs:
        off = len(masks)
        masks.extend(g.adj_mask(v) << off for v in range(g.n))
    return Graph.from_adj_masks(masks)


# -- deletion --------------------------------------------------------------


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Remove a vertex set, relabel survivors densely.

    Returns (subgraph, label_map) where label_map[new] = old, so witnesses
    computed in the subgraph can be reported in the original labels.
    """
    removed = vertex_set_to_mask(vertices)
    if removed >> g.n:
        raise ValueError("vertex out of range")
    survivors = [v for v in range(g.n) if not removed >> v & 1]
    index = {old: new for new, old in enumerate(survivors)}
    masks = []
    for old in survivors:
        m = 0
        for u in _bits(g.adj_mask(old) & ~removed):
            m |= 1 << index[u]
        masks.append(m)
    return Graph.from_adj_masks(masks), tuple(survivors)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    u, v = _normalize_edge(u, v)
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u},{v}) not in graph")
    masks = list(g.adj_masks)
    masks[u] ^= 1 << v
    masks[v] ^= 1 << u
    return Graph.from_adj_masks(masks)


# -- components and connectivity -------------------------------------------


def component_masks(g: Graph, alive: int | None = None) -> list[int]:
    """Bitmasks of the connected components, ordered by smallest member."""
    if alive is None:
        alive = (1 << g.n) - 1
    adj = g.adj_masks
    out = []
    rem = alive
    while rem:
        comp = rem & -rem
        while True:
            grow = comp
            m = comp
            while m:
                b = m & -m
                m ^= b
                grow |= adj[b.bit_length() - 1]
            grow &= rem
            if grow == comp:
                break
            comp = grow
        out.append(comp)
        rem &= ~comp
    return out


def components(g: Graph) -> list[tuple[int, ...]]:
    return [mask_to_vertices(m) for m in component_masks(g)]


def isolated_count(g: Graph) -> int:
    full = (1 << g.n) - 1
    return sum(1 for v in range(g.n) if g.adj_mask(v) & full == 0)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(component_masks(g)) == 1


# -- vertex connectivity (Menger via unit-capacity max flow) ----------------


def _local_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Max number of internally vertex-disjoint s-t paths, capped at cutoff.

    Vertex-split flow network: v_in=2v, v_out=2v+1; BFS augmentation.
    """
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1 if v not in (s, t) else n
    for u, v in g.edges():
        cap[(2 * u + 1, 2 * v)] = 1
        cap[(2 * v + 1, 2 * u)] = 1
    succ: dict[int, set[int]] = {}
    for a, b in cap:
        succ.setdefault(a, set()).add(b)
        succ.setdefault(b, set()).add(a)  # residual arcs
    flow = 0
    source, sink = 2 * s + 1, 2 * t
    while flow < cutoff:
        prev = {source: -1}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in succ.get(a, ()):
                if b in prev:
                    continue
                if cap.get((a, b), 0) > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] = cap.get((a, b), 0) - 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; n-1 for complete graphs, 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete:
        return n - 1
    if not is_connected(g):
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t, best))
                if best == 0:
                    return 0
    return best


# -- biconnected blocks (Tarjan) --------------------------------------------


def biconnected_blocks(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the biconnected components (blocks), iterative Tarjan.

    Bridges appear as 2-vertex blocks. Isolated vertices yield no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    edge_stack: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = []
        disc[root] = low[root] = timer
        timer += 1
        stack.append((root, -1, iter(g.neighbors(root))))
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    verts: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.update((a, b))
                        if (a, b) == (pv, v):
                            break
                    blocks.append(tuple(sorted(verts)))
    return blocks
