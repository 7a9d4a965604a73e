"""Component-factor decisions and deficiency witnesses.

Two factor families:

* {K2, cycle} (any cycle length >= 3): decided in polynomial time through a
  perfect matching of the bipartite double cover, with the subset-sweep
  deficiency maximizer as the certificate-producing dual route.
* {K2, odd cycle >= 5}: decided by the triangular-cactus deficiency
  criterion (exhaustive subset sweep).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import NoFactorError, ResourceLimitError
from .graph import Graph, biconnected_blocks, component_masks, mask_to_vertices
from .matching import hopcroft_karp

DEFAULT_CAP = _kernels.KERNEL_CAP

KIND_ISOLATED = "isolated"
KIND_TRIANGULAR_CACTUS = "triangular_cactus"


@dataclass(frozen=True)
class FactorCertificate:
    """Partition of V into matched pairs and cycles (length >= 3)."""

    pairs: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def parts(self):
        return [("pair", p) for p in self.pairs] + [
            ("cycle", c) for c in self.cycles
        ]

    def covered_vertices(self) -> set[int]:
        out: set[int] = set()
        for u, v in self.pairs:
            out.update((u, v))
        for cyc in self.cycles:
            out.update(cyc)
        return out

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless this is a valid spanning certificate."""
        seen: list[int] = []
        for u, v in self.pairs:
            if not g.has_edge(u, v):
                raise ValueError(f"pair ({u},{v}) is not an edge")
            seen.extend((u, v))
        for cyc in self.cycles:
            if len(cyc) < 3:
                raise ValueError(f"cycle {cyc} shorter than 3")
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                if not g.has_edge(u, v):
                    raise ValueError(f"cycle {cyc} misses edge ({u},{v})")
            seen.extend(cyc)
        if sorted(seen) != list(range(g.n)):
            raise ValueError("certificate does not partition the vertex set")

    def to_json(self):
        return {
            "pairs": [list(p) for p in self.pairs],
            "cycles": [list(c) for c in self.cycles],
        }


@dataclass(frozen=True)
class DeficiencyWitness:
    x: tuple[int, ...]
    kind: str  # KIND_ISOLATED or KIND_TRIANGULAR_CACTUS
    deficiency: int

    def to_json(self):
        return {"X": list(self.x), "kind": self.kind, "deficiency": self.deficiency}


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj_masks, dtype=np.int64) if g.n else np.zeros(0, np.int64)


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise ResourceLimitError(
            f"{what} sweeps all 2^{g.n} subsets; cap is {cap} vertices"
        )


# -- {K2, cycle}-factor -------------------------------------------------------


def has_k2_cycle_factor(g: Graph) -> bool:
    """True iff g has a spanning subgraph of K2s and cycles (length >= 3).

    Polynomial route: perfect matching in the bipartite double cover
    (u on the left joined to v on the right for every edge uv).
    """
    if g.n == 0:
        return True
    adj = [g.neighbors(v) for v in range(g.n)]
    size, _, _ = hopcroft_karp(g.n, g.n, adj)
    return size == g.n


def extract_k2_cycle_factor(g: Graph) -> FactorCertificate:
    """Read a certificate off the double-cover matching.

    The matching defines a fixed-point-free successor map s with v adjacent
    to s(v); its 2-cycles become pairs, longer orbits become graph cycles.
    """
    if g.n == 0:
        return FactorCertificate((), ())
    adj = [g.neighbors(v) for v in range(g.n)]
    size, match_l, _ = hopcroft_karp(g.n, g.n, adj)
    if size != g.n:
        raise NoFactorError("graph has no {K2, cycle}-factor")
    pairs = []
    cycles = []
    seen = [False] * g.n
    for v in range(g.n):
        if seen[v]:
            continue
        orbit = [v]
        seen[v] = True
        u = match_l[v]
        while u != v:
            orbit.append(u)
            seen[u] = True
            u = match_l[u]
        if len(orbit) == 2:
            pairs.append((min(orbit), max(orbit)))
        else:
            cycles.append(tuple(orbit))
    return FactorCertificate(tuple(pairs), tuple(cycles))


def max_isolated_deficiency(g: Graph, cap: int = DEFAULT_CAP) -> DeficiencyWitness:
    """Maximize i(G-X) - |X| over all X (smallest-bitmask witness)."""
    _check_cap(g, cap, "isolated deficiency")
    if g.n == 0:
        return DeficiencyWitness((), KIND_ISOLATED, 0)
    d, mask = _kernels.max_iso_deficiency(_adj_array(g), g.n)
    return DeficiencyWitness(mask_to_vertices(int(mask)), KIND_ISOLATED, int(d))


# -- triangular cacti ----------------------------------------------------------


def is_triangular_cactus(g: Graph, comp_mask: int) -> bool:
    """Definition-level check: every block of the component is a triangle.

    A block on 3 vertices is necessarily a triangle; bridges show up as
    2-vertex blocks and disqualify.
    """
    verts = mask_to_vertices(comp_mask)
    if len(verts) == 1:
        return True
    sub, _ = _delete_complement(g, comp_mask)
    return all(len(b) == 3 for b in biconnected_blocks(sub))


def _delete_complement(g: Graph, keep_mask: int):
    from .graph import delete_vertices

    drop = [v for v in range(g.n) if not keep_mask >> v & 1]
    return delete_vertices(g, drop)


def count_triangular_cactus_components(g: Graph) -> int:
    """Number of components that are triangular cacti (K1 counts)."""
    return sum(1 for m in component_masks(g) if is_triangular_cactus(g, m))


def max_tc_deficiency(g: Graph, cap: int = DEFAULT_CAP) -> DeficiencyWitness:
    """Maximize c_tc(G-X) - |X| over all X (smallest-bitmask witness)."""
    _check_cap(g, cap, "triangular-cactus deficiency")
    if g.n == 0:
        return DeficiencyWitness((), KIND_TRIANGULAR_CACTUS, 0)
    d, mask = _kernels.max_tc_deficiency(_adj_array(g), g.n)
    return DeficiencyWitness(
        mask_to_vertices(int(mask)), KIND_TRIANGULAR_CACTUS, int(d)
    )


def has_k2_oddcycle_factor(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """True iff g has a spanning subgraph of K2s and odd cycles >= 5,
    i.e. no X has c_tc(G-X) > |X|. Early-exit sweep."""
    _check_cap(g, cap, "odd-cycle factor decision")
    if g.n == 0:
        return True
    adj = _adj_array(g)
    scratch = np.zeros(g.n, np.int64)
    full = (1 << g.n) - 1
    return not _kernels.tc_def_pos_exists(adj, full, scratch)
