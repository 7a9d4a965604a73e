"""Factor-critical-avoidable decisions.

A graph is (F, n)-critical-avoidable when for every vertex set W of size n
and every edge e of G - W, the graph G - W - e still has an F-factor. The
decision enumerates all (W, e) pairs, deciding each residual graph with the
matching route (pair/cycle factors) or the deficiency sweep (odd-cycle
factors), and reports the first violating pair with a deficiency witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .errors import ResourceLimitError
from .factors import (
    DEFAULT_CAP,
    DeficiencyWitness,
    has_k2_cycle_factor,
    has_k2_oddcycle_factor,
    max_isolated_deficiency,
    max_tc_deficiency,
)
from .graph import Graph, delete_edge, delete_vertices, mask_to_vertices


class FactorKind(str, enum.Enum):
    """Which component-factor family the criticality test is about."""

    K2_CYCLES = "k2cycles"
    K2_ODD_CYCLES_5 = "k2odd5"


@dataclass(frozen=True)
class Violation:
    """A (W, e) pair whose residual graph has no factor, plus the witness."""

    w: tuple[int, ...]
    e: tuple[int, int]
    witness: DeficiencyWitness

    def to_json(self):
        return {
            "W": list(self.w),
            "e": list(self.e),
            "X": list(self.witness.x),
            "deficiency": self.witness.deficiency,
        }


@dataclass(frozen=True)
class CriticalityVerdict:
    holds: bool
    kind: FactorKind
    n: int
    violations: tuple[Violation, ...]

    @property
    def violation(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def to_json(self):
        return {
            "holds": self.holds,
            "kind": self.kind.value,
            "n": self.n,
            "violation": self.violation.to_json() if self.violation else None,
        }


def _has_factor(sub: Graph, kind: FactorKind) -> bool:
    if kind is FactorKind.K2_CYCLES:
        return has_k2_cycle_factor(sub)
    return has_k2_oddcycle_factor(sub)


def _witness(sub: Graph, kind: FactorKind, label_map) -> DeficiencyWitness:
    if kind is FactorKind.K2_CYCLES:
        w = max_isolated_deficiency(sub)
    else:
        w = max_tc_deficiency(sub)
    return DeficiencyWitness(
        tuple(label_map[v] for v in w.x), w.kind, w.deficiency
    )


def is_factor_avoidable(
    g: Graph, kind: FactorKind, cap: int = DEFAULT_CAP
) -> CriticalityVerdict:
    """n = 0 case: G - e has the factor for every edge e."""
    return is_n_factor_critical_avoidable(g, 0, kind, cap)


def is_n_factor_critical_avoidable(
    g: Graph,
    n: int,
    kind: FactorKind,
    cap: int = DEFAULT_CAP,
    all_violations: bool = False,
) -> CriticalityVerdict:
    """Check every deletion of n vertices plus one edge.

    W sets are scanned in increasing-bitmask order and edges in lexicographic
    order of their (original-label) endpoints, so the first reported
    violation is deterministic. Stops at the first violation unless
    all_violations is set.
    """
    if n < 0:
        raise ValueError("number of deleted vertices must be nonnegative")
    if g.n > cap:
        raise ResourceLimitError(
            f"criticality check on {g.n} vertices exceeds the cap of {cap}"
        )
    found: list[Violation] = []
    if n > g.n:
        return CriticalityVerdict(True, kind, n, ())
    if g.n and not all_violations:
        # compiled screen; the slow definitional loop below only runs to
        # locate the first witness once a violation is known to exist
        adj = np.array(g.adj_masks, dtype=np.int64)
        scratch = np.zeros(g.n, np.int64)
        full = (1 << g.n) - 1
        if _kernels.critical_avoidable(
            adj, g.n, full, n, kind is FactorKind.K2_ODD_CYCLES_5, scratch
        ):
            return CriticalityVerdict(True, kind, n, ())
    for wmask in _ksubsets_ascending(g.n, n):
        wverts = mask_to_vertices(wmask)
        sub, label_map = delete_vertices(g, wverts)
        for u, v in sub.edges():
            residual = delete_edge(sub, u, v)
            if _has_factor(residual, kind):
                continue
            found.append(
                Violation(
                    wverts,
                    (label_map[u], label_map[v]),
                    _witness(residual, kind, label_map),
                )
            )
            if not all_violations:
                return CriticalityVerdict(False, kind, n, tuple(found))
    return CriticalityVerdict(not found, kind, n, tuple(found))


def _ksubsets_ascending(n: int, k: int):
    """All k-subsets of {0..n-1} as bitmasks, ascending (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    limit = 1 << n
    x = (1 << k) - 1
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((x ^ r) >> 2) // c) | r
