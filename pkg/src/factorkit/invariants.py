"""Exact toughness and isolated toughness with optimal witness sets.

Both are minimized over all vertex subsets by a compiled bitmask sweep; the
result is an exact Fraction (or INF for complete graphs) plus the witness
that attains it, tie-broken to the smallest bitmask among optima.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .errors import ResourceLimitError
from .graph import Graph, mask_to_vertices
from .rational import INF, Rat

DEFAULT_CAP = _kernels.KERNEL_CAP


@dataclass(frozen=True)
class ToughnessResult:
    value: Rat
    witness: Optional[tuple[int, ...]]  # None iff value is INF

    def to_json(self):
        from .rational import format_rational

        return {
            "value": format_rational(self.value),
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj_masks, dtype=np.int64) if g.n else np.zeros(0, np.int64)


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise ResourceLimitError(
            f"{what} needs an exhaustive sweep over 2^{g.n} subsets; "
            f"cap is {cap} vertices"
        )


def toughness(g: Graph, cap: int = DEFAULT_CAP) -> ToughnessResult:
    """Chvatal toughness: min |S|/c(G-S) over S with c(G-S) >= 2.

    INF for complete graphs (K0 and K1 included: no feasible S exists).
    """
    if g.is_complete:
        return ToughnessResult(INF, None)
    _check_cap(g, cap, "toughness")
    s, c, mask = _kernels.toughness_opt(_adj_array(g), g.n)
    return ToughnessResult(Fraction(int(s), int(c)), mask_to_vertices(int(mask)))


def isolated_toughness(g: Graph, cap: int = DEFAULT_CAP) -> ToughnessResult:
    """min |S|/i(G-S) over S with i(G-S) >= 2; INF for complete graphs."""
    if g.is_complete:
        return ToughnessResult(INF, None)
    _check_cap(g, cap, "isolated toughness")
    s, i, mask = _kernels.isolated_toughness_opt(_adj_array(g), g.n)
    if mask < 0:
        # unreachable for simple non-complete graphs, kept as a hard error
        raise RuntimeError("no subset isolates two vertices")
    return ToughnessResult(Fraction(int(s), int(i)), mask_to_vertices(int(mask)))
