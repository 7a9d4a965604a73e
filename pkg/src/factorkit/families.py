"""Extremal graph families built from a clique joined to small components.

Each family carries closed-form expectations (connectivity, isolated
toughness, sometimes toughness, and a negative criticality claim) that
check_family recomputes from scratch and compares claim by claim.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .criticality import FactorKind, is_n_factor_critical_avoidable
from .graph import (
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    join,
    vertex_connectivity,
)
from .invariants import DEFAULT_CAP, isolated_toughness, toughness
from .rational import format_rational


class Family(enum.IntEnum):
    """Identifier matching the CLI's --remark flag."""

    R1 = 1
    R2 = 2
    R4 = 4


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        if self.n < self.k + 1:
            raise ValueError(
                f"family requires n >= k+1, got n={self.n}, k={self.k}"
            )


@dataclass(frozen=True)
class FamilyExpectation:
    connectivity: int
    isolated_toughness: Fraction
    toughness: Optional[Fraction]
    critical_kind: FactorKind
    critical_n: int
    critical_expected: bool  # always False: the families are tight

    def to_json(self):
        return {
            "connectivity": self.connectivity,
            "isolated_toughness": format_rational(self.isolated_toughness),
            "toughness": (
                format_rational(self.toughness) if self.toughness else None
            ),
            "critical": {
                "kind": self.critical_kind.value,
                "n": self.critical_n,
                "expected": self.critical_expected,
            },
        }


def build_family(spec: FamilySpec) -> tuple[Graph, FamilyExpectation]:
    """Construct the family graph and its closed-form claims.

    R1: K_{n+k+3} + ((k+2)K1 u K2); R2: K_{n+k+2} + ((k+1)K1 u K2);
    R4: K_{n+k+3} + ((k+2)K3 u K2).
    """
    n, k = spec.n, spec.k
    if spec.family is Family.R1:
        outside = disjoint_union(
            [empty_graph(k + 2), complete_graph(2)]
        )
        g = join(complete_graph(n + k + 3), outside)
        exp = FamilyExpectation(
            connectivity=n + k + 3,
            isolated_toughness=Fraction(n + k + 4, k + 3),
            toughness=Fraction(n + k + 4, k + 3),
            critical_kind=FactorKind.K2_CYCLES,
            critical_n=n,
            critical_expected=False,
        )
    elif spec.family is Family.R2:
        outside = disjoint_union(
            [empty_graph(k + 1), complete_graph(2)]
        )
        g = join(complete_graph(n + k + 2), outside)
        exp = FamilyExpectation(
            connectivity=n + k + 2,
            isolated_toughness=Fraction(n + k + 3, k + 2),
            toughness=None,
            critical_kind=FactorKind.K2_CYCLES,
            critical_n=n,
            critical_expected=False,
        )
    else:
        outside = disjoint_union(
            [complete_graph(3) for _ in range(k + 2)] + [complete_graph(2)]
        )
        g = join(complete_graph(n + k + 3), outside)
        exp = FamilyExpectation(
            connectivity=n + k + 3,
            isolated_toughness=Fraction(3 * (k + 3) + n - 1, k + 3),
            toughness=None,
            critical_kind=FactorKind.K2_ODD_CYCLES_5,
            critical_n=n,
            critical_expected=False,
        )
    return g, exp


@dataclass(frozen=True)
class ClaimResult:
    name: str
    expected: str
    computed: str
    passed: bool

    def to_json(self):
        return {
            "claim": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


def check_family(spec: FamilySpec, cap: int = DEFAULT_CAP) -> dict:
    """Recompute every claimed value and compare exactly.

    Returns {"family", "n", "k", "graph_n", "claims": [...], "all_pass"}.
    """
    g, exp = build_family(spec)
    claims: list[ClaimResult] = []

    kappa = vertex_connectivity(g)
    claims.append(
        ClaimResult(
            "connectivity", str(exp.connectivity), str(kappa),
            kappa == exp.connectivity,
        )
    )

    iso = isolated_toughness(g, cap=cap).value
    claims.append(
        ClaimResult(
            "isolated_toughness",
            format_rational(exp.isolated_toughness),
            format_rational(iso),
            iso == exp.isolated_toughness,
        )
    )

    if exp.toughness is not None:
        t = toughness(g, cap=cap).value
        claims.append(
            ClaimResult(
                "toughness",
                format_rational(exp.toughness),
                format_rational(t),
                t == exp.toughness,
            )
        )

    verdict = is_n_factor_critical_avoidable(
        g, exp.critical_n, exp.critical_kind, cap=cap
    )
    claims.append(
        ClaimResult(
            f"critical_avoidable(kind={exp.critical_kind.value}, "
            f"n={exp.critical_n})",
            str(exp.critical_expected),
            str(verdict.holds),
            verdict.holds == exp.critical_expected,
        )
    )

    return {
        "family": int(spec.family),
        "n": spec.n,
        "k": spec.k,
        "graph_n": g.n,
        "claims": [c.to_json() for c in claims],
        "all_pass": all(c.passed for c in claims),
    }
