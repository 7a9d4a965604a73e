"""Verification campaigns over enumerated and sampled graph spaces.

A campaign fixes a hypothesis (connectivity bound plus a strict rational
toughness or isolated-toughness inequality) and a conclusion (a
critical-avoidable property), then scans a graph space checking that every
hypothesis-satisfying graph verifies the conclusion. Any counterexample is
dumped with a full violation witness.

Exhaustive mode enumerates edge masks in graph6 column-major edge order, so
a reported mask converts directly to a graph6 string. Work is split into
fixed-size chunks merged in chunk order, which makes reports byte-identical
regardless of the thread count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .criticality import FactorKind, is_n_factor_critical_avoidable
from .graph import Graph, vertex_connectivity
from .graph6 import mask_to_graph, write_graph6, write_graph6_mask
from .invariants import DEFAULT_CAP, isolated_toughness, toughness
from .rational import INF, format_rational

SCHEMA_VERSION = 1

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

THEOREMS = ("t1", "t2t", "t2i")

_CHUNK_BITS = 22  # exhaustive masks per work item


def _mix64(x: int) -> int:
    """splitmix64 finalizer; full-period 64-bit mixing."""
    x &= _MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return x ^ (x >> 31)


def sample_gnp(n: int, p: Fraction, seed: int) -> Graph:
    """G(n, p) with a documented per-edge stream.

    Edge index i runs over pairs (u, v), u < v, in lexicographic order;
    edge i is present iff mix64(seed + (i+1)*golden) < p * 2^64, compared
    exactly in integers. Deterministic given (n, p, seed).
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    num, den = p.numerator, p.denominator
    threshold_scale = num << 64
    masks = [0] * n
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            i += 1
            h = _mix64(seed + i * _GOLDEN)
            if h * den < threshold_scale:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return Graph.from_adj_masks(masks)


@dataclass(frozen=True)
class Campaign:
    """One verification run; see module docstring for the semantics."""

    theorem: str  # "t1" | "t2t" | "t2i"
    n: int
    k: int
    mode: str = "exhaustive"  # or "gnp"
    max_vertices: int = 7
    gnp_vertices: int = 12
    gnp_p: Fraction = Fraction(1, 2)
    gnp_count: int = 100
    seed: int = 0
    threads: int = 1
    cap: int = DEFAULT_CAP
    max_examples: int = 5

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}")
        if self.mode not in ("exhaustive", "gnp"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")

    @property
    def conn_req(self) -> int:
        return self.n + self.k + 3

    @property
    def uses_toughness(self) -> bool:
        return self.theorem == "t2t"

    @property
    def threshold(self) -> Fraction:
        if self.theorem == "t2i":
            return Fraction(3 * (self.k + 3) + self.n - 1, self.k + 3)
        return Fraction(self.n + self.k + 4, self.k + 3)

    @property
    def kind(self) -> FactorKind:
        if self.theorem == "t1":
            return FactorKind.K2_CYCLES
        return FactorKind.K2_ODD_CYCLES_5


def _edge_arrays(v: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays in graph6 column-major edge order."""
    eu, ev = [], []
    for b in range(1, v):
        for a in range(b):
            eu.append(a)
            ev.append(b)
    return np.array(eu, np.int64), np.array(ev, np.int64)


def _exhaustive_order(c: Campaign) -> list[tuple[int, int, int]]:
    items = []
    for v in range(1, c.max_vertices + 1):
        nmasks = 1 << (v * (v - 1) // 2)
        chunk = 1 << _CHUNK_BITS
        for lo in range(0, nmasks, chunk):
            items.append((v, lo, min(lo + chunk, nmasks)))
    return items


def _run_exhaustive(c: Campaign) -> dict:
    thr = c.threshold
    items = _exhaustive_order(c)
    edge_arrays = {v: _edge_arrays(v) for v in range(1, c.max_vertices + 1)}

    def work(item):
        v, lo, hi = item
        eu, ev = edge_arrays[v]
        examples = np.full(c.max_examples, -1, np.int64)
        total, hyp, verified, cex, nex = _kernels.campaign_sweep(
            v, lo, hi, eu, ev,
            c.conn_req, c.uses_toughness,
            thr.numerator, thr.denominator,
            c.n, c.kind is FactorKind.K2_ODD_CYCLES_5,
            examples,
        )
        return v, int(total), int(hyp), int(verified), int(cex), [
            int(m) for m in examples[: int(nex)]
        ]

    threads = max(1, c.threads)
    if threads == 1:
        results = [work(it) for it in items]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, items))

    total = hyp = verified = 0
    examples: list[str] = []
    counterexample = None
    for v, t_, h_, ver_, cex, exs in results:
        total += t_
        hyp += h_
        verified += ver_
        for m in exs:
            if len(examples) < c.max_examples:
                examples.append(write_graph6_mask(v, m))
        if cex >= 0 and counterexample is None:
            counterexample = _describe_counterexample(c, mask_to_graph(v, cex))
    return _report(c, total, hyp, verified, examples, counterexample, [], [])


def _describe_counterexample(c: Campaign, g: Graph) -> dict:
    verdict = is_n_factor_critical_avoidable(g, c.n, c.kind, cap=c.cap)
    return {
        "graph6": write_graph6(g),
        "verdict": verdict.to_json(),
    }


def _run_gnp(c: Campaign) -> dict:
    thr = c.threshold
    total = hyp = verified = 0
    records: list[dict] = []
    skips: list[dict] = []
    examples: list[str] = []
    counterexample = None
    for idx in range(c.gnp_count):
        g = sample_gnp(c.gnp_vertices, c.gnp_p, _mix64(c.seed) + idx)
        total += 1
        if g.n > c.cap:
            skips.append(
                {"index": idx, "reason": f"{g.n} vertices exceeds cap {c.cap}"}
            )
            continue
        kappa = vertex_connectivity(g)
        t = toughness(g, cap=c.cap).value
        iso = isolated_toughness(g, cap=c.cap).value
        quantity = t if c.uses_toughness else iso
        hyp_ok = kappa >= c.conn_req and quantity > thr
        record = {
            "index": idx,
            "graph6": write_graph6(g),
            "connectivity": kappa,
            "toughness": format_rational(t),
            "isolated_toughness": format_rational(iso),
            "hypothesis": hyp_ok,
            "verified": None,
        }
        if hyp_ok:
            hyp += 1
            if len(examples) < c.max_examples:
                examples.append(record["graph6"])
            verdict = is_n_factor_critical_avoidable(g, c.n, c.kind, cap=c.cap)
            record["verified"] = verdict.holds
            if verdict.holds:
                verified += 1
            elif counterexample is None:
                counterexample = {
                    "graph6": record["graph6"],
                    "verdict": verdict.to_json(),
                }
        records.append(record)
    return _report(c, total, hyp, verified, examples, counterexample, records, skips)


def _report(c, total, hyp, verified, examples, counterexample, records, skips):
    source: dict = {"mode": c.mode}
    if c.mode == "exhaustive":
        source["max_vertices"] = c.max_vertices
    else:
        source["vertices"] = c.gnp_vertices
        source["p"] = format_rational(c.gnp_p)
        source["count"] = c.gnp_count
    return {
        "schema": SCHEMA_VERSION,
        "theorem": c.theorem,
        "n": c.n,
        "k": c.k,
        "connectivity_required": c.conn_req,
        "threshold": format_rational(c.threshold),
        "threshold_on": "toughness" if c.uses_toughness else "isolated_toughness",
        "kind": c.kind.value,
        "source": source,
        "seed": c.seed,
        "summary": {
            "total": total,
            "hypothesis_satisfied": hyp,
            "verified": verified,
            "skipped": len(skips),
            "processed": total - len(skips),
            "vacuous": hyp == 0,
        },
        "examples": examples,
        "counterexample": counterexample,
        "records": records,
        "skips": skips,
    }


def run_campaign(c: Campaign) -> dict:
    """Execute the campaign; the report dict serializes deterministically."""
    if c.mode == "exhaustive":
        return _run_exhaustive(c)
    return _run_gnp(c)


def report_to_json(report: dict) -> str:
    """Canonical serialization: key-sorted, newline-terminated."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
