"""Acceptance suite: one test per criterion, exact (zero-tolerance) values.

Each test prints a single "ACCEPTANCE <n>: PASS/FAIL" line before its final
assertion; under `pytest -v` the per-test PASSED/FAILED line doubles as the
machine-readable verdict. Several criteria are exhaustive sweeps and take
minutes; they are kernels, not samples, on purpose.
"""

import itertools
import json
import random
import time
from dataclasses import replace
from fractions import Fraction

import networkx as nx
import numpy as np

from factorkit import _kernels
from factorkit.criticality import FactorKind, is_n_factor_critical_avoidable
from factorkit.factors import extract_k2_cycle_factor, has_k2_cycle_factor
from factorkit.families import Family, FamilySpec, build_family, check_family
from factorkit.graph import (
    Graph,
    complete_graph,
    component_masks,
    cycle_graph,
    delete_edge,
    delete_vertices,
    vertex_connectivity,
    vertex_set_to_mask,
)
from factorkit.graph6 import (
    mask_to_graph,
    parse_graph6,
    parse_graph6_mask,
    roundtrip_mask_range,
    write_graph6,
    write_graph6_mask,
)
from factorkit.harness import Campaign, _edge_arrays, report_to_json, run_campaign, sample_gnp
from factorkit.invariants import isolated_toughness, toughness
from factorkit.rational import INF


def verdict(criterion, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    extra = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {criterion}: {status}{extra}")
    for f in failures:
        print(f"  - {f}")
    assert not failures, f"criterion {criterion}: {failures}"


def _iso_deficiency_of(g, x):
    sub, _ = delete_vertices(g, x)
    return sum(1 for v in range(sub.n) if sub.degree(v) == 0) - len(x)


def _tc_deficiency_of(g, x):
    sub, _ = delete_vertices(g, x)
    scratch = np.zeros(max(sub.n, 1), np.int64)
    adj = np.array(sub.adj_masks, np.int64) if sub.n else np.zeros(0, np.int64)
    return int(_kernels.c_tc(adj, (1 << sub.n) - 1, scratch)) - len(x)


def test_criterion_1_remark_golden_values():
    """Family golden values for (n,k) in {(1,0),(2,0),(2,1),(3,1)}.

    Exact rationals, < 10 s per parameter point. The family-1 toughness
    claim is stored as published and compared faithfully.
    """
    failures = []
    for n, k in [(1, 0), (2, 0), (2, 1), (3, 1)]:
        start = time.perf_counter()
        expected = {
            Family.R1: dict(
                t=Fraction(n + k + 4, k + 3),
                i=Fraction(n + k + 4, k + 3),
                kappa=n + k + 3,
                kind=FactorKind.K2_CYCLES,
            ),
            Family.R2: dict(
                t=None,
                i=Fraction(n + k + 3, k + 2),
                kappa=n + k + 2,
                kind=FactorKind.K2_CYCLES,
            ),
            Family.R4: dict(
                t=None,
                i=Fraction(3 * (k + 3) + n - 1, k + 3),
                kappa=n + k + 3,
                kind=FactorKind.K2_ODD_CYCLES_5,
            ),
        }
        for fam, exp in expected.items():
            g, _ = build_family(FamilySpec(fam, n, k))
            tag = f"R{int(fam)}({n},{k})"
            if exp["t"] is not None:
                t = toughness(g).value
                if t != exp["t"]:
                    failures.append(f"{tag}: t = {t}, claimed {exp['t']}")
            i = isolated_toughness(g).value
            if i != exp["i"]:
                failures.append(f"{tag}: I = {i}, expected {exp['i']}")
            kappa = vertex_connectivity(g)
            if kappa != exp["kappa"]:
                failures.append(f"{tag}: kappa = {kappa}, expected {exp['kappa']}")
            v = is_n_factor_critical_avoidable(g, n, exp["kind"])
            if v.holds:
                failures.append(f"{tag}: unexpectedly critical-avoidable")
            else:
                viol = v.violation
                residual, lm = delete_vertices(g, viol.w)
                back = {old: new for new, old in enumerate(lm)}
                residual = delete_edge(residual, back[viol.e[0]], back[viol.e[1]])
                x_local = tuple(back[u] for u in viol.witness.x)
                if exp["kind"] is FactorKind.K2_CYCLES:
                    d = _iso_deficiency_of(residual, x_local)
                else:
                    d = _tc_deficiency_of(residual, x_local)
                if d < 1:
                    failures.append(f"{tag}: witness recomputes to deficiency {d}")
        elapsed = time.perf_counter() - start
        if elapsed >= 10.0:
            failures.append(f"({n},{k}): runtime {elapsed:.1f}s exceeds 10s")
    verdict(1, failures)


def test_criterion_2_pair_cycle_oracle_equivalence():
    """Matching route == deficiency route == partition search, all graphs <= 7."""
    failures = []
    cyc_masks = np.zeros(4096, np.int64)
    cyc_roots = np.zeros(4096, np.int64)
    start = time.perf_counter()
    for n in range(1, 8):
        eu, ev = _edge_arrays(n)
        hi = 1 << (n * (n - 1) // 2)
        chunk = 1 << 21
        for lo in range(0, hi, chunk):
            bad = int(
                _kernels.theorem21_sweep(
                    n, lo, min(lo + chunk, hi), eu, ev, cyc_masks, cyc_roots
                )
            )
            if bad >= 0:
                failures.append(f"n={n}: disagreement at edge mask {bad}")
                break
    elapsed = time.perf_counter() - start
    if elapsed >= 600:
        failures.append(f"runtime {elapsed:.0f}s exceeds 10 min target")
    verdict(2, failures, f"{elapsed:.0f}s")


def test_criterion_3_odd_cycle_oracle_equivalence():
    """Cactus-deficiency criterion == explicit odd-cycle partition, <= 7."""
    failures = []
    cyc_masks = np.zeros(4096, np.int64)
    cyc_roots = np.zeros(4096, np.int64)
    start = time.perf_counter()
    for n in range(1, 8):
        eu, ev = _edge_arrays(n)
        hi = 1 << (n * (n - 1) // 2)
        chunk = 1 << 21
        for lo in range(0, hi, chunk):
            bad = int(
                _kernels.theorem31_sweep(
                    n, lo, min(lo + chunk, hi), eu, ev, cyc_masks, cyc_roots
                )
            )
            if bad >= 0:
                failures.append(f"n={n}: disagreement at edge mask {bad}")
                break
    elapsed = time.perf_counter() - start
    verdict(3, failures, f"{elapsed:.0f}s")


def test_criterion_4_theorem_campaigns():
    """Exhaustive <= 8 vertices plus 1000 seeded G(12, 3/4) samples,
    (n,k) = (0,0): zero counterexamples, nonzero hypothesis counts."""
    failures = []
    start = time.perf_counter()
    for theorem in ("t1", "t2t", "t2i"):
        c = Campaign(theorem=theorem, n=0, k=0, max_vertices=8, threads=2)
        report = run_campaign(c)
        s = report["summary"]
        if report["counterexample"] is not None:
            failures.append(f"{theorem} exhaustive: {report['counterexample']}")
        if s["hypothesis_satisfied"] == 0:
            failures.append(f"{theorem} exhaustive: vacuous run")
        if s["verified"] != s["hypothesis_satisfied"]:
            failures.append(f"{theorem} exhaustive: verification shortfall")
        g = Campaign(
            theorem=theorem, n=0, k=0, mode="gnp",
            gnp_vertices=12, gnp_p=Fraction(3, 4), gnp_count=1000, seed=20240801,
        )
        gr = run_campaign(g)
        if gr["counterexample"] is not None:
            failures.append(f"{theorem} gnp: {gr['counterexample']}")
        gs = gr["summary"]
        if gs["processed"] + gs["skipped"] != gs["total"] or gs["total"] != 1000:
            failures.append(f"{theorem} gnp: count reconciliation failed")
    elapsed = time.perf_counter() - start
    verdict(4, failures, f"{elapsed:.0f}s")


def test_criterion_5_invariant_suite():
    """t <= I on 1000 random non-complete graphs; cycle and complete-graph
    pins; every computed witness re-verified exactly."""
    failures = []
    rng = random.Random(501)
    checked = 0
    while checked < 1000:
        n = rng.randint(4, 10)
        g = sample_gnp(n, Fraction(rng.randint(1, 9), 10), rng.randrange(1 << 48))
        if g.is_complete:
            continue
        t = toughness(g)
        i = isolated_toughness(g)
        if not (t.value <= i.value):
            failures.append(f"t > I on {write_graph6(g)}")
        full = (1 << g.n) - 1
        alive = full & ~vertex_set_to_mask(t.witness)
        comps = component_masks(g, alive)
        if len(comps) < 2 or Fraction(len(t.witness), len(comps)) != t.value:
            failures.append(f"toughness witness fails on {write_graph6(g)}")
        alive_i = full & ~vertex_set_to_mask(i.witness)
        iso = sum(1 for m in component_masks(g, alive_i) if m.bit_count() == 1)
        if iso < 2 or Fraction(len(i.witness), iso) != i.value:
            failures.append(f"isolated witness fails on {write_graph6(g)}")
        checked += 1
    for n in range(4, 13):
        if toughness(cycle_graph(n)).value != 1:
            failures.append(f"t(C{n}) != 1")
    for n in range(11):
        if toughness(complete_graph(n)).value is not INF:
            failures.append(f"t(K{n}) finite")
        if isolated_toughness(complete_graph(n)).value is not INF:
            failures.append(f"I(K{n}) finite")
    verdict(5, failures)


def test_criterion_6_certificate_soundness():
    """Extract and validate a certificate on every graph <= 7 vertices that
    has a pair/cycle factor (the factor-existing instances of criterion 2)."""
    failures = []
    start = time.perf_counter()
    count = 0
    for n in range(1, 8):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])
            if not has_k2_cycle_factor(g):
                continue
            cert = extract_k2_cycle_factor(g)
            try:
                cert.validate(g)
            except ValueError as exc:
                failures.append(f"n={n} mask={mask}: {exc}")
                if len(failures) > 5:
                    verdict(6, failures)
            count += 1
    elapsed = time.perf_counter() - start
    verdict(6, failures, f"{count} certificates, {elapsed:.0f}s")


def test_criterion_7_codec_roundtrip():
    """Round-trip identity on all graphs <= 8 vertices (string-level through
    n = 7, mask-level for the 2^28 masks of n = 8) plus the hand corpus
    cross-checked against an independent encoder."""
    failures = []
    start = time.perf_counter()
    for n in range(8):
        hi = 1 << (n * (n - 1) // 2)
        for mask in range(hi):
            text = write_graph6_mask(n, mask)
            if parse_graph6_mask(text) != (n, mask):
                failures.append(f"n={n} mask={mask} string roundtrip")
                break
    bad = roundtrip_mask_range(8, 0, 1 << 28)
    if bad != -1:
        failures.append(f"n=8 mask={bad} roundtrip")
    corpus = {"@": 1, "A_": 2, "Bw": 3, "A?": 2}
    for text, n in corpus.items():
        g = parse_graph6(text)
        if g.n != n or write_graph6(g) != text:
            failures.append(f"corpus {text!r}")
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(G, header=False).strip().decode("ascii")
        if ref != text:
            failures.append(f"corpus {text!r} disagrees with reference ({ref!r})")
    elapsed = time.perf_counter() - start
    verdict(7, failures, f"{elapsed:.0f}s")


def test_criterion_8_campaign_determinism():
    """Byte-identical reports across thread counts and reruns."""
    failures = []
    base = Campaign(theorem="t2t", n=0, k=0, max_vertices=6, threads=1, seed=7)
    texts = {
        th: report_to_json(run_campaign(replace(base, threads=th)))
        for th in (1, 2, 4)
    }
    if len(set(texts.values())) != 1:
        failures.append("exhaustive report differs across --threads")
    gnp = Campaign(
        theorem="t1", n=0, k=0, mode="gnp",
        gnp_vertices=10, gnp_p=Fraction(1, 2), gnp_count=50, seed=99, threads=1,
    )
    a = report_to_json(run_campaign(gnp))
    b = report_to_json(run_campaign(replace(gnp, threads=3)))
    if a != b:
        failures.append("gnp report differs across --threads")
    if a != report_to_json(run_campaign(gnp)):
        failures.append("gnp report differs across reruns")
    verdict(8, failures)
