"""Command-line entry point.

One subcommand per operation; stdout carries exactly one JSON document and
all human diagnostics go to stderr. Exit codes: 0 = computed and (where
applicable) the property holds, 1 = property fails, 2 = usage error
(including malformed graph6), 3 = resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from ._kernels import KERNEL_CAP
from .criticality import (
    FactorKind,
    is_n_factor_critical_avoidable,
)
from .errors import (
    FactorKitError,
    Graph6Error,
    ResourceLimitError,
    UnsupportedSizeError,
)
from .factors import (
    extract_k2_cycle_factor,
    has_k2_cycle_factor,
    has_k2_oddcycle_factor,
    max_isolated_deficiency,
    max_tc_deficiency,
)
from .families import Family, FamilySpec, build_family, check_family
from .graph import Graph, vertex_connectivity
from .graph6 import parse_graph6, write_graph6
from .harness import SCHEMA_VERSION, Campaign, report_to_json, run_campaign
from .invariants import isolated_toughness, toughness
from .rational import format_rational

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_KINDS = {
    "k2cycles": FactorKind.K2_CYCLES,
    "k2odd5": FactorKind.K2_ODD_CYCLES_5,
}


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _read_graph_arg(arg: str) -> Graph:
    """-g accepts a literal graph6 string, @file, or - for stdin."""
    if arg == "-":
        text = sys.stdin.read().strip()
    elif arg.startswith("@"):
        with open(arg[1:], "r", encoding="ascii") as fh:
            text = fh.read().strip()
    else:
        text = arg
    return parse_graph6(text)


def _parse_range(text: str) -> list[int]:
    """'2' -> [2]; '0..3' -> [0, 1, 2, 3]."""
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-g", "--graph", required=True, metavar="G6",
        help="graph6 string, @file, or - for stdin",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ftk", description="component-factor toolkit"
    )
    ap.add_argument(
        "--version", action="version",
        version=f"ftk {__version__} (schema {SCHEMA_VERSION}, "
        f"subset-sweep cap {KERNEL_CAP} vertices)",
    )
    ap.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1,
        help="worker threads (results are identical for any value)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="toughness, isolated toughness, connectivity")
    _add_graph_arg(p)

    p = sub.add_parser("factor", help="decide factor existence")
    _add_graph_arg(p)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--certificate", action="store_true",
                   help="include an explicit factor (k2cycles only)")

    p = sub.add_parser("deficiency", help="maximize the deficiency over X")
    _add_graph_arg(p)
    p.add_argument("--kind", choices=["iso", "tc"], required=True)

    p = sub.add_parser("critical", help="(F, n)-factor-critical-avoidable test")
    _add_graph_arg(p)
    p.add_argument("-n", type=int, required=True, dest="crit_n",
                   help="number of deleted vertices")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)

    p = sub.add_parser("family", help="build or check an extremal family graph")
    p.add_argument("--remark", type=int, choices=[1, 2, 4], required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="recompute and compare every claimed value")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--theorem", choices=["t1", "t2t", "t2i"], required=True)
    p.add_argument("--n", default="0", help="range, e.g. 0 or 0..2")
    p.add_argument("--k", default="0", help="range, e.g. 0 or 0..1")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--exhaustive", type=int, metavar="MAXV")
    grp.add_argument("--gnp", metavar="V,P,COUNT",
                     help="e.g. 12,3/4,1000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="also write the report to this file")

    p = sub.add_parser("codec", help="graph6 round-trip check")
    p.add_argument("--roundtrip", required=True, metavar="G6")

    return ap


def _cmd_invariants(args) -> int:
    g = _read_graph_arg(args.graph)
    t = toughness(g)
    iso = isolated_toughness(g)
    _emit({
        "n": g.n,
        "edges": g.edge_count,
        "toughness": t.to_json(),
        "isolated_toughness": iso.to_json(),
        "connectivity": vertex_connectivity(g),
    })
    return EXIT_OK


def _cmd_factor(args) -> int:
    g = _read_graph_arg(args.graph)
    kind = _KINDS[args.kind]
    payload: dict = {"kind": args.kind}
    if kind is FactorKind.K2_CYCLES:
        exists = has_k2_cycle_factor(g)
        payload["exists"] = exists
        if exists and args.certificate:
            payload["certificate"] = extract_k2_cycle_factor(g).to_json()
        if not exists:
            payload["witness"] = max_isolated_deficiency(g).to_json()
    else:
        if args.certificate:
            print("note: --certificate is only available for k2cycles",
                  file=sys.stderr)
        exists = has_k2_oddcycle_factor(g)
        payload["exists"] = exists
        if not exists:
            payload["witness"] = max_tc_deficiency(g).to_json()
    _emit(payload)
    return EXIT_OK if exists else EXIT_FAILS


def _cmd_deficiency(args) -> int:
    g = _read_graph_arg(args.graph)
    if args.kind == "iso":
        w = max_isolated_deficiency(g)
    else:
        w = max_tc_deficiency(g)
    _emit(w.to_json())
    return EXIT_OK


def _cmd_critical(args) -> int:
    g = _read_graph_arg(args.graph)
    verdict = is_n_factor_critical_avoidable(g, args.crit_n, _KINDS[args.kind])
    _emit(verdict.to_json())
    return EXIT_OK if verdict.holds else EXIT_FAILS


def _cmd_family(args) -> int:
    spec = FamilySpec(Family(args.remark), args.n, args.k)
    if args.check:
        report = check_family(spec)
        _emit(report)
        return EXIT_OK if report["all_pass"] else EXIT_FAILS
    g, exp = build_family(spec)
    _emit({
        "graph6": write_graph6(g),
        "n_vertices": g.n,
        "expectation": exp.to_json(),
    })
    return EXIT_OK


def _cmd_verify(args) -> int:
    campaigns = []
    for n in _parse_range(args.n):
        for k in _parse_range(args.k):
            if args.exhaustive is not None:
                campaigns.append(Campaign(
                    theorem=args.theorem, n=n, k=k, mode="exhaustive",
                    max_vertices=args.exhaustive, seed=args.seed,
                    threads=args.threads,
                ))
            else:
                v_s, p_s, cnt_s = args.gnp.split(",")
                campaigns.append(Campaign(
                    theorem=args.theorem, n=n, k=k, mode="gnp",
                    gnp_vertices=int(v_s), gnp_p=Fraction(p_s),
                    gnp_count=int(cnt_s), seed=args.seed,
                    threads=args.threads,
                ))
    reports = [run_campaign(c) for c in campaigns]
    doc = {"schema": SCHEMA_VERSION, "campaigns": reports}
    text = report_to_json(doc)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    sys.stdout.write(text)
    failed = any(r["counterexample"] is not None for r in reports)
    return EXIT_FAILS if failed else EXIT_OK


def _cmd_codec(args) -> int:
    g = parse_graph6(args.roundtrip)
    encoded = write_graph6(g)
    _emit({
        "graph6": encoded,
        "n": g.n,
        "edges": g.edge_count,
        "roundtrip": encoded == args.roundtrip,
    })
    return EXIT_OK if encoded == args.roundtrip else EXIT_FAILS


_COMMANDS = {
    "invariants": _cmd_invariants,
    "factor": _cmd_factor,
    "deficiency": _cmd_deficiency,
    "critical": _cmd_critical,
    "family": _cmd_family,
    "verify": _cmd_verify,
    "codec": _cmd_codec,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (Graph6Error, UnsupportedSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError, FactorKitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
