"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails (not covered,
counterexample, failed audit), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from specfac import campaign, thresholds
from specfac.factor import (
    DisconnectedGraphError,
    OrderTooLarge,
    deficiency_check,
    find_p2_factor,
    is_covered_direct,
    is_covered_structural,
)
from specfac.families import family_instance
from specfac.generate import graph_classes
from specfac.graph import Graph, Graph6Error, GraphSizeError, graph6_decode, graph6_encode
from specfac.spectral import a_alpha, eigenvalues
from specfac.thresholds import ParameterRangeError

FAMILIES = ("complete", "path", "extremal", "claim1", "case-b1", "case-b2", "case-b3", "case-b4")


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _parse_alphas(text: str) -> tuple[float, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "/" in part:
            num, den = part.split("/")
            out.append(float(num) / float(den))
        else:
            out.append(float(part))
    if not out:
        raise UsageError("empty alpha list")
    return tuple(out)


def _parse_range(text: str) -> tuple[int, int]:
    """'14' -> (14, 14); '14:26' or '14-26' -> (14, 26)."""
    for sep in (":", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    v = int(text)
    return v, v


def _graphs_from_args(args) -> list[tuple[str, Graph]]:
    graphs: list[tuple[str, Graph]] = []
    if args.g6:
        graphs.append((args.g6, graph6_decode(args.g6)))
    if getattr(args, "input", None):
        with open(args.input) as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    graphs.append((line, graph6_decode(line)))
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        inst = family_instance(args.family, int(args.n), args.s)
        graphs.append((f"{args.family}(n={args.n}{'' if args.s is None else f', s={args.s}'})", inst.graph))
    if not graphs:
        raise UsageError("give a graph with --g6, --input or --family")
    return graphs


def cmd_spectral(args) -> int:
    alpha = float(args.alpha)
    for label, g in _graphs_from_args(args):
        spec = eigenvalues(a_alpha(g, alpha))
        print(f"{label}  n={g.n}  alpha={_fmt(alpha)}")
        print(f"rho = {_fmt(spec[0])}")
        print("spectrum = " + " ".join(_fmt(x) for x in spec))
    return 0


def cmd_check(args) -> int:
    status = 0
    for label, g in _graphs_from_args(args):
        detail: dict = {"graph": label, "graph6": graph6_encode(g), "n": g.n}
        if args.factor:
            v = deficiency_check(g)
            detail["has_p2_factor"] = v is None
            if v is None and g.n <= 16:
                detail["witness"] = find_p2_factor(g)
            if v is not None:
                detail["violation"] = v.as_dict()
            ok = v is None
            line = "has a P>=2-factor" if ok else f"no P>=2-factor: {v.kind.value} S={v.vertices} i(G-S)={v.isolated} > {v.bound}"
        else:
            v = is_covered_structural(g)
            ok = v is None
            detail["covered"] = ok
            if v is not None:
                detail["violation"] = v.as_dict()
            if args.direct:
                detail["direct"] = is_covered_direct(g)
            line = "P>=2-factor covered" if ok else f"not covered: {v.kind.value} S={v.vertices} i(G-S)={v.isolated} > {v.bound}"
        print(f"{label}: {line}")
        if args.json:
            print(json.dumps(detail, sort_keys=True))
        if not ok:
            status = 1
    return status


def _config_from_args(args, mode: str) -> campaign.CampaignConfig:
    defaults = {
        "random": ("14", "0"),
        "exhaustive": ("1:7", "0"),
        "families": ("14:26", "0,0.25,0.5,0.7,0.75,0.8"),
        "audit": ("14:30", ",".join(repr(a) for a in thresholds.DEFAULT_ALPHAS)),
    }[mode]
    n_lo, n_hi = _parse_range(args.n or defaults[0])
    return campaign.CampaignConfig(
        mode=mode,
        n_min=n_lo,
        n_max=n_hi,
        alphas=_parse_alphas(args.alpha or defaults[1]),
        trials=args.trials,
        seed=args.seed,
        p=args.p,
        out=args.out,
        fmt=args.format,
        workers=args.threads,
    )


def _emit(report: campaign.Report, args) -> None:
    if args.out:
        report.write(args.out)
    elif args.print_report:
        sys.stdout.write(report.dumps())
    print(json.dumps({"mode": report.config.mode, "seed": report.config.seed, **report.summary}, sort_keys=True))


def cmd_verify(args) -> int:
    cfg = _config_from_args(args, args.mode)
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = campaign.run(cfg)
    _emit(report, args)
    return 0 if report.ok else 1


def cmd_audit(args) -> int:
    cfg = _config_from_args(args, "audit")
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = campaign.run(cfg)
    if not args.out and not args.print_report:
        print(f"{'n':>3} {'alpha':>8} {'eta':>18} {'rho(extremal)':>18} {'|diff|':>10}")
        for row in report.sharpness:
            print(f"{row.n:>3} {row.alpha:>8.4g} {row.eta:>18.12f} {row.rho_extremal:>18.12f} {row.difference:>10.2e}")
        failed = [a for a in report.audit if not a.passed]
        print(f"audit: {len(report.audit)} reports, {len(failed)} failed")
        for a in failed:
            print(f"  FAIL {a.claim} n={a.n} s={a.s} alpha={a.alpha:g} value={a.value:.6g} expected {a.sign}")
    _emit(report, args)
    return 0 if report.ok else 1


def _cmd_threshold(which: str):
    fn = thresholds.eta if which == "eta" else thresholds.theta

    def run(args) -> int:
        n = int(args.n) if args.n is not None else None
        if n is None:
            raise UsageError(f"{which} needs --n")
        for a in _parse_alphas(args.alpha or "0"):
            in_domain = thresholds.meets_order_bound(n, a)
            value = fn(n, a, check_domain=False)
            flag = "" if in_domain else f"  (below f(alpha) = {thresholds.f_alpha(a):g})"
            print(f"{which}({n}, {_fmt(a)}) = {_fmt(value)}{flag}")
        return 0

    return run


def cmd_enumerate(args) -> int:
    lo, hi = _parse_range(args.n or "1:7")
    for n in range(lo, hi + 1):
        for g in graph_classes(n, connected=not args.all):
            print(graph6_encode(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specfac", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("--g6", help="graph in graph6 format")
        p.add_argument("--input", help="file with one graph6 string per line")
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--n")
        p.add_argument("--s", type=int)

    p = sub.add_parser("spectral", help="A_alpha spectral radius and spectrum")
    graph_opts(p)
    p.add_argument("--alpha", default="0")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("check", help="P>=2-factor coveredness (or factor existence)")
    graph_opts(p)
    p.add_argument("--factor", action="store_true", help="only test for a P>=2-factor")
    p.add_argument("--direct", action="store_true", help="also run the direct path-cover search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    def campaign_opts(p):
        p.add_argument("--n", help="order or range lo:hi")
        p.add_argument("--alpha", help="comma-separated alpha list; fractions like 2/3 allowed")
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--p", type=float, default=0.5)
        p.add_argument("--out")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--print-report", action="store_true", help="write the full report to stdout")
        p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--mode", choices=campaign.MODES, default="random")
    campaign_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="sign audit and sharpness table")
    campaign_opts(p)
    p.set_defaults(func=cmd_audit)

    for which in ("eta", "theta"):
        p = sub.add_parser(which, help=f"{which}(n) for one or more alpha")
        p.add_argument("--n", required=True)
        p.add_argument("--alpha", default="0")
        p.set_defaults(func=_cmd_threshold(which))

    p = sub.add_parser("enumerate", help="print one graph6 per isomorphism class")
    p.add_argument("--n")
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if hasattr(args, "threads") and args.threads is None:
        from specfac.factor import default_workers

        args.threads = default_workers()
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphSizeError, ParameterRangeError, DisconnectedGraphError, OrderTooLarge, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
