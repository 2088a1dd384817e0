"""Command-line interface.

Exit codes: 0 success, 1 verification failures found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, Sequence

from . import bounds
from .cliques import clique_profile, count_cliques
from .cycles import EXACT_LIMIT, circumference, has_cycle_through_edge_at_least, longest_cycle_through_edge
from .graph import Graph, GraphError, from_graph6, to_graph6
from .harness import (
    TARGETS,
    CampaignConfig,
    ConfigError,
    default_workers,
    merge_reports,
    records_to_csv,
    run_campaign,
)

EXIT_OK, EXIT_FAILURES, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` (inclusive) or a single integer ``"a"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_graphs(path: Optional[str]) -> Iterator[Graph]:
    stream = sys.stdin if path in (None, "-") else open(path, encoding="ascii")
    try:
        for lineno, line in enumerate(stream, 1):
            text = line.strip()
            if not text:
                continue
            try:
                yield from_graph6(text)
            except GraphError as exc:
                raise UsageError(f"line {lineno}: {exc}")
    finally:
        if stream is not sys.stdin:
            stream.close()


def cmd_construct(args) -> int:
    try:
        if args.family == "h":
            if args.a is None:
                raise UsageError("family h needs --a")
            g, spec = bounds.build_H(args.n, args.k, args.a)
        elif args.family == "x":
            g, spec = bounds.build_X(args.n, args.k)
        else:
            g, spec = bounds.build_Q(args.n, args.k)
    except bounds.ParameterError as exc:
        raise UsageError(str(exc))
    sidecar = spec.to_dict()
    sidecar["graph6"] = to_graph6(g)
    sidecar["predicted_profile"] = {str(s): c for s, c in bounds.predicted_profile(spec).items()}
    print(to_graph6(g))
    text = _dump(sidecar)
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    for g in _read_graphs(args.input):
        if args.s is not None:
            if not 1 <= args.s <= g.n:
                raise UsageError(f"clique size {args.s} outside 1..{g.n}")
            print(_dump({"graph6": to_graph6(g), "n_s": count_cliques(g, args.s), "s": args.s}))
        else:
            profile = clique_profile(g, args.method)
            print(_dump({"graph6": to_graph6(g), "profile": profile.to_list()}))
    return EXIT_OK


def cmd_cycle(args) -> int:
    if args.edge is None and not args.circumference:
        raise UsageError("give --edge u,v or --circumference")
    for g in _read_graphs(args.input):
        out = {"graph6": to_graph6(g)}
        if args.edge is not None:
            u, v = args.edge
            if not g.has_edge(u, v):
                raise UsageError(f"({u}, {v}) is not an edge of the input graph")
            report = longest_cycle_through_edge(g, u, v)
            out.update(edge=[u, v], c_e=report.length, exact=report.exact,
                       witness=list(report.witness) if report.witness else None)
            if args.at_least is not None:
                if args.at_least < 3:
                    raise UsageError("--at-least must be at least 3")
                try:
                    out["at_least"] = has_cycle_through_edge_at_least(g, u, v, args.at_least)
                except RuntimeError as exc:
                    out["at_least"] = None
                    out["note"] = str(exc)
                out["k"] = args.at_least
        else:
            report = circumference(g)
            out.update(circumference=report.length, exact=report.exact,
                       witness=list(report.witness) if report.witness else None)
            if args.at_least is not None:
                out["k"] = args.at_least
                out["at_least"] = report.length >= args.at_least if report.exact else None
        out["exact_limit"] = EXACT_LIMIT
        print(_dump(out))
    return EXIT_OK


def _edge_arg(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
        return u, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u,v, got {text!r}")


def _emit_report(data: dict, args) -> None:
    if args.csv:
        text = records_to_csv(data["records"])
    else:
        text = _dump(data)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_verify(args) -> int:
    n_range = args.n
    if n_range is None:
        n_range = {"proposition": (5, 62), "inequalities": (5, 40), "sharpness": (4, 14)}.get(
            args.target, (4, 14) if args.mode == "random" else (4, 6))
    cfg = CampaignConfig(
        target=args.target,
        mode=args.mode,
        n_range=n_range,
        k_range=args.k,
        s_range=args.s,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers if args.workers is not None else default_workers(),
        equality_cap=args.equality_cap,
        allow_n8=args.allow_n8,
    )
    try:
        report = run_campaign(cfg)
    except ConfigError as exc:
        raise UsageError(str(exc))
    _emit_report(report.to_dict(include_time=not args.no_time), args)
    return EXIT_FAILURES if report.failures else EXIT_OK


def cmd_report_merge(args) -> int:
    reports = []
    for path in args.reports:
        try:
            with open(path, encoding="utf-8") as fh:
                reports.append(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read report {path}: {exc}")
    try:
        merged = merge_reports(reports, args.equality_cap)
    except (ConfigError, KeyError) as exc:
        raise UsageError(str(exc))
    _emit_report(merged, args)
    return EXIT_FAILURES if merged["totals"].get("failures") else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquecycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit H, X or Q as graph6 plus a JSON sidecar")
    p.add_argument("family", choices=("h", "x", "q"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--sidecar", help="write the JSON sidecar here instead of stderr")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="clique profile of graph6 graphs, one per line")
    p.add_argument("input", nargs="?", help="file of graph6 lines (default stdin)")
    p.add_argument("--s", type=int, help="report only N_s")
    p.add_argument("--method", choices=("auto", "enumerate", "pivot"), default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cycle", help="longest cycle through an edge, or circumference")
    p.add_argument("input", nargs="?")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--edge", type=_edge_arg)
    group.add_argument("--circumference", action="store_true")
    p.add_argument("--at-least", type=int, dest="at_least")
    p.set_defaults(func=cmd_cycle)

    def add_output(p):
        p.add_argument("--csv", action="store_true", help="flatten records to CSV")
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--equality-cap", type=int, default=1000, dest="equality_cap")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--n", type=parse_range)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--s", type=parse_range)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--allow-n8", action="store_true", dest="allow_n8")
    p.add_argument("--no-time", action="store_true", dest="no_time",
                   help="omit wall time so repeated runs are byte-identical")
    add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report-merge", help="merge JSON campaign reports of one target")
    p.add_argument("reports", nargs="+")
    add_output(p)
    p.set_defaults(func=cmd_report_merge)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
