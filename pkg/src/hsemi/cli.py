"""Command-line front end.

Exit codes: 0 success, 1 a check failed (counterexample found), 2 bad input.
``-`` reads standard input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import constructions, formats
from .classes import FLAGS, classify
from .core import FiniteSemigroup
from .enumeration import EnumerationConfig, SweepReport, enumerate_semigroups, sweep
from .errors import InternalInconsistency, SemigroupError
from .green import compute_green
from .verify import REGISTRY, SUPPLEMENTARY, verify, verify_all


def _read(path: str) -> FiniteSemigroup:
    if path == "-":
        return formats.parse(sys.stdin.read())
    return formats.load(path)


def _dump(S: FiniteSemigroup, fmt: str) -> str:
    return formats.to_json(S) if fmt == "json" else formats.to_text(S)


def cmd_analyze(args) -> int:
    S = _read(args.input)
    report = classify(S)
    d = report.to_dict(S)
    G = compute_green(S)
    d["classes"] = {k: [[S.name(x) for x in c] for c in G.partition(k)] for k in "LRH"}
    if args.format == "json":
        print(json.dumps(d))
        return 0
    print(f"order {S.order}")
    for k in FLAGS:
        v = d["flags"][k]
        cex = d["counterexamples"].get(k)
        print(f"  {k:20s} {v}" + (f"   (witness: {' '.join(cex)})" if cex else ""))
    for key in ("E", "H", "Z"):
        print(f"  {key}: {{{', '.join(d['witnesses'][key])}}}")
    for k in "LRH":
        print(f"  {k}-classes: " + " ".join("{" + ",".join(c) + "}" for c in d["classes"][k]))
    return 0


def cmd_verify(args) -> int:
    S = _read(args.input)
    reports = [verify(S, tid) for tid in args.theorem] if args.theorem else verify_all(S)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            line = f"{r.theorem_id:16s} {r.status:8s} {r.instances:6d} instances"
            if not r.holds:
                line += f"   witness: {' '.join(r.witness)}   {r.detail}"
            print(line)
    return 0 if all(r.holds for r in reports) else 1


def cmd_enumerate(args) -> int:
    orders = range(1, args.order + 1) if args.cumulative else [args.order]
    configs = [EnumerationConfig(n, args.up_to_iso, args.filter) for n in orders]
    if args.sweep:
        report = SweepReport()
        for cfg in configs:
            report = report.merge(sweep(cfg, args.theorem or None))
        sys.stdout.write(report.to_json())
        return 0 if report.ok else 1
    if args.count_only:
        for cfg in configs:
            count = sum(1 for _ in enumerate_semigroups(cfg))
            print(count if len(configs) == 1 else f"{cfg.order} {count}")
        return 0
    for cfg in configs:
        for S in enumerate_semigroups(cfg):
            if args.format == "json":
                sys.stdout.write(formats.to_json(S))
            else:
                sys.stdout.write(formats.to_text(S) + "\n")
    return 0


def build_construction(name: str, args) -> FiniteSemigroup:
    key = name.replace("_", "-")
    if key == "symmetric-inverse":
        return constructions.symmetric_inverse_monoid(args.degree)[0]
    if key == "s7":
        return constructions.paper_example_s7()
    if key == "group-adjoin":
        return constructions.group_adjoin(constructions.cyclic_group(args.group_order), args.element)
    return constructions.stock(key, *args.params)


def cmd_generate(args) -> int:
    sys.stdout.write(_dump(build_construction(args.construction, args), args.format))
    return 0


def cmd_export(args) -> int:
    sys.stdout.write(_dump(_read(args.input), args.to))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hsemi", description="Finite semigroups modulo Green's relation H.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a semigroup")
    a.add_argument("input", help="table file (text or JSON), or - for stdin")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check the registered theorems on a semigroup")
    v.add_argument("input")
    v.add_argument("--theorem", action="append", metavar="ID",
                   choices=sorted(REGISTRY) + sorted(SUPPLEMENTARY))
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="enumerate all semigroups of a given order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--cumulative", action="store_true", help="all orders 1..ORDER")
    e.add_argument("--up-to-iso", action="store_true")
    e.add_argument("--filter", choices=FLAGS, metavar="FLAG")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--sweep", action="store_true", help="run theorem checks; print a JSON sweep report")
    e.add_argument("--theorem", action="append", metavar="ID")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_enumerate)

    g = sub.add_parser("generate", help="write a named construction as a table")
    g.add_argument("--construction", required=True,
                   help="symmetric-inverse, s7, group-adjoin, " + ", ".join(
                       k.replace("_", "-") for k in constructions.STOCK))
    g.add_argument("--degree", type=int, default=2)
    g.add_argument("--group-order", type=int, default=2)
    g.add_argument("--element", type=int, default=1)
    g.add_argument("--params", type=int, nargs="*", default=[])
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_generate)

    x = sub.add_parser("export", help="re-emit a table in canonical form")
    x.add_argument("input")
    x.add_argument("--to", choices=("text", "json"), default="text")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"hsemi: internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except (SemigroupError, OSError, ValueError, TypeError) as exc:
        print(f"hsemi: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
