"""Run registered theorem checks over every semigroup up to a given order.

    python scripts/run_sweep.py --max-order 4 --out sweep.json
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from hsemi.enumeration import EnumerationConfig, SweepReport, sweep


@dataclass(frozen=True)
class SweepRun:
    max_order: int = 4
    up_to_iso: bool = False
    checks: tuple[str, ...] = field(default_factory=tuple)  # empty means the full registry
    out: str | None = None


def run(cfg: SweepRun) -> SweepReport:
    report = SweepReport()
    for n in range(1, cfg.max_order + 1):
        t0 = time.perf_counter()
        part = sweep(EnumerationConfig(n, cfg.up_to_iso), list(cfg.checks) or None)
        print(f"order {n}: {part.semigroups} semigroups, {len(part.counterexamples)} failures, "
              f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)
        report = report.merge(part)
    return report


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=SweepRun.max_order)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--check", action="append", default=[], help="theorem id (repeatable)")
    p.add_argument("--out")
    a = p.parse_args()
    cfg = SweepRun(a.max_order, a.up_to_iso, tuple(a.check), a.out)
    report = run(cfg)
    text = report.to_json()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    for tid, tally in sorted(report.tallies.items()):
        if tally.failed:
            print(f"{tid}: {tally.failed} failing semigroups", file=sys.stderr)
    if not cfg.out:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
