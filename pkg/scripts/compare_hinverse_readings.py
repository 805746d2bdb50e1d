"""Compare the two readings of "inverse modulo H" across small semigroups.

Adopted: axa H a and xax H x. Alternative: axa H a and xax H a.
Reports how often they disagree and which reading matches the
trace-product characterization.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from hsemi.enumeration import EnumerationConfig, enumerate_semigroups
from hsemi.green import compute_green, is_trace_product
from hsemi.inverses import compare_inverse_mod_H_readings


@dataclass(frozen=True)
class ReadingsRun:
    max_order: int = 4


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=ReadingsRun.max_order)
    cfg = ReadingsRun(p.parse_args().max_order)
    for n in range(1, cfg.max_order + 1):
        semigroups = differing = pairs = adopted_trace = literal_trace = 0
        for S in enumerate_semigroups(EnumerationConfig(n)):
            semigroups += 1
            diff = compare_inverse_mod_H_readings(S)
            if not diff:
                continue
            differing += 1
            G = compute_green(S)
            for a, x, in_adopted, in_literal in diff:
                pairs += 1
                trace = is_trace_product(S, G, a, x) and is_trace_product(S, G, x, a)
                adopted_trace += in_adopted == trace
                literal_trace += in_literal == trace
        print(f"order {n}: {semigroups} semigroups, {differing} where the readings differ, "
              f"{pairs} differing pairs; agreement with trace products: "
              f"adopted {adopted_trace}/{pairs}, alternative {literal_trace}/{pairs}")


if __name__ == "__main__":
    main()
