"""Exhaustive enumeration of small semigroups and theorem sweeps over them.

Tables are filled cell by cell in row-major order with values ascending, so
emission order is lexicographic in the flattened table. After every
assignment only the associativity triples that use the new cell are
re-checked; a triple is tested as soon as all four of its cells are known.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .core import FiniteSemigroup, is_associative
from .errors import UnknownTheoremId

MAX_ORDER = 5


@dataclass(frozen=True)
class EnumerationConfig:
    order: int
    up_to_iso: bool = False
    filter: str | None = None  # a classification flag name

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if self.filter is not None:
            from .classes import FLAGS
            if self.filter not in FLAGS:
                raise ValueError(f"unknown flag {self.filter!r}")


def _backtrack(n: int) -> Iterator[tuple[int, ...]]:
    N = n * n
    t = [-1] * N
    rng = range(n)

    def consistent(i: int, j: int) -> bool:
        v = t[i * n + j]
        # (x, y) = (i, j): (ij)z = i(jz)
        for z in rng:
            l = t[v * n + z]
            w = t[j * n + z]
            if l >= 0 and w >= 0:
                r = t[i * n + w]
                if r >= 0 and l != r:
                    return False
        # (y, z) = (i, j): (xi)j = x(ij)
        for x in rng:
            u = t[x * n + i]
            r = t[x * n + v]
            if u >= 0 and r >= 0:
                l = t[u * n + j]
                if l >= 0 and l != r:
                    return False
        # cell used as the outer left product: (xy)j with xy = i
        # and as the outer right product: i(yz) with yz = j
        for x in rng:
            for y in rng:
                if t[x * n + y] == i:
                    w = t[y * n + j]
                    if w >= 0:
                        r = t[x * n + w]
                        if r >= 0 and r != v:
                            return False
                if t[x * n + y] == j:
                    u = t[i * n + x]
                    if u >= 0:
                        l = t[u * n + y]
                        if l >= 0 and l != v:
                            return False
        return True

    def fill(k: int):
        if k == N:
            yield tuple(t)
            return
        i, j = divmod(k, n)
        for v in rng:
            t[k] = v
            if consistent(i, j):
                yield from fill(k + 1)
        t[k] = -1

    yield from fill(0)


def _rows(flat: Sequence[int], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def transport(flat: Sequence[int], n: int, p: Sequence[int]) -> tuple[int, ...]:
    """Relabel by the bijection p: the result has p[x]*p[y] = p[x*y]."""
    out = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            out[p[x] * n + p[y]] = p[flat[x * n + y]]
    return tuple(out)


def is_orbit_minimal(flat: Sequence[int], n: int) -> bool:
    flat = tuple(flat)
    return all(transport(flat, n, p) >= flat for p in permutations(range(n)))


def canonical_form(flat: Sequence[int], n: int) -> tuple[int, ...]:
    return min(transport(flat, n, p) for p in permutations(range(n)))


def enumerate_semigroups(cfg: EnumerationConfig) -> Iterator[FiniteSemigroup]:
    n = cfg.order
    for flat in _backtrack(n):
        if cfg.up_to_iso and not is_orbit_minimal(flat, n):
            continue
        S = FiniteSemigroup(_rows(flat, n))
        if cfg.filter is not None:
            from .classes import classify
            if not classify(S).flags[cfg.filter]:
                continue
        yield S


def brute_force_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Oracle: every binary operation on n points, kept if associative (n <= 3)."""
    if n > 3:
        raise ValueError("brute force is limited to order 3")
    for flat in product(range(n), repeat=n * n):
        rows = _rows(flat, n)
        if is_associative(rows):
            yield rows


@dataclass
class TheoremTally:
    holds: int = 0
    vacuous: int = 0
    failed: int = 0
    instances: int = 0

    def to_dict(self) -> dict:
        return {"holds": self.holds, "vacuous": self.vacuous, "failed": self.failed, "instances": self.instances}


@dataclass
class SweepReport:
    orders: list[int] = field(default_factory=list)
    semigroups: int = 0
    tallies: dict[str, TheoremTally] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    def add(self, S: FiniteSemigroup, reports) -> None:
        self.semigroups += 1
        for r in reports:
            tally = self.tallies.setdefault(r.theorem_id, TheoremTally())
            tally.instances += r.instances
            if not r.holds:
                tally.failed += 1
                self.counterexamples.append(
                    {"theorem_id": r.theorem_id, "table": [list(row) for row in S.table],
                     "witness": list(r.witness), "detail": r.detail}
                )
            elif r.vacuous:
                tally.vacuous += 1
            else:
                tally.holds += 1

    def merge(self, other: "SweepReport") -> "SweepReport":
        out = SweepReport(sorted(set(self.orders) | set(other.orders)), self.semigroups + other.semigroups)
        for tid in sorted(set(self.tallies) | set(other.tallies)):
            a = self.tallies.get(tid, TheoremTally())
            b = other.tallies.get(tid, TheoremTally())
            out.tallies[tid] = TheoremTally(a.holds + b.holds, a.vacuous + b.vacuous,
                                            a.failed + b.failed, a.instances + b.instances)
        out.counterexamples = self.counterexamples + other.counterexamples
        return out

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        cex = sorted(self.counterexamples, key=lambda c: (c["theorem_id"], c["table"], c["witness"]))
        return {
            "orders": sorted(self.orders),
            "semigroups": self.semigroups,
            "theorems": {k: self.tallies[k].to_dict() for k in sorted(self.tallies)},
            "counterexamples": cex,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"


def sweep_semigroups(semigroups: Iterable[FiniteSemigroup], checks: Sequence[str] | None = None,
                     orders: Iterable[int] = ()) -> SweepReport:
    from .verify import REGISTRY, SUPPLEMENTARY, verify

    ids = sorted(REGISTRY) if checks is None else list(checks)
    for tid in ids:
        if tid not in REGISTRY and tid not in SUPPLEMENTARY:
            raise UnknownTheoremId(tid)
    report = SweepReport(sorted(set(orders)))
    for S in semigroups:
        report.add(S, [verify(S, tid) for tid in ids])
    return report


def sweep(cfg: EnumerationConfig, checks: Sequence[str] | None = None) -> SweepReport:
    """Run theorem checks on every semigroup the config enumerates."""
    return sweep_semigroups(enumerate_semigroups(cfg), checks, [cfg.order])
