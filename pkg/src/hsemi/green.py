"""Green's preorders and relations L, R, H, their classes, and trace products.

The preorders are read off the table directly: ``a <=_L b`` iff ``a == b`` or
``a = x*b`` for some x in S. The ``a == b`` disjunct plays the role of the
identity of S^1, so S^1 is never materialized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import ElementSet, FiniteSemigroup, idempotents
from .errors import InternalInconsistency, PreconditionViolated

BoolMatrix = tuple[tuple[bool, ...], ...]


def _class_ids(leq: BoolMatrix) -> tuple[int, ...]:
    n = len(leq)
    ids = [-1] * n
    nxt = 0
    for a in range(n):
        if ids[a] >= 0:
            continue
        for b in range(a, n):
            if ids[b] < 0 and leq[a][b] and leq[b][a]:
                ids[b] = nxt
        nxt += 1
    return tuple(ids)


@dataclass(frozen=True)
class GreenData:
    leqL: BoolMatrix
    leqR: BoolMatrix
    leqH: BoolMatrix
    classL: tuple[int, ...]
    classR: tuple[int, ...]
    classH: tuple[int, ...]

    def L(self, a: int, b: int) -> bool:
        return self.classL[a] == self.classL[b]

    def R(self, a: int, b: int) -> bool:
        return self.classR[a] == self.classR[b]

    def H(self, a: int, b: int) -> bool:
        return self.classH[a] == self.classH[b]

    def partition(self, kind: str) -> list[tuple[int, ...]]:
        """Classes of L, R or H as sorted tuples, ordered by least member."""
        ids = {"L": self.classL, "R": self.classR, "H": self.classH}[kind]
        blocks: dict[int, list[int]] = {}
        for a, c in enumerate(ids):
            blocks.setdefault(c, []).append(a)
        return [tuple(b) for b in blocks.values()]


def compute_green(S: FiniteSemigroup) -> GreenData:
    return S.cached("green", lambda: _compute_green(S))


def _compute_green(S: FiniteSemigroup) -> GreenData:
    t = S.table
    els = S.elements
    left = [{t[x][b] for x in els} for b in els]    # S b
    right = [{t[b][x] for x in els} for b in els]   # b S
    leqL = tuple(tuple(a == b or a in left[b] for b in els) for a in els)
    leqR = tuple(tuple(a == b or a in right[b] for b in els) for a in els)
    leqH = tuple(tuple(leqL[a][b] and leqR[a][b] for b in els) for a in els)
    return GreenData(leqL, leqR, leqH, _class_ids(leqL), _class_ids(leqR), _class_ids(leqH))


def _green(S, G):
    return G if G is not None else compute_green(S)


def h_class(S: FiniteSemigroup, G: GreenData | None, a: int) -> ElementSet:
    G = _green(S, G)
    c = G.classH[a]
    return ElementSet.of(S.order, (x for x in S.elements if G.classH[x] == c))


def set_product(S: FiniteSemigroup, *factors: Iterable[int]) -> frozenset[int]:
    """Elementwise product A*B*... of subsets (ints are treated as singletons)."""
    t = S.table
    acc = None
    for f in factors:
        fs = {f} if isinstance(f, int) else set(f)
        acc = fs if acc is None else {t[x][y] for x in acc for y in fs}
    return frozenset(acc)


def is_trace_product(S: FiniteSemigroup, G: GreenData | None, a: int, b: int) -> bool:
    """Whether a*b lies in R_a ∩ L_b.

    Checked against Clifford's criterion (L_a ∩ R_b contains an idempotent);
    a disagreement raises InternalInconsistency.
    """
    G = _green(S, G)
    ab = S.table[a][b]
    direct = G.R(ab, a) and G.L(ab, b)
    clifford = any(G.L(e, a) and G.R(e, b) for e in idempotents(S))
    if direct != clifford:
        raise InternalInconsistency(f"trace product tests disagree on ({a}, {b})")
    return direct


def h_class_product_check(S: FiniteSemigroup, G: GreenData | None, a: int, b: int) -> bool:
    """For a trace product ab, test H_a H_b = H_ab = a H_b = H_a b."""
    G = _green(S, G)
    if not is_trace_product(S, G, a, b):
        raise PreconditionViolated(f"{S.name(a)}*{S.name(b)} is not a trace product")
    Ha, Hb = h_class(S, G, a), h_class(S, G, b)
    Hab = h_class(S, G, S.table[a][b]).as_set()
    return set_product(S, Ha, Hb) == Hab == set_product(S, a, Hb) == set_product(S, Ha, b)
