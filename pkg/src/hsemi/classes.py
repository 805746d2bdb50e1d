"""Membership in the semigroup classes studied here.

Every flag is decided by one definitional test. Equivalent
characterizations live in :mod:`hsemi.verify`, so a disagreement there points
at a single implementation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .congruence import centralizer_of_idempotents, first_incompatibility, h_relation, mu
from .core import ElementSet, FiniteSemigroup, idempotents, is_closed, restrict
from .errors import InternalInconsistency, NotClosed
from .green import GreenData, compute_green
from .inverses import (
    associates,
    group_invertible_set,
    inverses_mod_H,
    inverses_of,
)

FLAGS = (
    "regular",
    "inverse",
    "completely_regular",
    "clifford",
    "e_commutative",
    "e_semigroup",
    "orthodox",
    "solid",
    "h_commutative_HS",
    "completely_inverse",
    "h_orthodox",
    "h_inverse_closed",
    "h_cliffordian",
    "cryptic",
    "combinatorial",
    "fundamental",
)

__all__ = [
    "FLAGS",
    "ClassificationReport",
    "centralizer_of_idempotents",
    "classify",
    "first_non_h_commuting_pair",
    "is_h_commutative_set",
    "nagy_commutativity",
]


def first_non_h_commuting_pair(S: FiniteSemigroup, G: GreenData | None, X: Iterable[int]):
    G = G if G is not None else compute_green(S)
    t = S.table
    X = sorted(set(X))
    for a in X:
        for b in X:
            if not G.H(t[a][b], t[b][a]):
                return (a, b)
    return None


def is_h_commutative_set(S: FiniteSemigroup, G: GreenData | None, X: Iterable[int]) -> bool:
    """ab H ba (H of the ambient S) for all a, b in X."""
    return first_non_h_commuting_pair(S, G, X) is None


def nagy_commutativity(S: FiniteSemigroup, X: Iterable[int]) -> dict[str, bool]:
    """R-, L- and H-commutativity of the subsemigroup on X.

    For all a, b in X there must be x in X^1 with ab = bax (R), ab = xba (L),
    ab = bxa (H); x = 1 means the bare product.
    """
    X = sorted(set(X))
    if not X or not is_closed(S, X):
        raise NotClosed(f"{X} is not a subsemigroup")
    t = S.table
    r = l = h = True
    for a in X:
        for b in X:
            ab, ba = t[a][b], t[b][a]
            if ab == ba:
                continue
            r = r and any(t[ba][x] == ab for x in X)
            l = l and any(t[x][ba] == ab for x in X)
            h = h and any(t[t[b][x]][a] == ab for x in X)
    return {"r_comm": r, "l_comm": l, "h_comm": h}


# Definitional searches. Each returns None when the property holds, otherwise the
# lexicographically first witness tuple.

def _w_regular(S, G):
    for a in S.elements:
        if not associates(S, a):
            return (a,)
    return None


def _w_inverse(S, G):
    for a in S.elements:
        V = inverses_of(S, a).members
        if len(V) == 0:
            return (a,)
        if len(V) > 1:
            return (a, V[0], V[1])
    return None


def _w_completely_regular(S, G):
    HS = group_invertible_set(S, G)
    for a in S.elements:
        if a not in HS:
            return (a,)
    return None


def _w_e_commutative(S, G):
    t = S.table
    E = idempotents(S)
    for e in E:
        for f in E:
            if t[e][f] != t[f][e]:
                return (e, f)
    return None


def _w_closed(S, X):
    t = S.table
    for a in X:
        for b in X:
            if t[a][b] not in X:
                return (a, b)
    return None


def _w_h_orthodox_condition(S, G):
    """First (a, b, a', b') with a' in V(a)[H], b' in V(b)[H], b'a' not in V(ab)[H]."""
    t = S.table
    VH = [inverses_mod_H(S, G, a) for a in S.elements]
    for a in S.elements:
        for b in S.elements:
            target = VH[t[a][b]]
            for a_ in VH[a]:
                for b_ in VH[b]:
                    if t[b_][a_] not in target:
                        return (a, b, a_, b_)
    return None


def _w_h_inverse_closed(S, G):
    HS = group_invertible_set(S, G)
    for h in HS:
        for x in inverses_mod_H(S, G, h):
            if x not in HS:
                return (h, x)
    return None


def _w_combinatorial(S, G):
    for a in S.elements:
        for b in S.elements:
            if a < b and G.H(a, b):
                return (a, b)
    return None


@dataclass
class ClassificationReport:
    flags: dict[str, bool | None]
    E: ElementSet
    HS: ElementSet
    ZE: ElementSet
    counterexamples: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __getitem__(self, flag: str):
        return self.flags[flag]

    def to_dict(self, S: FiniteSemigroup) -> dict:
        names = lambda xs: [S.name(x) for x in xs]  # noqa: E731
        return {
            "order": S.order,
            "flags": {k: self.flags[k] for k in FLAGS},
            "witnesses": {"E": names(self.E), "H": names(self.HS), "Z": names(self.ZE)},
            "counterexamples": {k: names(v) for k, v in sorted(self.counterexamples.items())},
        }


# (premise, conclusion) pairs; a pair of flag tuples means conjunction
_IMPLICATIONS = [
    (("completely_inverse",), ("inverse",)),
    (("completely_regular",), ("h_orthodox",)),
    (("h_orthodox",), ("h_inverse_closed",)),
    (("inverse",), ("h_inverse_closed",)),
    (("inverse",), ("orthodox",)),
]
_EQUIVALENCES = [
    (("completely_inverse",), ("inverse", "h_orthodox")),
    (("completely_inverse",), ("inverse", "cryptic")),
    (("solid", "regular"), ("h_orthodox",)),
]


def _check_invariants(flags):
    val = lambda keys: all(flags[k] for k in keys)  # noqa: E731
    for p, c in _IMPLICATIONS:
        if val(p) and not val(c):
            raise InternalInconsistency(f"{' and '.join(p)} holds but {' and '.join(c)} fails")
    for p, c in _EQUIVALENCES:
        if val(p) != val(c):
            raise InternalInconsistency(f"{' and '.join(p)} <=> {' and '.join(c)} fails")


def classify(S: FiniteSemigroup) -> ClassificationReport:
    return S.cached("classify", lambda: _classify(S))


def _classify(S: FiniteSemigroup) -> ClassificationReport:
    G = compute_green(S)
    E = idempotents(S)
    HS = group_invertible_set(S, G)
    ZE = centralizer_of_idempotents(S)
    w: dict[str, tuple | None] = {}

    w["regular"] = _w_regular(S, G)
    w["inverse"] = _w_inverse(S, G)
    w["completely_regular"] = _w_completely_regular(S, G)
    w["clifford"] = w["inverse"] or w["completely_regular"]
    w["e_commutative"] = _w_e_commutative(S, G)
    w["e_semigroup"] = _w_closed(S, E)
    w["orthodox"] = w["regular"] or w["e_semigroup"]
    w["solid"] = _w_closed(S, HS)
    w["h_commutative_HS"] = first_non_h_commuting_pair(S, G, HS)
    w["completely_inverse"] = w["regular"] or w["h_commutative_HS"]
    w["h_orthodox"] = w["regular"] or _w_h_orthodox_condition(S, G)
    w["h_inverse_closed"] = _w_h_inverse_closed(S, G)
    w["h_cliffordian"] = w["h_commutative_HS"]
    w["cryptic"] = first_incompatibility(S, h_relation(S, G))
    w["combinatorial"] = _w_combinatorial(S, G)

    flags: dict[str, bool | None] = {k: v is None for k, v in w.items()}
    if flags["inverse"]:
        m = mu(S)
        flags["fundamental"] = m.is_identity()
        if not flags["fundamental"]:
            w["fundamental"] = next(b for b in m.blocks() if len(b) > 1)[:2]
    else:
        flags["fundamental"] = None
    _check_invariants(flags)
    counterexamples = {k: v for k, v in w.items() if v is not None}
    return ClassificationReport({k: flags[k] for k in FLAGS}, E, HS, ZE, counterexamples)


def h_commutative_as_semigroup(S: FiniteSemigroup, X: Iterable[int]) -> bool:
    """Tully-style test on the subsemigroup on X, with H computed inside X."""
    T = restrict(S, X)
    return is_h_commutative_set(T, None, T.elements)
