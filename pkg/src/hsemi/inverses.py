"""Associates, inverses, group inverses, their H-relaxed versions, and the
inverse of an element along another.

Notation used below: ``A(a)`` associates, ``V(a)`` inverses, ``H(S)`` the
group invertible elements, and the ``[H]`` suffix for the versions where
equality is relaxed to H-equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ElementSet, FiniteSemigroup, idempotents
from .errors import InternalInconsistency
from .green import GreenData, compute_green, h_class


def _green(S, G):
    return G if G is not None else compute_green(S)


def associates(S: FiniteSemigroup, a: int) -> ElementSet:
    t = S.table
    ta = t[a]
    return ElementSet.of(S.order, (x for x in S.elements if t[ta[x]][a] == a))


def inverses_of(S: FiniteSemigroup, a: int) -> ElementSet:
    def compute():
        t = S.table
        return ElementSet.of(
            S.order,
            (x for x in S.elements if t[t[a][x]][a] == a and t[t[x][a]][x] == x),
        )
    return S.cached(("V", a), compute)


def is_regular_element(S: FiniteSemigroup, a: int) -> bool:
    return len(associates(S, a)) > 0


def is_regular(S: FiniteSemigroup) -> bool:
    return S.cached("regular", lambda: all(is_regular_element(S, a) for a in S.elements))


def is_inverse(S: FiniteSemigroup) -> bool:
    return S.cached("inverse", lambda: all(len(inverses_of(S, a)) == 1 for a in S.elements))


def unique_inverse(S: FiniteSemigroup, a: int) -> int:
    """a^-1 in an inverse semigroup."""
    (x,) = inverses_of(S, a).members
    return x


def group_inverse(S: FiniteSemigroup, G: GreenData | None, a: int) -> int | None:
    """a# (the commuting inverse), searched inside H_a only."""
    G = _green(S, G)

    def compute():
        t = S.table
        found = [
            x for x in h_class(S, G, a)
            if t[t[a][x]][a] == a and t[t[x][a]][x] == x and t[a][x] == t[x][a]
        ]
        if len(found) > 1:
            raise InternalInconsistency(f"element {a} has several group inverses {found}")
        x = found[0] if found else None
        if (x is not None) != G.H(a, t[a][a]):
            raise InternalInconsistency(f"group inverse of {a} disagrees with the a H a^2 test")
        return x
    return S.cached(("sharp", a), compute)


def group_inverse_full_scan(S: FiniteSemigroup, a: int) -> int | None:
    """Oracle: search all of S for a commuting inverse."""
    t = S.table
    for x in S.elements:
        if t[t[a][x]][a] == a and t[t[x][a]][x] == x and t[a][x] == t[x][a]:
            return x
    return None


def group_invertible_set(S: FiniteSemigroup, G: GreenData | None = None) -> ElementSet:
    """H(S), computed as {a : a H a^2} and as the union of H_e over idempotents e."""
    G = _green(S, G)

    def compute():
        t = S.table
        by_square = ElementSet.of(S.order, (a for a in S.elements if G.H(a, t[a][a])))
        by_union = set()
        for e in idempotents(S):
            by_union |= h_class(S, G, e).as_set()
        if by_square.as_set() != by_union:
            raise InternalInconsistency("H(S) computed two ways disagrees")
        return by_square
    return S.cached("HS", compute)


def associates_mod_H(S: FiniteSemigroup, G: GreenData | None, a: int) -> ElementSet:
    """A(a)[H] = {x : axa H a}."""
    G = _green(S, G)
    t = S.table
    return ElementSet.of(S.order, (x for x in S.elements if G.H(t[t[a][x]][a], a)))


def inverses_mod_H(S: FiniteSemigroup, G: GreenData | None, a: int) -> ElementSet:
    """V(a)[H] = {x : axa H a and xax H x}."""
    G = _green(S, G)

    def compute():
        t = S.table
        return ElementSet.of(
            S.order,
            (x for x in S.elements if G.H(t[t[a][x]][a], a) and G.H(t[t[x][a]][x], x)),
        )
    return S.cached(("VH", a), compute)


def inverses_mod_H_literal(S: FiniteSemigroup, G: GreenData | None, a: int) -> ElementSet:
    """The alternative reading {x : axa H a and xax H a}, kept for diagnostics only."""
    G = _green(S, G)
    t = S.table
    return ElementSet.of(
        S.order,
        (x for x in S.elements if G.H(t[t[a][x]][a], a) and G.H(t[t[x][a]][x], a)),
    )


def compare_inverse_mod_H_readings(S: FiniteSemigroup) -> list[tuple[int, int, bool, bool]]:
    """Pairs (a, x) on which ``xax H x`` and ``xax H a`` give different answers.

    Each entry is ``(a, x, in_adopted, in_literal)``.
    """
    G = compute_green(S)
    out = []
    for a in S.elements:
        adopted = inverses_mod_H(S, G, a).as_set()
        literal = inverses_mod_H_literal(S, G, a).as_set()
        for x in S.elements:
            if (x in adopted) != (x in literal):
                out.append((a, x, x in adopted, x in literal))
    return out


@dataclass(frozen=True)
class InverseAlongResult:
    exists: bool
    value: int | None = None
    via_left: int | None = None    # (aa')# a
    via_right: int | None = None   # a (a'a)#


def inverse_along_candidates(S: FiniteSemigroup, G: GreenData | None, a_prime: int, a: int) -> list[int]:
    """Every b with b a' a = a = a a' b and b <=_H a (direct search over S)."""
    G = _green(S, G)
    t = S.table
    return [
        b for b in S.elements
        if t[t[b][a_prime]][a] == a and t[t[a][a_prime]][b] == a and G.leqH[b][a]
    ]


def inverse_along(S: FiniteSemigroup, G: GreenData | None, a_prime: int, a: int) -> InverseAlongResult:
    """The inverse of ``a_prime`` along ``a``.

    Exists iff a a' a H a. The value is computed three ways: (aa')# a,
    a (a'a)#, and a direct search for the defining equations. Any
    disagreement raises InternalInconsistency.
    """
    G = _green(S, G)
    t = S.table
    exists = G.H(t[t[a][a_prime]][a], a)
    found = inverse_along_candidates(S, G, a_prime, a)
    if len(found) > 1:
        raise InternalInconsistency(f"inverse of {a_prime} along {a} is not unique: {found}")
    if exists != bool(found):
        raise InternalInconsistency(f"existence of the inverse of {a_prime} along {a} disagrees")
    if not exists:
        return InverseAlongResult(False)
    s_left = group_inverse(S, G, t[a][a_prime])
    s_right = group_inverse(S, G, t[a_prime][a])
    if s_left is None or s_right is None:
        raise InternalInconsistency(f"aa' or a'a not group invertible for a={a}, a'={a_prime}")
    via_left = t[s_left][a]
    via_right = t[a][s_right]
    if not via_left == via_right == found[0]:
        raise InternalInconsistency(
            f"inverse of {a_prime} along {a}: (aa')#a={via_left}, a(a'a)#={via_right}, search={found[0]}"
        )
    return InverseAlongResult(True, found[0], via_left, via_right)


def thexist_conditions(S: FiniteSemigroup, G: GreenData | None, a_prime: int, a: int) -> tuple[bool, ...]:
    """The five equivalent conditions for the inverse of a' along a, each evaluated independently:

    1. a b with b a' a = a = a a' b and b <=_H a exists;
    2. a <=_R aa' and (aa')# exists;
    3. a <=_L a'a and (a'a)# exists;
    4. a a' a H a;
    5. a <=_H a a' a.
    """
    G = _green(S, G)
    t = S.table
    aa_, a_a = t[a][a_prime], t[a_prime][a]
    aa_a = t[aa_][a]
    return (
        bool(inverse_along_candidates(S, G, a_prime, a)),
        G.leqR[a][aa_] and group_inverse_full_scan(S, aa_) is not None,
        G.leqL[a][a_a] and group_inverse_full_scan(S, a_a) is not None,
        G.H(aa_a, a),
        G.leqH[a][aa_a],
    )


def check_thexist_equivalence(S: FiniteSemigroup, G: GreenData | None, a_prime: int, a: int) -> bool:
    return len(set(thexist_conditions(S, G, a_prime, a))) == 1
