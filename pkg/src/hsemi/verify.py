"""Executable checks of every claim about Green's relation H made in the theory,
run against one concrete finite semigroup at a time.

Each checker is a generator yielding ``(ok, witness, detail)`` once per
instance of the claim's quantifiers, in lexicographic order. The driver stops
at the first failing instance, so the witness is the lexicographically first
one. A checker whose hypotheses are never met yields nothing and the report is
*vacuous*, which is distinct from *holds*.

A failing report means either a bug here or a genuine refutation of the
claim; the detail string says so.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from .classes import classify, first_non_h_commuting_pair, is_h_commutative_set, nagy_commutativity
from .congruence import (
    Relation,
    centralizer_of_idempotents,
    h_relation,
    is_congruence,
    mu,
    nu,
    quotient,
    rho_K,
)
from .constructions import is_group
from .core import FiniteSemigroup, idempotents, is_closed, restrict, subsemigroup_closure
from .errors import InternalInconsistency, UnknownTheoremId
from .green import compute_green, h_class_product_check, is_trace_product, set_product
from .inverses import (
    associates_mod_H,
    group_inverse,
    group_inverse_full_scan,
    group_invertible_set,
    inverse_along,
    inverse_along_candidates,
    inverses_mod_H,
    inverses_of,
    associates,
    thexist_conditions,
    unique_inverse,
)

Instance = tuple[bool, tuple, str]


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    holds: bool
    vacuous: bool
    instances: int
    witness: tuple[str, ...] | None
    detail: str

    @property
    def status(self) -> str:
        if not self.holds:
            return "FAILS"
        return "vacuous" if self.vacuous else "holds"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "instances": self.instances,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    statement: str
    check: Callable[["Ctx"], Iterator[Instance]]


REGISTRY: dict[str, Theorem] = {}
# restricted variants of registry claims; reachable through verify() but not run by verify_all()
SUPPLEMENTARY: dict[str, Theorem] = {}


def theorem(theorem_id: str, statement: str, supplementary: bool = False):
    def register(fn):
        (SUPPLEMENTARY if supplementary else REGISTRY)[theorem_id] = Theorem(theorem_id, statement, fn)
        return fn
    return register


class Ctx:
    """Lazily computed data shared by the checkers for one semigroup."""

    def __init__(self, S: FiniteSemigroup):
        self.S = S
        self.t = S.table
        self.els = S.elements
        self.G = compute_green(S)

    @cached_property
    def flags(self):
        return classify(self.S).flags

    @cached_property
    def E(self) -> frozenset[int]:
        return idempotents(self.S).as_set()

    @cached_property
    def HS(self) -> frozenset[int]:
        return group_invertible_set(self.S, self.G).as_set()

    @cached_property
    def ZE(self) -> frozenset[int]:
        return centralizer_of_idempotents(self.S).as_set()

    @cached_property
    def sharp(self) -> list[int | None]:
        return [group_inverse(self.S, self.G, a) for a in self.els]

    @cached_property
    def V(self) -> list[frozenset[int]]:
        return [inverses_of(self.S, a).as_set() for a in self.els]

    @cached_property
    def A(self) -> list[frozenset[int]]:
        return [associates(self.S, a).as_set() for a in self.els]

    @cached_property
    def VH(self) -> list[frozenset[int]]:
        return [inverses_mod_H(self.S, self.G, a).as_set() for a in self.els]

    @cached_property
    def AH(self) -> list[frozenset[int]]:
        return [associates_mod_H(self.S, self.G, a).as_set() for a in self.els]

    @cached_property
    def Hclass(self) -> list[frozenset[int]]:
        ids = self.G.classH
        blocks: dict[int, set[int]] = {}
        for a in self.els:
            blocks.setdefault(ids[a], set()).add(a)
        return [frozenset(blocks[ids[a]]) for a in self.els]

    @cached_property
    def H_compat_on_HS(self) -> tuple | None:
        """First (a, b, c) in H(S) with a H b but not (ca H cb and ac H bc)."""
        t, H = self.t, self.G.H
        hs = sorted(self.HS)
        for a in hs:
            for b in hs:
                if H(a, b):
                    for c in hs:
                        if not (H(t[c][a], t[c][b]) and H(t[a][c], t[b][c])):
                            return (a, b, c)
        return None

    @cached_property
    def HS_is_clifford(self) -> bool:
        if not is_closed(self.S, self.HS):
            return False
        return bool(classify(restrict(self.S, self.HS)).flags["clifford"])

    @cached_property
    def quotient_by_H(self) -> FiniteSemigroup | None:
        if not self.flags["cryptic"]:
            return None
        return quotient(self.S, h_relation(self.S, self.G))

    def mul1(self, a: int, x: int | None) -> int:
        """a*x in S^1, with None standing for the adjoined identity."""
        return a if x is None else self.t[a][x]

    def lmul1(self, x: int | None, a: int) -> int:
        return a if x is None else self.t[x][a]


def _iff(ctx: Ctx, label: str, lhs: bool, rhs: bool) -> Instance:
    return (lhs == rhs, (label,), f"{label}: left side {lhs}, right side {rhs}")


def _first(pairs):
    return next(iter(pairs), None)


# ---------------------------------------------------------------- Green, basics

@theorem("G-CANCEL", "a <=_L b implies (bx = by => ax = ay) for x, y in S^1; dually for <=_R")
def _g_cancel(ctx: Ctx):
    S1 = [None, *ctx.els]
    for a in ctx.els:
        for b in ctx.els:
            if ctx.G.leqL[a][b]:
                bad = _first((x, y) for x in S1 for y in S1
                             if ctx.mul1(b, x) == ctx.mul1(b, y) and ctx.mul1(a, x) != ctx.mul1(a, y))
                yield bad is None, ("L", a, b, *(bad or ())), "a <=_L b, bx = by but ax != ay"
            if ctx.G.leqR[a][b]:
                bad = _first((x, y) for x in S1 for y in S1
                             if ctx.lmul1(x, b) == ctx.lmul1(y, b) and ctx.lmul1(x, a) != ctx.lmul1(y, a))
                yield bad is None, ("R", a, b, *(bad or ())), "a <=_R b, xb = yb but xa != ya"


@theorem("G-ELEM", "ca <=_L a, ac <=_R a, aca <=_H a; <=_L is a right and <=_R a left congruence")
def _g_elem(ctx: Ctx):
    t, G = ctx.t, ctx.G
    for a in ctx.els:
        for c in ctx.els:
            ok = G.leqL[t[c][a]][a] and G.leqR[t[a][c]][a] and G.leqH[t[t[a][c]][a]][a]
            yield ok, ("elementary", a, c), "ca <=_L a, ac <=_R a or aca <=_H a fails"
    for a in ctx.els:
        for b in ctx.els:
            for c in ctx.els:
                if G.leqL[a][b]:
                    yield G.leqL[t[a][c]][t[b][c]], ("right", a, b, c), "a <=_L b but not ac <=_L bc"
                if G.leqR[a][b]:
                    yield G.leqR[t[c][a]][t[c][b]], ("left", a, b, c), "a <=_R b but not ca <=_R cb"


@theorem("G-LREG", "b regular: a <=_L b iff a = ab'b for one (any) b' in V(b); S inverse: a L b iff a^-1 a = b^-1 b")
def _g_lreg(ctx: Ctx):
    t, G = ctx.t, ctx.G
    for b in ctx.els:
        Vb = sorted(ctx.V[b])
        if not Vb:
            continue
        for a in ctx.els:
            tests = [t[t[a][b_]][b] == a for b_ in Vb]
            ok = G.leqL[a][b] == all(tests) == any(tests)
            yield ok, ("L", a, b), "a <=_L b disagrees with a = ab'b"
            tests = [t[t[b][b_]][a] == a for b_ in Vb]
            ok = G.leqR[a][b] == all(tests) == any(tests)
            yield ok, ("R", a, b), "a <=_R b disagrees with a = bb'a"
    if ctx.flags["inverse"]:
        inv = [unique_inverse(ctx.S, a) for a in ctx.els]
        for a in ctx.els:
            for b in ctx.els:
                ok = G.L(a, b) == (t[inv[a]][a] == t[inv[b]][b])
                yield ok, ("inverse", a, b), "a L b disagrees with a^-1 a = b^-1 b"


def _is_group_set(ctx: Ctx, X) -> bool:
    return is_closed(ctx.S, X) and is_group(restrict(ctx.S, X))


@theorem("G-CLIFF", "a# exists iff a H a^2 iff H_a is a group")
def _g_cliff(ctx: Ctx):
    t = ctx.t
    for a in ctx.els:
        scan = group_inverse_full_scan(ctx.S, a)
        c1 = scan is not None
        c2 = ctx.G.H(a, t[a][a])
        c3 = _is_group_set(ctx, ctx.Hclass[a])
        ok = c1 == c2 == c3 and scan == ctx.sharp[a]
        yield ok, (a,), f"a# exists: {c1}, a H a^2: {c2}, H_a group: {c3}"


@theorem("G-REGPAIR-H", "(a, a') regular pair: aa' = a'a iff a H a'")
def _g_regpair(ctx: Ctx):
    t = ctx.t
    for a in ctx.els:
        for a_ in sorted(ctx.V[a]):
            yield (t[a][a_] == t[a_][a]) == ctx.G.H(a, a_), (a, a_), "aa' = a'a disagrees with a H a'"


@theorem("EH-UNION", "E(S)[H] = H(S) = union of H_e over idempotents e")
def _eh_union(ctx: Ctx):
    t = ctx.t
    mod_h = {x for x in ctx.els if ctx.G.H(t[x][x], x)}
    union = set().union(*(ctx.Hclass[e] for e in ctx.E))
    scan = {x for x in ctx.els if group_inverse_full_scan(ctx.S, x) is not None}
    diff = sorted((mod_h ^ union) | (mod_h ^ scan))
    yield not diff, ("set", *diff[:1]), "E(S)[H], union of H_e and {a : a# exists} differ"


# ------------------------------------------------------- inverse along an element

@theorem("IAE-DEF-UNIQ", "ba'a = a = aa'b with b <=_H a has at most one solution b")
def _iae_uniq(ctx: Ctx):
    for a_ in ctx.els:
        for a in ctx.els:
            found = inverse_along_candidates(ctx.S, ctx.G, a_, a)
            yield len(found) <= 1, (a_, a, *found[:2]), "several inverses along a"


@theorem("IAE-OUTER", "a' invertible along a iff some b has ba'b = b and b H a, and then b is the inverse")
def _iae_outer(ctx: Ctx):
    t = ctx.t
    for a_ in ctx.els:
        for a in ctx.els:
            defn = set(inverse_along_candidates(ctx.S, ctx.G, a_, a))
            outer = {b for b in ctx.els if t[t[b][a_]][b] == b and ctx.G.H(b, a)}
            yield defn == outer, (a_, a), f"definition gives {sorted(defn)}, outer form gives {sorted(outer)}"


@theorem("THEXIST", "five equivalent conditions for a'^{||a}, and b = a(a'a)# = (aa')#a")
def _thexist(ctx: Ctx):
    for a_ in ctx.els:
        for a in ctx.els:
            conds = thexist_conditions(ctx.S, ctx.G, a_, a)
            ok = len(set(conds)) == 1
            detail = f"conditions 1-5: {conds}"
            if ok:
                try:
                    inverse_along(ctx.S, ctx.G, a_, a)
                except InternalInconsistency as exc:
                    ok, detail = False, str(exc)
            yield ok, (a_, a), detail


@theorem("COR-H", "aa'a H a iff H_a a' H_a = H_a")
def _cor_h(ctx: Ctx):
    t = ctx.t
    for a in ctx.els:
        Ha = ctx.Hclass[a]
        for a_ in ctx.els:
            lhs = ctx.G.H(t[t[a][a_]][a], a)
            rhs = set_product(ctx.S, Ha, a_, Ha) == Ha
            yield lhs == rhs, (a, a_), f"aa'a H a: {lhs}, H_a a' H_a = H_a: {rhs}"


@theorem("TH-TRACE", "a' in V(a)[H] iff a'^{||a} exists and lies in V(a') iff aa' and a'a are trace products; "
                     "then H_a H_a' = H_aa' = a H_a' = H_a a'")
def _th_trace(ctx: Ctx):
    t, S, G = ctx.t, ctx.S, ctx.G
    for a in ctx.els:
        for a_ in ctx.els:
            c1 = a_ in ctx.VH[a]
            r = inverse_along(S, G, a_, a)
            c2 = r.exists and t[t[a_][r.value]][a_] == a_ and t[t[r.value][a_]][r.value] == r.value
            c3 = is_trace_product(S, G, a, a_) and is_trace_product(S, G, a_, a)
            ok = c1 == c2 == c3
            detail = f"V(a)[H]: {c1}, inverse along in V(a'): {c2}, trace products: {c3}"
            if ok and c1:
                ok = h_class_product_check(S, G, a, a_) and h_class_product_check(S, G, a_, a)
                detail = "H-class product equalities fail"
            yield ok, (a, a_), detail


@theorem("PROP-HCLASS", "a' in V(a)[H]: H_a H_a' H_a = H_a = a H_a' a")
def _prop_hclass(ctx: Ctx):
    for a in ctx.els:
        Ha = ctx.Hclass[a]
        for a_ in sorted(ctx.VH[a]):
            Ha_ = ctx.Hclass[a_]
            ok = set_product(ctx.S, Ha, Ha_, Ha) == Ha == set_product(ctx.S, a, Ha_, a)
            yield ok, (a, a_), "H-class products differ from H_a"


@theorem("PROP-SANDWICH", "a', a'' in A(a)[H]: a'a, aa' in H(S) and a'aa'' in V(a)[H]")
def _prop_sandwich(ctx: Ctx):
    t = ctx.t
    for a in ctx.els:
        AH = sorted(ctx.AH[a])
        for a1 in AH:
            for a2 in AH:
                ok = t[a1][a] in ctx.HS and t[a][a1] in ctx.HS and t[t[a1][a]][a2] in ctx.VH[a]
                yield ok, (a, a1, a2), "a'a, aa' not group invertible or a'aa'' not in V(a)[H]"


@theorem("PROP-COMM-H", "a' in V(a)[H]: a'a H aa' iff a' H a")
def _prop_comm_h(ctx: Ctx):
    t, G = ctx.t, ctx.G
    for a in ctx.els:
        for a_ in sorted(ctx.VH[a]):
            yield G.H(t[a_][a], t[a][a_]) == G.H(a_, a), (a, a_), "a'a H aa' disagrees with a' H a"


@theorem("LEM-HREG", "S regular iff A(a)[H] is nonempty for every a")
def _lem_hreg(ctx: Ctx):
    yield _iff(ctx, "regular<=>A[H] nonempty", ctx.flags["regular"], all(ctx.AH[a] for a in ctx.els))


@theorem("TH-WEAKINV", "a regular: V(a) is a singleton iff V(a)[H] lies in one H-class")
def _th_weakinv(ctx: Ctx):
    G = ctx.G
    for a in ctx.els:
        if not ctx.V[a]:
            continue
        VH = sorted(ctx.VH[a])
        one_class = all(G.H(x, VH[0]) for x in VH)
        yield (len(ctx.V[a]) == 1) == one_class, (a,), f"|V(a)| = {len(ctx.V[a])}, V(a)[H] in one H-class: {one_class}"
    rhs = all(ctx.VH[a] and all(G.H(x, min(ctx.VH[a])) for x in ctx.VH[a]) for a in ctx.els)
    yield _iff(ctx, "inverse<=>V[H] nonempty and H-unique", ctx.flags["inverse"], rhs)


# ----------------------------------------------------------- orthodox analogues

@theorem("LEM-CIISI", "if H(S) is an H-commutative set then idempotents commute")
def _lem_ciisi(ctx: Ctx):
    if ctx.flags["h_commutative_HS"]:
        yield ctx.flags["e_commutative"], ("E",), "idempotents do not commute"


@theorem("REILLY-1.3", "S regular: EE ⊆ E iff inverses of idempotents are idempotent iff (ab, b'a') is a regular pair")
def _reilly(ctx: Ctx):
    if not ctx.flags["regular"]:
        return
    t = ctx.t
    c1 = bool(ctx.flags["e_semigroup"])
    c2 = all(x in ctx.E for e in ctx.E for x in ctx.V[e])
    c3 = all(t[b_][a_] in ctx.V[t[a][b]]
             for a in ctx.els for b in ctx.els for a_ in ctx.V[a] for b_ in ctx.V[b])
    yield c1 == c2 == c3, ("orthodox",), f"conditions: {c1}, {c2}, {c3}"


def _h_orthodox_condition(ctx: Ctx) -> bool:
    t = ctx.t
    return all(t[b_][a_] in ctx.VH[t[a][b]]
               for a in ctx.els for b in ctx.els for a_ in ctx.VH[a] for b_ in ctx.VH[b])


@theorem("TH-ORTHODOX", "(a' in V(a)[H], b' in V(b)[H] => b'a' in V(ab)[H]) iff H(S) is a semigroup")
def _th_orthodox(ctx: Ctx):
    yield _iff(ctx, "V[H] antihomomorphic<=>solid", _h_orthodox_condition(ctx), ctx.flags["solid"])


@theorem("LEM-HIC-3", "S H-inverse-closed: ef regular => ef in H(S); b'a' in A(ab)[H]; b'a' in V(ab)[H]")
def _lem_hic3(ctx: Ctx):
    if ctx.flags["h_inverse_closed"]:
        yield from _hic3_parts(ctx)


@theorem("LEM-HIC-3-REGULAR", "the three parts of LEM-HIC-3 for regular H-inverse-closed S", supplementary=True)
def _lem_hic3_regular(ctx: Ctx):
    if ctx.flags["h_inverse_closed"] and ctx.flags["regular"]:
        yield from _hic3_parts(ctx)


def _hic3_parts(ctx: Ctx):
    t = ctx.t
    for e in sorted(ctx.E):
        for f in sorted(ctx.E):
            ef = t[e][f]
            if ctx.A[ef]:
                yield ef in ctx.HS, ("part1", e, f), "regular product of idempotents not group invertible"
    for a in ctx.els:
        for b in ctx.els:
            ab = t[a][b]
            for a_ in sorted(ctx.A[a]):
                for b_ in sorted(ctx.A[b]):
                    yield t[b_][a_] in ctx.AH[ab], ("part2", a, b, a_, b_), "b'a' not in A(ab)[H]"
    for a in ctx.els:
        for b in ctx.els:
            ab = t[a][b]
            for a_ in sorted(ctx.V[a]):
                for b_ in sorted(ctx.V[b]):
                    yield t[b_][a_] in ctx.VH[ab], ("part3", a, b, a_, b_), "b'a' not in V(ab)[H]"


@theorem("TH-HIC-SUFF", "H(S) a semigroup => H-inverse-closed; inverse => H-inverse-closed")
def _th_hic_suff(ctx: Ctx):
    if ctx.flags["solid"]:
        yield ctx.flags["h_inverse_closed"], ("solid",), "solid but not H-inverse-closed"
    if ctx.flags["inverse"]:
        yield ctx.flags["h_inverse_closed"], ("inverse",), "inverse but not H-inverse-closed"


@theorem("LEM-ROL", "a, b in H(S), ab = bb#ab = abaa#, ba = babb# = aa#ba => (ab)# = b#a#")
def _lem_rol(ctx: Ctx):
    t, sh = ctx.t, ctx.sharp
    for a in sorted(ctx.HS):
        for b in sorted(ctx.HS):
            ab, ba = t[a][b], t[b][a]
            aa, bb = t[a][sh[a]], t[b][sh[b]]
            if ab == t[bb][ab] == t[ab][aa] and ba == t[ba][bb] == t[aa][ba]:
                ok = ab in ctx.HS and sh[ab] == t[sh[b]][sh[a]]
                yield ok, (a, b), "(ab)# != b#a#"


@theorem("TH-ROL", "a, b in H(S) with ba H ab => ab in H(S) and (ab)# = b#a#")
def _th_rol(ctx: Ctx):
    t, sh = ctx.t, ctx.sharp
    for a in sorted(ctx.HS):
        for b in sorted(ctx.HS):
            if ctx.G.H(t[b][a], t[a][b]):
                ab = t[a][b]
                yield ab in ctx.HS and sh[ab] == t[sh[b]][sh[a]], (a, b), "(ab)# != b#a#"


@theorem("COR-CIISHO", "H(S) H-commutative => H(S) a semigroup; completely inverse => H-orthodox")
def _cor_ciisho(ctx: Ctx):
    if ctx.flags["h_commutative_HS"]:
        yield ctx.flags["solid"], ("part1",), "H(S) is H-commutative but not closed"
    if ctx.flags["completely_inverse"]:
        yield ctx.flags["h_orthodox"], ("part2",), "completely inverse but not H-orthodox"


@theorem("LEM-ROL-CONV", "a, b, ab, ba in H(S), (ab)# = b#a#, (ba)# = a#b# => ab H ba")
def _lem_rol_conv(ctx: Ctx):
    t, sh = ctx.t, ctx.sharp
    for a in sorted(ctx.HS):
        for b in sorted(ctx.HS):
            ab, ba = t[a][b], t[b][a]
            if ab in ctx.HS and ba in ctx.HS and sh[ab] == t[sh[b]][sh[a]] and sh[ba] == t[sh[a]][sh[b]]:
                yield ctx.G.H(ab, ba), (a, b), "ab and ba are not H-related"


@theorem("TH-IHOISCI", "H(S) H-commutative iff H(S) is a Clifford semigroup; "
                       "completely inverse iff inverse and H-orthodox")
def _th_ihoisci(ctx: Ctx):
    f = ctx.flags
    yield _iff(ctx, "H-commutative<=>Clifford", f["h_commutative_HS"], ctx.HS_is_clifford)
    yield _iff(ctx, "CI<=>inverse+H-orthodox", f["completely_inverse"], f["inverse"] and f["h_orthodox"])


# ------------------------------------------------- commutation and congruences

@theorem("LEM-ZINH", "S regular => Z(E(S)) ⊆ H(S)")
def _lem_zinh(ctx: Ctx):
    if ctx.flags["regular"]:
        extra = sorted(ctx.ZE - ctx.HS)
        yield not extra, ("Z-H", *extra[:1]), "central element not group invertible"


@theorem("LEM-HINZ", "H(S) H-commutative => H(S) ⊆ Z(E(S))")
def _lem_hinz(ctx: Ctx):
    if ctx.flags["h_commutative_HS"]:
        extra = sorted(ctx.HS - ctx.ZE)
        yield not extra, ("H-Z", *extra[:1]), "group invertible element not central"


@theorem("COR-COMMUT", "completely inverse iff regular and H(S) = Z(E(S))")
def _cor_commut(ctx: Ctx):
    f = ctx.flags
    yield _iff(ctx, "CI<=>regular+H(S)=Z(E)", f["completely_inverse"], f["regular"] and ctx.HS == ctx.ZE)


@theorem("TH-COMMUT", "H-Cliffordian iff H(S) ⊆ Z(E(S))")
def _th_commut(ctx: Ctx):
    yield _iff(ctx, "H-Cliffordian<=>H(S)<=Z(E)", ctx.flags["h_cliffordian"], ctx.HS <= ctx.ZE)


SUBSET_LIMIT = 12


def _subsemigroups(S: FiniteSemigroup):
    """All subsemigroups when |S| <= SUBSET_LIMIT, else closures of at most two generators."""
    if S.order <= SUBSET_LIMIT:
        for r in range(1, S.order + 1):
            for X in combinations(S.elements, r):
                if is_closed(S, X):
                    yield X
        return
    seen = set()
    for a in S.elements:
        for b in range(a, S.order):
            X = subsemigroup_closure(S, {a, b}).members
            if X not in seen:
                seen.add(X)
                yield X


@theorem("COR-SUBSGP", "inverse subsemigroups of a completely inverse semigroup are completely inverse")
def _cor_subsgp(ctx: Ctx):
    if not ctx.flags["completely_inverse"]:
        return
    for X in _subsemigroups(ctx.S):
        T = restrict(ctx.S, X)
        flags = classify(T).flags
        if flags["inverse"]:
            yield flags["completely_inverse"], X, "inverse subsemigroup is not completely inverse"


def _tully_sets(ctx: Ctx):
    yield "S", tuple(ctx.els)
    if is_closed(ctx.S, ctx.HS):
        yield "H(S)", tuple(sorted(ctx.HS))
    if is_closed(ctx.S, ctx.E):
        yield "E(S)", tuple(sorted(ctx.E))


@theorem("TH-TULLY", "a semigroup is H-commutative iff it is R- and L-commutative; "
                     "K-commutative iff K is a commutative congruence (K = R, L, H)")
def _th_tully(ctx: Ctx):
    for label, X in _tully_sets(ctx):
        T = restrict(ctx.S, X)
        nagy = nagy_commutativity(T, T.elements)
        tully = is_h_commutative_set(T, None, T.elements)
        ok = nagy["h_comm"] == (nagy["r_comm"] and nagy["l_comm"]) == tully
        yield ok, (label, "clause1"), f"Nagy flags {nagy}, Tully H-commutative {tully}"
        GT = compute_green(T)
        tt = T.table
        for kind, key in (("R", "r_comm"), ("L", "l_comm"), ("H", "h_comm")):
            ids = {"R": GT.classR, "L": GT.classL, "H": GT.classH}[kind]
            rel = Relation.from_ids(ids)
            comm_cong = is_congruence(T, rel) and all(
                ids[tt[a][b]] == ids[tt[b][a]] for a in T.elements for b in T.elements
            )
            yield nagy[key] == comm_cong, (label, "clause2", kind), f"{kind}-commutative {nagy[key]}, commutative congruence {comm_cong}"


@theorem("TH-CICONG", "completely inverse iff inverse and H is a congruence")
def _th_cicong(ctx: Ctx):
    f = ctx.flags
    yield _iff(ctx, "CI<=>inverse+cryptic", f["completely_inverse"], f["inverse"] and f["cryptic"])


@theorem("COR-LALLEMENT", "completely inverse iff inverse and H restricted to H(S) is compatible with H(S)")
def _cor_lallement(ctx: Ctx):
    f = ctx.flags
    compat = ctx.H_compat_on_HS is None
    yield _iff(ctx, "CI<=>inverse+H compatible on H(S)", f["completely_inverse"], f["inverse"] and compat)


@theorem("TH-NONREGCONG", "H compatible on H(S) and E-semigroup => solid; "
                          "H-Cliffordian iff E-commutative and H compatible on H(S)")
def _th_nonregcong(ctx: Ctx):
    f = ctx.flags
    compat = ctx.H_compat_on_HS is None
    if compat and f["e_semigroup"]:
        yield f["solid"], ("part1",), "H(S) not closed"
    yield _iff(ctx, "part2: H-Cliffordian<=>E-commutative+compatible", f["h_cliffordian"], f["e_commutative"] and compat)


@theorem("COR-QUOTIENT", "completely inverse iff cryptic and S/H inverse; then S/H is combinatorial")
def _cor_quotient(ctx: Ctx):
    f = ctx.flags
    Q = ctx.quotient_by_H
    qflags = classify(Q).flags if Q is not None else None
    rhs = Q is not None and qflags["inverse"]
    yield _iff(ctx, "CI<=>cryptic+S/H inverse", f["completely_inverse"], rhs)
    if f["completely_inverse"]:
        ok = qflags["combinatorial"] and qflags["inverse"] and qflags["completely_inverse"]
        yield ok, ("S/H",), f"S/H flags: combinatorial {qflags['combinatorial']}, inverse {qflags['inverse']}"


@theorem("COR-SELFC", "S completely inverse, a' in V(a)[H]: H_a' H(S) H_a ⊆ H(S)")
def _cor_selfc(ctx: Ctx):
    if not ctx.flags["completely_inverse"]:
        return
    for a in ctx.els:
        for a_ in sorted(ctx.VH[a]):
            prod = set_product(ctx.S, ctx.Hclass[a_], ctx.HS, ctx.Hclass[a])
            yield prod <= ctx.HS, (a, a_), "H_a' H(S) H_a leaves H(S)"


@theorem("LEM-SELFC", "H(S) H-commutative, a' in V(a)[H]: a' H(S) a ⊆ H(S)")
def _lem_selfc(ctx: Ctx):
    if not ctx.flags["h_commutative_HS"]:
        return
    t = ctx.t
    for a in ctx.els:
        for a_ in sorted(ctx.VH[a]):
            bad = _first(h for h in sorted(ctx.HS) if t[t[a_][h]][a] not in ctx.HS)
            yield bad is None, (a, a_, *([bad] if bad is not None else [])), "a'ha not group invertible"


@theorem("COR-MUNU", "S completely inverse: rho_H(S) = nu = mu = H")
def _cor_munu(ctx: Ctx):
    if not ctx.flags["completely_inverse"]:
        return
    S = ctx.S
    rels = {"rho": rho_K(S, ctx.HS), "nu": nu(S, ctx.G), "mu": mu(S), "H": h_relation(S, ctx.G)}
    differ = [k for k in ("rho", "nu", "mu") if rels[k] != rels["H"]]
    yield not differ, ("relations", *differ), f"differ from H: {differ}"


# ------------------------------------------------------------------ conclusion

@theorem("CONCL-6EQ", "six equivalent characterizations of completely inverse semigroups")
def _concl_6eq(ctx: Ctx):
    f = ctx.flags
    Q = ctx.quotient_by_H
    conds = (
        f["regular"] and f["h_commutative_HS"],
        f["regular"] and ctx.HS_is_clifford,
        f["regular"] and ctx.HS == ctx.ZE,
        f["inverse"] and f["h_orthodox"],
        f["inverse"] and f["cryptic"],
        Q is not None and bool(classify(Q).flags["inverse"]),
    )
    yield len(set(conds)) == 1 and conds[0] == f["completely_inverse"], ("conditions",), f"conditions 1-6: {conds}"


def _diag_arrows(ctx: Ctx):
    f = ctx.flags
    return [
        ("CI=>inverse", f["completely_inverse"], f["inverse"]),
        ("CI=>H-orthodox", f["completely_inverse"], f["h_orthodox"]),
        ("CI=>cryptic+inverse", f["completely_inverse"], f["cryptic"] and f["inverse"]),
        ("completely-regular=>H-orthodox", f["completely_regular"], f["h_orthodox"]),
        ("H-orthodox=>H-inverse-closed", f["h_orthodox"], f["h_inverse_closed"]),
        ("inverse=>H-inverse-closed", f["inverse"], f["h_inverse_closed"]),
        ("inverse=>orthodox", f["inverse"], f["orthodox"]),
    ]


@theorem("DIAG-IMPL", "implication arrows between the classes")
def _diag_impl(ctx: Ctx):
    for label, premise, conclusion in _diag_arrows(ctx):
        if premise:
            yield bool(conclusion), (label,), f"{label} fails"


@theorem("DIAG-JUNCTIONS", "one reading of the junction nodes: S H-commutative and regular => "
                           "completely inverse and completely regular", supplementary=True)
def _diag_junctions(ctx: Ctx):
    f = ctx.flags
    if f["regular"] and first_non_h_commuting_pair(ctx.S, ctx.G, ctx.els) is None:
        yield f["completely_inverse"], ("H-commutative+regular=>CI",), "not completely inverse"
        yield f["completely_regular"], ("H-commutative+regular=>completely-regular",), "not completely regular"


@theorem("EX-FUND", "a fundamental inverse semigroup is completely inverse iff combinatorial")
def _ex_fund(ctx: Ctx):
    f = ctx.flags
    if f["inverse"] and f["fundamental"]:
        yield _iff(ctx, "CI<=>combinatorial", f["completely_inverse"], f["combinatorial"])


# ---------------------------------------------------------------------- driver

def _names(S: FiniteSemigroup, witness) -> tuple[str, ...]:
    # None is the adjoined identity of S^1
    return tuple("1" if x is None else S.name(x) if isinstance(x, int) else str(x) for x in witness)


def _run(S: FiniteSemigroup, th: Theorem, ctx: Ctx) -> TheoremReport:
    count = 0
    try:
        for ok, witness, detail in th.check(ctx):
            count += 1
            if not ok:
                return TheoremReport(
                    th.theorem_id, False, False, count, _names(S, witness),
                    f"REFUTED ON THIS SEMIGROUP (implementation bug or counterexample to the claim): {detail}",
                )
    except InternalInconsistency as exc:
        return TheoremReport(
            th.theorem_id, False, False, count + 1, ("internal-inconsistency",),
            f"REFUTED ON THIS SEMIGROUP (independent computations disagree, implementation bug): {exc}",
        )
    if count == 0:
        return TheoremReport(th.theorem_id, True, True, 0, None, "hypotheses not met")
    return TheoremReport(th.theorem_id, True, False, count, None, f"{count} instances checked")


def _ctx(S: FiniteSemigroup) -> Ctx:
    return S.cached("verify-ctx", lambda: Ctx(S))


def verify(S: FiniteSemigroup, theorem_id: str) -> TheoremReport:
    try:
        th = REGISTRY.get(theorem_id) or SUPPLEMENTARY[theorem_id]
    except KeyError:
        raise UnknownTheoremId(theorem_id) from None
    return _run(S, th, _ctx(S))


def verify_all(S: FiniteSemigroup) -> list[TheoremReport]:
    ctx = _ctx(S)
    return [_run(S, REGISTRY[tid], ctx) for tid in sorted(REGISTRY)]
