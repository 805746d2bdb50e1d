"""Equivalences and congruences on finite semigroups: crypticity, quotients,
and the idempotent-separating congruences mu, nu and rho_K of inverse
semigroups.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import ElementSet, FiniteSemigroup, from_table, idempotents, is_closed
from .errors import (
    BoundExceeded,
    InternalInconsistency,
    NotACongruence,
    NotAKernel,
    NotInverse,
)
from .green import GreenData, compute_green
from .inverses import group_invertible_set, is_inverse, unique_inverse


@dataclass(frozen=True)
class Relation:
    """An equivalence on 0..n-1 stored as block ids.

    Block ids are normalized so blocks are numbered by least member.
    """

    order: int
    class_id: tuple[int, ...]

    @classmethod
    def from_ids(cls, ids: Iterable[int]) -> "Relation":
        ids = list(ids)
        renum: dict[int, int] = {}
        return cls(len(ids), tuple(renum.setdefault(c, len(renum)) for c in ids))

    @classmethod
    def from_blocks(cls, order: int, blocks: Iterable[Iterable[int]]) -> "Relation":
        ids = [-1] * order
        for k, block in enumerate(blocks):
            for x in block:
                if ids[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                ids[x] = k
        if -1 in ids:
            raise ValueError("blocks do not cover every element")
        return cls.from_ids(ids)

    @classmethod
    def from_predicate(cls, order: int, related: Callable[[int, int], bool]) -> "Relation":
        """Build from a pairwise test, which must describe an equivalence."""
        m = [[related(a, b) for b in range(order)] for a in range(order)]
        ids = [-1] * order
        k = 0
        for a in range(order):
            if ids[a] < 0:
                for b in range(order):
                    if m[a][b]:
                        ids[b] = k
                k += 1
        rel = cls.from_ids(ids)
        for a in range(order):
            for b in range(order):
                if m[a][b] != rel.related(a, b):
                    raise InternalInconsistency(f"relation is not an equivalence at ({a}, {b})")
        return rel

    @classmethod
    def identity(cls, order: int) -> "Relation":
        return cls(order, tuple(range(order)))

    @classmethod
    def universal(cls, order: int) -> "Relation":
        return cls(order, (0,) * order)

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def blocks(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for a, c in enumerate(self.class_id):
            out.setdefault(c, []).append(a)
        return [tuple(out[c]) for c in sorted(out)]

    def __le__(self, other: "Relation") -> bool:
        """Inclusion as sets of pairs."""
        seen: dict[int, int] = {}
        for a, c in enumerate(self.class_id):
            d = other.class_id[a]
            if seen.setdefault(c, d) != d:
                return False
        return True

    def is_identity(self) -> bool:
        return len(set(self.class_id)) == self.order

    def to_names(self, S: FiniteSemigroup) -> list[list[str]]:
        return [[S.name(x) for x in b] for b in self.blocks()]


def h_relation(S: FiniteSemigroup, G: GreenData | None = None) -> Relation:
    G = G if G is not None else compute_green(S)
    return Relation.from_ids(G.classH)


def is_congruence(S: FiniteSemigroup, rel: Relation) -> bool:
    return first_incompatibility(S, rel) is None


def first_incompatibility(S: FiniteSemigroup, rel: Relation) -> tuple[int, int, int] | None:
    """Least (a, b, c) with a ~ b but not ca ~ cb or not ac ~ bc."""
    t = S.table
    ids = rel.class_id
    for a in S.elements:
        for b in S.elements:
            if ids[a] != ids[b]:
                continue
            for c in S.elements:
                if ids[t[c][a]] != ids[t[c][b]] or ids[t[a][c]] != ids[t[b][c]]:
                    return (a, b, c)
    return None


def is_cryptic(S: FiniteSemigroup, G: GreenData | None = None) -> bool:
    return S.cached("cryptic", lambda: is_congruence(S, h_relation(S, G)))


def quotient(S: FiniteSemigroup, rel: Relation) -> FiniteSemigroup:
    """S/rel with blocks ordered by least representative."""
    if not is_congruence(S, rel):
        raise NotACongruence("relation is not compatible with the product")
    blocks = rel.blocks()
    ids = rel.class_id
    t = S.table
    rows = []
    for A in blocks:
        row = []
        for B in blocks:
            prods = {ids[t[x][y]] for x in A for y in B}
            if len(prods) != 1:
                raise InternalInconsistency("block product is not well defined")
            row.append(prods.pop())
        rows.append(row)
    names = ["{" + ",".join(S.name(x) for x in A) + "}" for A in blocks]
    return from_table(rows, names)


def _require_inverse(S: FiniteSemigroup) -> None:
    if not is_inverse(S):
        raise NotInverse("operation is defined on inverse semigroups only")


def centralizer_of_idempotents(S: FiniteSemigroup) -> ElementSet:
    """Z(E(S)): elements commuting with every idempotent."""
    def compute():
        t = S.table
        E = idempotents(S)
        return ElementSet.of(S.order, (x for x in S.elements if all(t[x][e] == t[e][x] for e in E)))
    return S.cached("ZE", compute)


def _conjugation_relation(S: FiniteSemigroup, G: GreenData, over: Iterable[int]) -> Relation:
    t = S.table
    inv = [unique_inverse(S, a) for a in S.elements]
    over = list(over)
    # signature of a: the H-classes of a^-1 x a for x in `over`
    sig = [tuple(G.classH[t[t[inv[a]][x]][a]] for x in over) for a in S.elements]
    return Relation.from_predicate(S.order, lambda a, b: sig[a] == sig[b])


def _kernel_relation(S: FiniteSemigroup, K: Iterable[int]) -> Relation:
    t = S.table
    K = set(K)
    inv = [unique_inverse(S, a) for a in S.elements]
    return Relation.from_predicate(
        S.order, lambda a, b: t[inv[a]][a] == t[inv[b]][b] and t[a][inv[b]] in K
    )


def mu(S: FiniteSemigroup) -> Relation:
    """Largest idempotent-separating congruence of an inverse semigroup.

    Conjugation form (a^-1 e a H b^-1 e b for all idempotents e), checked
    against the kernel form (a^-1 a = b^-1 b and ab^-1 in Z(E(S))).
    """
    _require_inverse(S)

    def compute():
        G = compute_green(S)
        by_conj = _conjugation_relation(S, G, idempotents(S))
        by_kernel = _kernel_relation(S, centralizer_of_idempotents(S))
        if by_conj != by_kernel:
            raise InternalInconsistency("the two descriptions of mu disagree")
        return by_conj
    return S.cached("mu", compute)


def mu_kernel_form(S: FiniteSemigroup) -> Relation:
    _require_inverse(S)
    return _kernel_relation(S, centralizer_of_idempotents(S))


def mu_conjugation_form(S: FiniteSemigroup) -> Relation:
    _require_inverse(S)
    return _conjugation_relation(S, compute_green(S), idempotents(S))


def nu(S: FiniteSemigroup, G: GreenData | None = None) -> Relation:
    """(a, b) related iff a^-1 h a H b^-1 h b for every group invertible h."""
    _require_inverse(S)
    G = G if G is not None else compute_green(S)
    return _conjugation_relation(S, G, group_invertible_set(S, G))


def kernel_check(S: FiniteSemigroup, K: Iterable[int]) -> bool:
    """Whether K is a kernel: an inverse subsemigroup, self-conjugate, with E(S) ⊆ K ⊆ Z(E(S))."""
    _require_inverse(S)
    K = set(K)
    if not K or not is_closed(S, K):
        return False
    inv = [unique_inverse(S, a) for a in S.elements]
    if any(inv[k] not in K for k in K):
        return False
    t = S.table
    if any(t[t[inv[a]][k]][a] not in K for a in S.elements for k in K):
        return False
    return idempotents(S).as_set() <= K <= centralizer_of_idempotents(S).as_set()


def rho_K(S: FiniteSemigroup, K: Iterable[int]) -> Relation:
    """The idempotent-separating congruence with kernel K:
    a ~ b iff a^-1 a = b^-1 b and ab^-1 in K."""
    _require_inverse(S)
    K = set(K)
    if not kernel_check(S, K):
        raise NotAKernel(f"{sorted(K)} is not a kernel")
    rel = _kernel_relation(S, K)
    if not is_congruence(S, rel):
        raise InternalInconsistency("rho_K is not a congruence")
    if not rel <= h_relation(S):
        raise InternalInconsistency("rho_K is not idempotent separating")
    return rel


def congruence_generated(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Relation:
    """Smallest congruence containing ``pairs`` (union-find with translation closure)."""
    parent = list(S.elements)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    t = S.table
    todo = list(pairs)
    while todo:
        a, b = todo.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for c in S.elements:
            todo.append((t[c][a], t[c][b]))
            todo.append((t[a][c], t[b][c]))
    return Relation.from_ids(find(x) for x in S.elements)


def max_congruence_in_H_oracle(S: FiniteSemigroup, G: GreenData | None = None, bound: int = 8) -> Relation:
    """Brute force: join of all principal congruences contained in H."""
    if S.order > bound:
        raise BoundExceeded(f"order {S.order} exceeds the oracle bound {bound}")
    G = G if G is not None else compute_green(S)
    H = h_relation(S, G)
    kept = []
    for a in S.elements:
        for b in S.elements:
            if a < b and G.H(a, b):
                theta = congruence_generated(S, [(a, b)])
                if theta <= H:
                    kept.append((a, b))
    result = congruence_generated(S, kept)
    if not result <= H:
        raise InternalInconsistency("join of congruences inside H escaped H")
    return result
