"""Finite semigroups given by Cayley tables.

Convention: ``table[i][j]`` is the product ``i * j`` (row index is the left
factor). Elements are the integers ``0 .. n-1``; that order is the canonical
iteration order and every set-valued result is sorted ascending.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import MalformedTable, NonAssociative, NotClosed

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ElementSet:
    """A sorted set of element indices of a semigroup of order ``order``."""

    members: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.members))

    @classmethod
    def of(cls, order: int, items: Iterable[int]) -> "ElementSet":
        members = tuple(sorted(set(items)))
        if members and (members[0] < 0 or members[-1] >= order):
            raise ValueError(f"element out of range 0..{order - 1}: {members}")
        return cls(members, order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def as_set(self) -> frozenset[int]:
        return self._set

    def issubset(self, other: Iterable[int]) -> bool:
        return self._set <= frozenset(other)


@dataclass(frozen=True)
class FiniteSemigroup:
    table: Table
    names: tuple[str, ...] | None = None
    # per-instance memo for derived data (Green relations, idempotents, ...)
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        """Product of one or more elements, left to right."""
        t = self.table
        acc = xs[0]
        for x in xs[1:]:
            acc = t[acc][x]
        return acc

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def index(self, name: str) -> int:
        if self.names and name in self.names:
            return self.names.index(name)
        try:
            a = int(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None
        if not 0 <= a < self.order:
            raise KeyError(f"no element named {name!r}")
        return a

    def cached(self, key, compute):
        """Memoize ``compute()`` on this instance under ``key``."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def __str__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"


def _first_nonassociative(t: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(t)
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def is_associative(rows: Sequence[Sequence[int]]) -> bool:
    return _first_nonassociative(rows) is None


def from_table(rows, names=None) -> FiniteSemigroup:
    """Validate ``rows`` as an associative Cayley table and wrap it."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise MalformedTable("a semigroup needs at least one element")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise MalformedTable(f"row {i} has {len(r)} entries, expected {n}")
        for j, v in enumerate(r):
            if isinstance(v, bool) or not isinstance(v, int):
                raise MalformedTable(f"entry ({i}, {j}) is not an integer: {v!r}")
            if not 0 <= v < n:
                raise MalformedTable(f"entry ({i}, {j}) = {v} out of range 0..{n - 1}")
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise MalformedTable(f"expected {n} names, got {len(names)}")
        if len(set(names)) != n:
            raise MalformedTable("element names must be distinct")
        if any(not s or any(c.isspace() for c in s) for s in names):
            raise MalformedTable("element names must be nonempty and contain no whitespace")
    bad = _first_nonassociative(rows)
    if bad is not None:
        raise NonAssociative(bad)
    return FiniteSemigroup(tuple(tuple(r) for r in rows), names)


def identity_element(S: FiniteSemigroup) -> int | None:
    t = S.table
    for e in S.elements:
        if all(t[e][x] == x == t[x][e] for x in S.elements):
            return e
    return None


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^1: S itself when it already has an identity, else S with a new identity n."""
    if identity_element(S) is not None:
        return S
    n = S.order
    rows = [list(r) + [i] for i, r in enumerate(S.table)]
    rows.append(list(range(n + 1)))
    names = None
    if S.names:
        one = "1"
        while one in S.names:
            one += "'"
        names = S.names + (one,)
    return from_table(rows, names)


def opposite(S: FiniteSemigroup) -> FiniteSemigroup:
    t = S.table
    rows = [[t[j][i] for j in S.elements] for i in S.elements]
    return FiniteSemigroup(tuple(tuple(r) for r in rows), S.names)


def idempotents(S: FiniteSemigroup) -> ElementSet:
    return S.cached("E", lambda: ElementSet.of(S.order, (e for e in S.elements if S.table[e][e] == e)))


def is_closed(S: FiniteSemigroup, X: Iterable[int]) -> bool:
    X = set(X)
    t = S.table
    return all(t[a][b] in X for a in X for b in X)


def subsemigroup_closure(S: FiniteSemigroup, gens: Iterable[int]) -> ElementSet:
    """Smallest product-closed subset containing ``gens``."""
    t = S.table
    closed = set(gens)
    if not closed:
        raise ValueError("generating set must be nonempty")
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                for p in (t[a][b], t[b][a]):
                    if p not in closed:
                        closed.add(p)
                        new.append(p)
        frontier = new
    return ElementSet.of(S.order, closed)


def restrict(S: FiniteSemigroup, X: Iterable[int]) -> FiniteSemigroup:
    """The subsemigroup on the closed set X, relabelled 0..|X|-1 in ascending order.

    Names are inherited from S (indices when S is unnamed).
    """
    members = sorted(set(X))
    pos = {x: i for i, x in enumerate(members)}
    t = S.table
    try:
        rows = tuple(tuple(pos[t[a][b]] for b in members) for a in members)
    except KeyError:
        raise NotClosed(f"{members} is not closed under the product") from None
    return FiniteSemigroup(rows, tuple(S.name(x) for x in members))
