"""Example semigroups as validated Cayley tables.

Partial injections compose left to right: ``(s*t)(x) = t(s(x))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .core import FiniteSemigroup, from_table, identity_element
from .errors import DegreeTooLarge, NotAGroup, UnknownConstruction


@dataclass(frozen=True)
class PartialInjection:
    """A partial injective map on {1..k}; ``image[i-1]`` is the image of i or None."""

    image: tuple[int | None, ...]

    def __post_init__(self):
        defined = [v for v in self.image if v is not None]
        if len(set(defined)) != len(defined):
            raise ValueError(f"not injective: {self.image}")
        if any(not 1 <= v <= self.degree for v in defined):
            raise ValueError(f"image out of range: {self.image}")

    @classmethod
    def from_pairs(cls, degree: int, pairs) -> "PartialInjection":
        image = [None] * degree
        for x, y in dict(pairs).items():
            image[x - 1] = y
        return cls(tuple(image))

    @property
    def degree(self) -> int:
        return len(self.image)

    def domain(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self.image) if v is not None)

    def rank(self) -> int:
        return len(self.domain())

    def __call__(self, x: int) -> int | None:
        return self.image[x - 1]

    def then(self, other: "PartialInjection") -> "PartialInjection":
        """Left-to-right composite: apply self, then other."""
        return PartialInjection(tuple(None if v is None else other(v) for v in self.image))

    def label(self) -> str:
        if self.rank() == 0:
            return "0"
        return "[" + ",".join(f"{x}->{self(x)}" for x in self.domain()) + "]"


def semigroup_of_maps(maps, names=None) -> FiniteSemigroup:
    """Cayley table of a product-closed list of partial injections."""
    index = {m: i for i, m in enumerate(maps)}
    if len(index) != len(maps):
        raise ValueError("maps must be distinct")
    rows = []
    for s in maps:
        row = []
        for t in maps:
            p = s.then(t)
            if p not in index:
                raise ValueError(f"{s.label()} * {t.label()} = {p.label()} is outside the set")
            row.append(index[p])
        rows.append(row)
    return from_table(rows, names if names is not None else [m.label() for m in maps])


def all_partial_injections(k: int) -> list[PartialInjection]:
    """Ordered by rank, then domain, then images (lexicographic)."""
    out = []
    for r in range(k + 1):
        for dom in combinations(range(1, k + 1), r):
            for img in permutations(range(1, k + 1), r):
                out.append(PartialInjection.from_pairs(k, zip(dom, img)))
    return out


def symmetric_inverse_monoid(k: int) -> tuple[FiniteSemigroup, list[PartialInjection]]:
    """I_k, all partial injections of {1..k}, with its legend."""
    if not 1 <= k <= 4:
        raise DegreeTooLarge(f"degree must be in 1..4, got {k}")
    maps = all_partial_injections(k)
    return semigroup_of_maps(maps), maps


def i2_alpha_beta(S: FiniteSemigroup) -> tuple[int, int]:
    """Indices in I_2 of alpha = [1->1] and beta = the transposition."""
    return S.index("[1->1]"), S.index("[1->2,2->1]")


S7_NAMES = ("0", "e", "f", "a", "b", "g", "h")


def paper_example_s7() -> FiniteSemigroup:
    """Seven partial injections of {1,2,3,4}: a Brandt part on {1,2} plus Z_2 on {3,4}."""
    pi = lambda *pairs: PartialInjection.from_pairs(4, pairs)  # noqa: E731
    maps = [
        pi(),
        pi((1, 1)),
        pi((2, 2)),
        pi((1, 2)),
        pi((2, 1)),
        pi((3, 3), (4, 4)),
        pi((3, 4), (4, 3)),
    ]
    return semigroup_of_maps(maps, S7_NAMES)


def is_group(S: FiniteSemigroup) -> bool:
    """A finite semigroup is a group iff it has an identity and every row and column is a permutation."""
    if identity_element(S) is None:
        return False
    n = S.order
    t = S.table
    return all(len(set(t[a])) == n and len({t[x][a] for x in S.elements}) == n for a in S.elements)


def group_adjoin(G: FiniteSemigroup, g: int) -> FiniteSemigroup:
    """G ∪ {a} with a^2 = g^2, ah = gh and ha = hg for h in G; a gets index |G|."""
    if not is_group(G):
        raise NotAGroup("group_adjoin needs a group")
    t = G.table
    n = G.order
    rows = [list(t[h]) + [t[h][g]] for h in G.elements]
    rows.append(list(t[g]) + [t[g][g]])
    names = None
    if G.names:
        a = "a"
        while a in G.names:
            a += "'"
        names = list(G.names) + [a]
    return from_table(rows, names)


def cyclic_group(m: int) -> FiniteSemigroup:
    return from_table([[(i + j) % m for j in range(m)] for i in range(m)])


def left_zero(m: int) -> FiniteSemigroup:
    return from_table([[i] * m for i in range(m)])


def right_zero(m: int) -> FiniteSemigroup:
    return from_table([list(range(m)) for _ in range(m)])


def null(m: int) -> FiniteSemigroup:
    """xy = 0 for all x, y."""
    return from_table([[0] * m for _ in range(m)])


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    """Pairs (i, j) stored as i*q + j, with (i, j)(k, l) = (i, l)."""
    return from_table([[(x // q) * q + y % q for y in range(p * q)] for x in range(p * q)])


def semilattice_chain(m: int) -> FiniteSemigroup:
    return from_table([[min(i, j) for j in range(m)] for i in range(m)])


STOCK = {
    "cyclic_group": cyclic_group,
    "left_zero": left_zero,
    "right_zero": right_zero,
    "null": null,
    "rectangular_band": rectangular_band,
    "semilattice_chain": semilattice_chain,
}


def stock(name: str, *params: int) -> FiniteSemigroup:
    try:
        build = STOCK[name.replace("-", "_")]
    except KeyError:
        raise UnknownConstruction(f"unknown construction {name!r}; known: {sorted(STOCK)}") from None
    return build(*params)
