"""Hypothesis strategies producing semigroups from independent sources."""
from hypothesis import strategies as st

from hsemi.core import from_table
from hsemi.enumeration import EnumerationConfig, _rows, enumerate_semigroups, transport

_SMALL = [S.table for n in (1, 2, 3) for S in enumerate_semigroups(EnumerationConfig(n))]


def _transformation_semigroup(gens, k):
    """Cayley table of the semigroup of maps on range(k) generated by gens (composition left to right)."""
    elems = list(dict.fromkeys(gens))
    seen = set(elems)
    i = 0
    while i < len(elems):
        f = elems[i]
        for g in list(elems):
            for h in (tuple(g[f[x]] for x in range(k)), tuple(f[g[x]] for x in range(k))):
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
        i += 1
    elems.sort()
    idx = {f: j for j, f in enumerate(elems)}
    return from_table([[idx[tuple(g[f[x]] for x in range(k))] for g in elems] for f in elems])


@st.composite
def relabeled_small(draw):
    """An order <= 3 semigroup under a random relabeling."""
    t = draw(st.sampled_from(_SMALL))
    n = len(t)
    p = draw(st.permutations(range(n)))
    flat = [v for row in t for v in row]
    return from_table(_rows(transport(flat, n, p), n))


@st.composite
def transformation_semigroups(draw, k=3, max_gens=2):
    maps = st.tuples(*[st.integers(0, k - 1)] * k)
    gens = draw(st.lists(maps, min_size=1, max_size=max_gens))
    return _transformation_semigroup(gens, k)


def semigroups():
    return st.one_of(relabeled_small(), transformation_semigroups())
