from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hsemi.core import (
    ElementSet,
    adjoin_identity,
    from_table,
    identity_element,
    idempotents,
    is_closed,
    opposite,
    restrict,
    subsemigroup_closure,
)
from hsemi.errors import MalformedTable, NonAssociative, NotClosed
from strategies import semigroups


def _first_bad_triple(t):
    n = len(t)
    for i, j, k in product(range(n), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            return (i, j, k)
    return None


def test_nonassociative_reports_first_triple():
    with pytest.raises(NonAssociative) as info:
        from_table([[0, 0], [1, 0]])
    assert info.value.triple == _first_bad_triple([[0, 0], [1, 0]])


@given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
def test_from_table_agrees_with_bruteforce(flat):
    t = [flat[0:3], flat[3:6], flat[6:9]]
    bad = _first_bad_triple(t)
    if bad is None:
        assert from_table(t).table == tuple(map(tuple, t))
    else:
        with pytest.raises(NonAssociative) as info:
            from_table(t)
        assert info.value.triple == bad


@pytest.mark.parametrize("rows", [
    [],
    [[0, 0]],
    [[0, 1], [1]],
    [[0, 2], [1, 0]],
    [[0, -1], [0, 0]],
    [[0.0]],
    [[True]],
])
def test_malformed_tables(rows):
    with pytest.raises(MalformedTable):
        from_table(rows)


@pytest.mark.parametrize("names", [["a"], ["a", "a"], ["a", "b c"], ["a", ""]])
def test_bad_names(names):
    with pytest.raises(MalformedTable):
        from_table([[0, 0], [0, 0]], names)


def test_element_set_is_sorted_and_membership():
    X = ElementSet.of(5, [3, 1, 3])
    assert tuple(X) == (1, 3) and 3 in X and 2 not in X and len(X) == 2


@given(semigroups())
def test_adjoin_identity(S):
    T = adjoin_identity(S)
    one = identity_element(T)
    assert one is not None
    assert adjoin_identity(T) is T
    if identity_element(S) is None:
        assert T.order == S.order + 1 and one == S.order
        assert restrict(T, S.elements).table == S.table
    else:
        assert T is S


@given(semigroups())
def test_opposite_is_involution(S):
    Sop = opposite(S)
    assert opposite(Sop).table == S.table
    assert all(Sop.mul(a, b) == S.mul(b, a) for a in S.elements for b in S.elements)
    assert idempotents(Sop) == idempotents(S)


@given(semigroups(), st.data())
def test_closure(S, data):
    gens = data.draw(st.lists(st.sampled_from(S.elements), min_size=1, max_size=3))
    C = subsemigroup_closure(S, gens)
    assert set(gens) <= C.as_set() and is_closed(S, C)
    # minimality: every member is a product of generators
    words = set(gens)
    while True:
        grown = words | {S.mul(a, b) for a in words for b in gens}
        if grown == words:
            break
        words = grown
    assert words == C.as_set()


def test_restrict_rejects_open_set(i2):
    alpha = i2.index("[1->2]")
    with pytest.raises(NotClosed):
        restrict(i2, [alpha])


def test_restrict_inherits_names(s7):
    T = restrict(s7, [s7.index("g"), s7.index("h")])
    assert T.names == ("g", "h") and T.table == ((0, 1), (1, 0))
