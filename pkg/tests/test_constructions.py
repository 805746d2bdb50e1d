import pytest

from hsemi.constructions import (
    PartialInjection,
    all_partial_injections,
    group_adjoin,
    is_group,
    stock,
    symmetric_inverse_monoid,
)
from hsemi.core import identity_element
from hsemi.errors import DegreeTooLarge, NotAGroup, UnknownConstruction
from hsemi.inverses import is_inverse


@pytest.mark.parametrize("k,size", [(1, 2), (2, 7), (3, 34), (4, 209)])
def test_symmetric_inverse_monoid_sizes(k, size):
    assert len(all_partial_injections(k)) == size
    if k <= 3:
        S, legend = symmetric_inverse_monoid(k)
        assert S.order == size and is_inverse(S) and identity_element(S) is not None
        assert [m.label() for m in legend] == list(S.names)


@pytest.mark.parametrize("k", [0, 5])
def test_degree_bounds(k):
    with pytest.raises(DegreeTooLarge):
        symmetric_inverse_monoid(k)


def test_composition_is_left_to_right():
    s = PartialInjection.from_pairs(3, [(1, 2)])
    t = PartialInjection.from_pairs(3, [(2, 3)])
    assert s.then(t).label() == "[1->3]" and t.then(s).label() == "0"


def test_not_injective():
    with pytest.raises(ValueError):
        PartialInjection((1, 1))


def test_group_adjoin_requires_group():
    with pytest.raises(NotAGroup):
        group_adjoin(stock("null", 2), 0)


def test_stock():
    assert is_group(stock("cyclic-group", 3))
    assert stock("rectangular-band", 2, 3).order == 6
    with pytest.raises(UnknownConstruction):
        stock("bicyclic")
