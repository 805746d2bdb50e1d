import pytest
from hypothesis import given

from hsemi.core import adjoin_identity, idempotents, opposite
from hsemi.errors import PreconditionViolated
from hsemi.green import compute_green, h_class, h_class_product_check, is_trace_product, set_product
from strategies import semigroups


def _ideal_oracle(S):
    """Principal one-sided ideals computed inside an explicit S^1."""
    T = adjoin_identity(S)
    left = {a: frozenset(T.mul(x, a) for x in T.elements) for a in S.elements}
    right = {a: frozenset(T.mul(a, x) for x in T.elements) for a in S.elements}
    return left, right


@given(semigroups())
def test_green_matches_ideal_oracle(S):
    G = compute_green(S)
    left, right = _ideal_oracle(S)
    for a in S.elements:
        for b in S.elements:
            assert G.leqL[a][b] == (left[a] <= left[b])
            assert G.leqR[a][b] == (right[a] <= right[b])
            assert G.L(a, b) == (left[a] == left[b])
            assert G.R(a, b) == (right[a] == right[b])
            assert G.H(a, b) == (G.L(a, b) and G.R(a, b))


@given(semigroups())
def test_left_right_duality(S):
    G, Gop = compute_green(S), compute_green(opposite(S))
    assert G.leqL == Gop.leqR and G.leqR == Gop.leqL
    assert G.partition("H") == Gop.partition("H")


@given(semigroups())
def test_partitions(S):
    G = compute_green(S)
    for kind in "LRH":
        blocks = G.partition(kind)
        assert sorted(x for b in blocks for x in b) == list(S.elements)
        assert [b[0] for b in blocks] == sorted(b[0] for b in blocks)
    for a in S.elements:
        assert a in h_class(S, G, a)


@given(semigroups())
def test_idempotent_h_classes_are_groups(S):
    G = compute_green(S)
    for e in idempotents(S):
        He = h_class(S, G, e)
        assert set_product(S, He, He) == He.as_set()


@given(semigroups())
def test_trace_products(S):
    G = compute_green(S)
    for a in S.elements:
        for b in S.elements:
            if is_trace_product(S, G, a, b):
                assert h_class_product_check(S, G, a, b)
            else:
                with pytest.raises(PreconditionViolated):
                    h_class_product_check(S, G, a, b)


def test_s7_classes(s7):
    G = compute_green(s7)
    named = [[s7.name(x) for x in b] for b in G.partition("H")]
    assert named == [["0"], ["e"], ["f"], ["a"], ["b"], ["g", "h"]]
