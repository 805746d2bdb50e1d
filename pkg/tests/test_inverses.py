from hypothesis import given

from hsemi.core import idempotents
from hsemi.green import compute_green, h_class, is_trace_product
from hsemi.inverses import (
    associates,
    associates_mod_H,
    compare_inverse_mod_H_readings,
    group_inverse,
    group_inverse_full_scan,
    group_invertible_set,
    inverse_along,
    inverses_mod_H,
    inverses_of,
    is_inverse,
    is_regular,
    thexist_conditions,
)
from strategies import semigroups


@given(semigroups())
def test_inverses_definitions(S):
    m = S.mul
    for a in S.elements:
        V = inverses_of(S, a).as_set()
        assert V == {x for x in S.elements if m(m(a, x), a) == a and m(m(x, a), x) == x}
        assert V <= associates(S, a).as_set()
        # every associate x yields the inverse xax
        assert {m(m(x, a), x) for x in associates(S, a)} <= V


@given(semigroups())
def test_inverse_semigroup_iff_regular_with_commuting_idempotents(S):
    E = idempotents(S)
    commuting = all(S.mul(e, f) == S.mul(f, e) for e in E for f in E)
    assert is_inverse(S) == (is_regular(S) and commuting)


@given(semigroups())
def test_group_inverse_against_full_scan(S):
    G = compute_green(S)
    for a in S.elements:
        s = group_inverse(S, G, a)
        assert s == group_inverse_full_scan(S, a)
        assert (s is not None) == G.H(a, S.mul(a, a))
        if s is not None:
            assert S.mul(a, s) == S.mul(s, a) and S.mul(S.mul(a, s), a) == a


@given(semigroups())
def test_group_invertible_set_is_union_of_group_h_classes(S):
    G = compute_green(S)
    union = set()
    for e in idempotents(S):
        union |= h_class(S, G, e).as_set()
    assert group_invertible_set(S, G).as_set() == union


@given(semigroups())
def test_inverse_modulo_h(S):
    G = compute_green(S)
    for a in S.elements:
        VH = inverses_mod_H(S, G, a).as_set()
        assert inverses_of(S, a).as_set() <= VH <= associates_mod_H(S, G, a).as_set()
        for x in S.elements:
            trace = is_trace_product(S, G, a, x) and is_trace_product(S, G, x, a)
            assert (x in VH) == trace


@given(semigroups())
def test_inverse_along(S):
    G = compute_green(S)
    for a in S.elements:
        for a_ in S.elements:
            conds = thexist_conditions(S, G, a_, a)
            assert len(set(conds)) == 1
            res = inverse_along(S, G, a_, a)
            assert res.exists == conds[0]


def test_readings_of_inverse_mod_h_differ_on_i2(i2):
    # "xax H x" and "xax H a" select different sets
    assert compare_inverse_mod_H_readings(i2)


def test_s7_inverses(s7):
    a, b = s7.index("a"), s7.index("b")
    assert inverses_of(s7, a).members == (b,)
    G = compute_green(s7)
    assert group_inverse(s7, G, a) is None
    g, h = s7.index("g"), s7.index("h")
    assert group_inverse(s7, G, h) == h and group_inverse(s7, G, g) == g
