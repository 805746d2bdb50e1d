import pytest
from hypothesis import given
from hypothesis import strategies as st

from hsemi.congruence import (
    Relation,
    centralizer_of_idempotents,
    congruence_generated,
    h_relation,
    is_congruence,
    kernel_check,
    max_congruence_in_H_oracle,
    mu,
    mu_conjugation_form,
    mu_kernel_form,
    nu,
    quotient,
    rho_K,
)
from hsemi.core import from_table, idempotents
from hsemi.errors import BoundExceeded, NotACongruence, NotAKernel, NotInverse
from hsemi.inverses import group_invertible_set, is_inverse
from strategies import semigroups


def _compatible(S, rel):
    return all(
        rel.related(S.mul(c, a), S.mul(c, b)) and rel.related(S.mul(a, c), S.mul(b, c))
        for a in S.elements for b in S.elements if rel.related(a, b) for c in S.elements
    )


def test_relation_normalization():
    r = Relation.from_ids([5, 2, 5, 7])
    assert r.class_id == (0, 1, 0, 2) and r.blocks() == [(0, 2), (1,), (3,)]
    assert Relation.from_blocks(4, [[3], [0, 2], [1]]) == r
    assert Relation.identity(4) <= r <= Relation.universal(4)
    assert not r <= Relation.identity(4)


def test_from_predicate_rejects_non_equivalence():
    with pytest.raises(AssertionError):
        Relation.from_predicate(3, lambda a, b: abs(a - b) <= 1)


@given(semigroups(), st.data())
def test_congruence_generated_is_least(S, data):
    a = data.draw(st.sampled_from(S.elements))
    b = data.draw(st.sampled_from(S.elements))
    theta = congruence_generated(S, [(a, b)])
    assert theta.related(a, b) and is_congruence(S, theta) and _compatible(S, theta)


@given(semigroups())
def test_h_quotient(S):
    H = h_relation(S)
    if is_congruence(S, H):
        Q = quotient(S, H)
        assert Q.order == len(H.blocks())
    else:
        with pytest.raises(NotACongruence):
            quotient(S, H)


def _inverse_members(corpus):
    return [S for S in corpus if is_inverse(S)]


def test_mu_forms_agree_with_oracle(small_corpus, s7, i2):
    for S in _inverse_members(small_corpus) + [s7, i2]:
        m = mu_conjugation_form(S)
        assert m == mu_kernel_form(S) == max_congruence_in_H_oracle(S) == mu(S)
        assert rho_K(S, centralizer_of_idempotents(S)) == m
        assert rho_K(S, idempotents(S)).is_identity()


def test_nu_refines_mu(small_corpus, s7, i2):
    # nu conjugates over H(S), a superset of E(S)
    for S in _inverse_members(small_corpus) + [s7, i2]:
        n = nu(S)
        assert n <= mu(S) <= h_relation(S) and is_congruence(S, n)
    assert nu(s7) == mu(s7) == h_relation(s7)


def test_kernels(i2):
    E = idempotents(i2).as_set()
    assert kernel_check(i2, E)
    assert not kernel_check(i2, group_invertible_set(i2).as_set())
    with pytest.raises(NotAKernel):
        rho_K(i2, group_invertible_set(i2))


def test_non_inverse_rejected():
    S = from_table([[0, 0], [1, 1]])
    for f in (mu, mu_kernel_form, mu_conjugation_form, nu):
        with pytest.raises(NotInverse):
            f(S)


def test_oracle_bound(i3):
    with pytest.raises(BoundExceeded):
        max_congruence_in_H_oracle(i3)
