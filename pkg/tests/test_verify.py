import pytest

from hsemi.constructions import cyclic_group, symmetric_inverse_monoid
from hsemi.core import from_table
from hsemi.enumeration import EnumerationConfig, sweep
from hsemi.errors import UnknownTheoremId
from hsemi.verify import REGISTRY, SUPPLEMENTARY, verify, verify_all

EXPECTED_IDS = sorted("""
CONCL-6EQ COR-CIISHO COR-COMMUT COR-H COR-LALLEMENT COR-MUNU COR-QUOTIENT COR-SELFC
COR-SUBSGP DIAG-IMPL EH-UNION EX-FUND G-CANCEL G-CLIFF G-ELEM G-LREG G-REGPAIR-H
IAE-DEF-UNIQ IAE-OUTER LEM-CIISI LEM-HIC-3 LEM-HINZ LEM-HREG LEM-ROL LEM-ROL-CONV
LEM-SELFC LEM-ZINH PROP-COMM-H PROP-HCLASS PROP-SANDWICH REILLY-1.3 TH-CICONG
TH-COMMUT TH-HIC-SUFF TH-IHOISCI TH-NONREGCONG TH-ORTHODOX TH-ROL TH-TRACE TH-TULLY
TH-WEAKINV THEXIST
""".split())

# A non-regular order-4 semigroup on which the third part of LEM-HIC-3 fails
# when taken without a regularity hypothesis.
HIC3_WITNESS = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 2, 1], [0, 0, 0, 3]]


def test_registry_ids():
    assert sorted(REGISTRY) == EXPECTED_IDS
    assert not set(REGISTRY) & set(SUPPLEMENTARY)


def test_verify_all_is_sorted(s7):
    assert [r.theorem_id for r in verify_all(s7)] == EXPECTED_IDS


@pytest.mark.parametrize("fixture", ["s7", "i2", "z2_adjoined"])
def test_fixtures_hold(fixture, request):
    S = request.getfixturevalue(fixture)
    bad = [(r.theorem_id, r.witness, r.detail) for r in verify_all(S) if not r.holds]
    assert bad == []


def test_trivial_semigroup():
    reps = verify_all(from_table([[0]]))
    assert all(r.holds for r in reps)
    vac = verify(from_table([[0]]), "LEM-ROL-CONV")
    assert vac.status in ("holds", "vacuous")


def test_spot_examples(s7, i2):
    assert verify(cyclic_group(3), "THEXIST").holds
    assert verify(s7, "COR-MUNU").holds and not verify(s7, "COR-MUNU").vacuous
    assert verify(i2, "TH-CICONG").holds


def test_vacuous_when_hypotheses_fail(i2):
    r = verify(i2, "COR-SELFC")
    assert r.holds and r.vacuous and r.instances == 0 and r.status == "vacuous"


def test_unknown_id(s7):
    with pytest.raises(UnknownTheoremId):
        verify(s7, "NOPE")


def test_hic3_refutation_is_reported():
    S = from_table(HIC3_WITNESS)
    r = verify(S, "LEM-HIC-3")
    assert not r.holds and r.status == "FAILS"
    assert r.detail.startswith("REFUTED ON THIS SEMIGROUP")
    assert r.witness[0] in ("part2", "part3")
    assert verify(S, "LEM-HIC-3-REGULAR").holds


def test_hic3_with_regularity_holds_on_order_le_4():
    for n in (1, 2, 3, 4):
        assert sweep(EnumerationConfig(n), ["LEM-HIC-3-REGULAR"]).ok


def test_i3_holds():
    S, _ = symmetric_inverse_monoid(3)
    assert all(r.holds for r in verify_all(S))
