import numpy as np
import pytest

from brandt_nsr import (
    ActionStructure,
    CompatibilityMode,
    annihilator,
    annihilator_of_set,
    aplus_congruence,
    build_C,
    equality_congruence,
    has_left_identity,
    is_congruence,
    is_strongly_monogenic,
    modularity_witness,
    n_subsemigroups,
    nsr_annihilator,
    radical_report,
    report_to_json,
    universal_congruence,
)
from brandt_nsr.structure import J_PAIRS, RADICAL_ARROWS


def test_carrier_is_zero_plus_constants(tbl2):
    act = build_C(tbl2)
    assert act.size == 2 * 2 + 2
    assert act.carrier[0] == 0
    names = [tbl2.names[e] for e in act.carrier]
    assert names[0] == "0"
    assert all(nm.startswith("c:") for nm in names[1:])
    assert "c:t" in names


def test_carrier_size_at_n_3(tbl3):
    assert build_C(tbl3).size == 3 * 3 + 2


def test_action_fixes_zero_row_and_column(tbl2):
    act = build_C(tbl2)
    assert not act.act[0].any()
    assert not act.act[:, 0].any()


def test_annihilator_of_zero_is_everything(tbl2):
    act = build_C(tbl2)
    assert annihilator(act, 0) == frozenset(range(tbl2.size))


def test_annihilator_of_every_nonzero_constant_is_zero_only(tbl2, tbl3):
    for tbl in (tbl2, tbl3):
        act = build_C(tbl)
        for p in range(1, act.size):
            assert annihilator(act, p) == frozenset({0})


def test_annihilator_of_whole_carrier(tbl2):
    act = build_C(tbl2)
    assert annihilator_of_set(act, range(act.size)) == frozenset({0})
    assert annihilator_of_set(act, [0]) == frozenset(range(tbl2.size))
    assert annihilator_of_set(act, [1, 2], cross_check=True) == frozenset({0})


def test_annihilator_of_empty_set_is_rejected(tbl2):
    with pytest.raises(ValueError):
        annihilator_of_set(build_C(tbl2), [])


def test_algebra_level_annihilators(tbl2):
    assert nsr_annihilator(tbl2, 0) == frozenset(range(tbl2.size))
    for e in range(1, tbl2.size):
        assert nsr_annihilator(tbl2, e) == frozenset({0})


def test_carrier_is_strongly_monogenic(tbl2):
    act = build_C(tbl2)
    mono, witness = is_strongly_monogenic(act)
    assert mono
    assert tbl2.names[act.carrier[witness]] == "c:t"
    # the witness is not special: every nonzero element reaches everything
    for p in range(1, act.size):
        assert set(act.act[p].tolist()) == set(range(act.size))


def test_monogenic_rejects_degenerate_structures():
    lonely = ActionStructure(
        carrier=(0,), act=np.zeros((1, 4), dtype=np.int32),
        plus=np.zeros((1, 1), dtype=np.int32),
    )
    assert is_strongly_monogenic(lonely) == (False, None)
    stuck = ActionStructure(
        carrier=(0, 1),
        act=np.zeros((2, 4), dtype=np.int32),
        plus=np.zeros((2, 2), dtype=np.int32),
    )
    assert is_strongly_monogenic(stuck) == (False, None)


def test_subsemigroups_are_trivial(tbl2, tbl3):
    for tbl in (tbl2, tbl3):
        act = build_C(tbl)
        assert n_subsemigroups(act) == [
            frozenset({0}),
            frozenset(range(act.size)),
        ]


def test_subsemigroup_guard(tbl2):
    with pytest.raises(ValueError):
        n_subsemigroups(build_C(tbl2), max_carrier=2)


def test_no_left_identity_at_n_2_and_3(tbl2, tbl3):
    for tbl in (tbl2, tbl3):
        found, u, cex = has_left_identity(tbl)
        assert not found and u is None
        assert set(cex) == set(range(tbl.size))
        for u, x in cex.items():
            assert tbl.mul[u, x] != x


def test_left_identity_exists_at_n_1(tbl1):
    found, u, cex = has_left_identity(tbl1)
    assert found and cex == {}
    assert tbl1.names[u] == "n:1,1;1"


def test_modularity_witness_cases(tbl2):
    right = CompatibilityMode.RIGHT
    ok, u = modularity_witness(tbl2, universal_congruence(tbl2, right))
    assert ok and u == 0
    ok, u = modularity_witness(tbl2, equality_congruence(tbl2, right))
    assert (ok, u) == (False, None)  # a witness here would be a left identity
    ok, u = modularity_witness(tbl2, aplus_congruence(tbl2, right))
    assert ok and tbl2.names[u] == "c:t"
    with pytest.raises(ValueError):
        modularity_witness(tbl2, equality_congruence(tbl2, CompatibilityMode.PLUS))


@pytest.mark.parametrize("mode", list(CompatibilityMode))
def test_zero_versus_maps_is_a_congruence_at_every_level(tbl2, mode):
    c = aplus_congruence(tbl2, mode)
    assert c.num_classes == 2
    assert is_congruence(tbl2, c.labels, mode)
    assert c.labels[0] == 0
    assert set(c.labels[1:]) == {1}


def test_radical_name_tables():
    assert len(J_PAIRS) == 10
    assert len(set(J_PAIRS)) == 10
    assert all(0 <= nu <= 2 and 0 <= mu <= 3 for nu, mu in J_PAIRS)
    assert len(RADICAL_ARROWS) == 18
    names = {f"J({nu},{mu})" for nu, mu in J_PAIRS} | {"R0", "R1", "R2", "R3"}
    assert all(a in names and b in names for a, b in RADICAL_ARROWS)


def test_radical_report_at_n_2(tbl2):
    report = radical_report(tbl2)
    assert report.n == 2
    assert len(report.entries) == 14
    for nu, mu in J_PAIRS:
        assert report.entry(f"J({nu},{mu})").value == "{0}"
    assert report.entry("R0").value == "{0}"
    assert report.entry("R1").value == "{0}"
    assert report.entry("R2").value == "N"
    assert report.entry("R3").value == "N"
    assert report.all_premises_hold
    assert report.figure_consistent
    assert report.blocked == []
    with pytest.raises(KeyError):
        report.entry("J(9,9)")


def test_radical_premises_carry_witnesses(tbl2):
    report = radical_report(tbl2)
    j_claims = [p.claim for p in report.entry("J(0,0)").premises]
    assert any("whole carrier" in c for c in j_claims)
    assert any("kernels" in c for c in j_claims)
    mod = [p for p in report.entry("R0").premises if "modularity" in p.claim]
    assert len(mod) == 1 and mod[0].witness == "c:t"
    noli = report.entry("R2").premises[0]
    assert noli.holds and noli.witness is None


def test_radical_report_at_n_1_blocks_the_identity_dependent_values(tbl1):
    report = radical_report(tbl1)
    assert report.blocked == ["R2", "R3"]
    assert report.entry("R2").value is None
    assert report.entry("R0").value == "{0}"
    assert report.entry("J(2,1)").value == "{0}"
    assert not report.all_premises_hold
    noli = report.entry("R2").premises[0]
    assert not noli.holds and noli.witness == "n:1,1;1"
    # unknown values are skipped, not treated as failures
    assert report.figure_consistent


def test_report_json_shape(tbl2):
    data = report_to_json(radical_report(tbl2))
    assert set(data) == {"n", "J", "R", "premises"}
    assert data["n"] == 2
    assert set(data["J"]) == {f"({nu},{mu})" for nu, mu in J_PAIRS}
    assert set(data["R"]) == {"R0", "R1", "R2", "R3"}
    assert set(data["J"].values()) == {"{0}"}
    assert data["R"]["R2"] == "N"
    assert len(data["premises"]) == 7  # shared premises are deduplicated
    for p in data["premises"]:
        assert set(p) == {"claim", "holds", "witness"}
        assert p["holds"] is True
