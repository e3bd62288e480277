"""Congruence scans: the 25n family, strong progressions, residue analysis."""

import pytest

from twocolor.congruence import (Counterexample, characterize_all, delta_alpha,
                                 residue_analysis, verify_chan_toh,
                                 verify_family, verify_strong_5ell)

HOLDING_K = {1, 2, 3, 4, 5, 7, 8, 10, 15, 17, 20}

# first counterexample values for the 13 failing k, in increasing k order
FAILING_VALUES = {
    6: 487, 9: 187, 11: 103, 12: 78, 13: 56, 14: 42, 16: 22,
    18: 11, 19: 7, 21: 3, 22: 2, 23: 1, 24: 1,
}


def test_verify_family_failing_case():
    report = verify_family(6, 5)
    assert not report.holds
    assert report.verdict == "fails"
    assert report.counterexample == Counterexample(0, 18, 487, 2)
    assert report.progression == (25, 18)


def test_verify_family_holding_case():
    report = verify_family(4, 20)
    assert report.holds
    assert report.counterexample is None
    assert report.progression == (25, 20)


def test_verify_family_trivial_failure_at_zero():
    report = verify_family(24, 0)
    assert report.counterexample == Counterexample(0, 0, 1, 1)


def test_verify_family_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_family(0, 5)
    with pytest.raises(ValueError):
        verify_family(25, 5)
    with pytest.raises(ValueError):
        verify_family(4, -1)
    with pytest.raises(ValueError):
        verify_family(4, 5, modulus=1)


def test_verify_family_other_modulus():
    # p_4(25n+20) is not always divisible by 25
    report = verify_family(4, 5, modulus=25)
    assert not report.holds


def test_characterize_all_split():
    reports = characterize_all(8)
    assert [r.k for r in reports] == list(range(1, 25))
    holding = {r.k for r in reports if r.holds}
    assert holding == HOLDING_K
    for r in reports:
        if not r.holds:
            assert r.counterexample.n == 0
            assert r.counterexample.value == FAILING_VALUES[r.k]
            assert r.counterexample.residue == r.counterexample.value % 5
            assert r.counterexample.residue != 0


def test_report_payload_shape():
    payload = verify_family(6, 2).to_payload()
    assert payload["verdict"] == "fails"
    assert payload["counterexample"]["value"] == "487"
    assert payload["counterexample"]["n"] == 0
    holds = verify_family(4, 2).to_payload()
    assert holds["verdict"] == "holds"
    assert holds["counterexample"] is None


def test_strong_5ell_progressions():
    for ell in (1, 2, 3, 4):
        report = verify_strong_5ell(ell, 40)
        assert report.holds, "ell=%d" % ell
        assert report.k == 5 * ell
        assert report.progression == (5, 4)
        assert report.modulus == 5


def test_strong_5ell_rejects_bad_ell():
    with pytest.raises(ValueError):
        verify_strong_5ell(0, 10)
    with pytest.raises(ValueError):
        verify_strong_5ell(5, 10)


def test_delta_alpha_values():
    assert [delta_alpha(a) for a in (1, 2, 3, 4)] == [2, 22, 47, 547]


def test_delta_alpha_is_inverse_of_eight():
    for alpha in range(1, 9):
        assert 8 * delta_alpha(alpha) % 5 ** alpha == 1


def test_delta_alpha_tower_compatibility():
    for alpha in range(2, 9):
        assert delta_alpha(alpha) % 5 ** (alpha - 1) == delta_alpha(alpha - 1)


def test_delta_alpha_rejects_nonpositive():
    with pytest.raises(ValueError):
        delta_alpha(0)


def test_chan_toh_small_scans():
    r2 = verify_chan_toh(2, 20)
    assert r2.holds and r2.modulus == 5 and r2.progression == (25, 22)
    r3 = verify_chan_toh(3, 8)
    assert r3.holds and r3.modulus == 5 and r3.progression == (125, 47)
    r4 = verify_chan_toh(4, 2)
    assert r4.holds and r4.modulus == 25 and r4.progression == (625, 547)
    assert r4.k == 2


def test_chan_toh_rejects_alpha_below_two():
    with pytest.raises(ValueError):
        verify_chan_toh(1, 10)


# -- residue analysis ---------------------------------------------------------

def test_residue_analysis_mod_five():
    analysis = residue_analysis(5, 4)
    assert analysis.triangular_residues == frozenset({0, 1, 3})
    assert analysis.double_triangular_residues == frozenset({0, 1, 2})
    assert analysis.witness_classes == ((2, 2),)
    assert analysis.coefficient_residues == (0,)


def test_residue_analysis_every_witness_kills_its_coefficient():
    # the spine of the k=4 argument: each witness pair contributes a
    # coefficient divisible by 5
    analysis = residue_analysis(5, 4)
    assert all(c == 0 for c in analysis.coefficient_residues)


def test_residue_analysis_other_modulus():
    analysis = residue_analysis(7, 0)
    assert analysis.triangular_residues == frozenset({0, 1, 3, 6})
    assert analysis.double_triangular_residues == frozenset({0, 2, 5, 6})


def test_residue_analysis_witnesses_hit_target():
    for target in range(5):
        analysis = residue_analysis(5, target)
        for r, s in analysis.witness_classes:
            assert (r * (r + 1) // 2 + s * (s + 1)) % 5 == target


def test_residue_analysis_normalizes_target():
    assert residue_analysis(5, 9).target == 4


def test_residue_analysis_payload():
    payload = residue_analysis(5, 4).to_payload()
    assert payload["triangular_residues"] == [0, 1, 3]
    assert payload["witnesses"] == [{"r": 2, "s": 2, "coefficient_residue": 0}]


def test_residue_analysis_rejects_bad_modulus():
    with pytest.raises(ValueError):
        residue_analysis(1, 0)
