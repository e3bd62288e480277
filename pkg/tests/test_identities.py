"""Identity checks and the k = 4 derivation replay."""

import pytest

from twocolor.identities import (ProofStepResult, _compared,
                                 check_beauty_identity,
                                 check_frobenius_congruence, check_jacobi,
                                 check_phi_5dissection, check_phi_f_identity,
                                 check_phi_product, replay_k4_proof)
from twocolor.partitions import partition_table, two_color_table
from twocolor.series import EXACT, TruncatedSeries

STEP_IDS = ["s%d" % i for i in range(1, 15)]


def test_beauty_identity_holds():
    step = check_beauty_identity(60)
    assert step.passed
    assert step.order == 60
    assert step.first_mismatch is None


def test_beauty_identity_constant_term():
    # the extracted series starts at p(4) = 5, matching the factor 5 on the right
    assert partition_table(4).values[4] == 5


def test_jacobi_check():
    assert check_jacobi(150).passed


def test_phi_product_check():
    assert check_phi_product(150).passed


def test_phi_5dissection_check():
    assert check_phi_5dissection(150).passed


def test_phi_f_identity_check():
    assert check_phi_f_identity(150).passed


def test_identity_checks_reject_bad_order():
    for check in (check_beauty_identity, check_jacobi, check_phi_product,
                  check_phi_5dissection, check_phi_f_identity):
        with pytest.raises(ValueError):
            check(0)


def test_frobenius_congruence_sweep():
    for prime in (2, 3, 5, 7):
        for base in (1, 2, 4, 5):
            step = check_frobenius_congruence(base, prime, 100)
            assert step.passed, (base, prime)


def test_frobenius_rejects_composite_modulus():
    with pytest.raises(ValueError):
        check_frobenius_congruence(1, 4, 50)
    with pytest.raises(ValueError):
        check_frobenius_congruence(1, 1, 50)
    with pytest.raises(ValueError):
        check_frobenius_congruence(0, 5, 50)


def test_compared_reports_mismatch():
    a = TruncatedSeries(EXACT, [1, 2, 3])
    b = TruncatedSeries(EXACT, [1, 2, 4])
    step = _compared("x", "cooked mismatch", a, b, 2)
    assert not step.passed
    assert step.first_mismatch == 2
    ok = _compared("x", "same series", a, a, 2)
    assert ok.passed and ok.first_mismatch is None


def test_step_payload_shape():
    step = check_jacobi(20)
    payload = step.to_payload()
    assert payload["step"] == "jacobi"
    assert payload["passed"] is True
    assert payload["order"] == 20
    assert payload["first_mismatch"] is None


# -- the replay ----------------------------------------------------------------

def test_replay_all_steps_pass():
    steps = replay_k4_proof(75)
    assert [s.step_id for s in steps] == STEP_IDS
    assert all(s.passed for s in steps)


def test_replay_step_orders():
    steps = replay_k4_proof(75)
    by_id = {s.step_id: s for s in steps}
    assert by_id["s1"].order == 75
    assert by_id["s2"].order == 75
    for sid in ("s3", "s4", "s5", "s6", "s7", "s8", "s9", "s10", "s11"):
        assert by_id[sid].order == 15
    assert by_id["s12"].order == 75
    assert by_id["s13"].order == 75
    assert by_id["s14"].order == (75 - 4) // 5


def test_replay_rejects_small_order():
    with pytest.raises(ValueError):
        replay_k4_proof(24)
    assert replay_k4_proof(25)[0].passed


def test_replay_conclusion_matches_oracle_directly():
    # the replayed conclusion, recomputed straight from the oracle: the
    # alternating series of fifth counts has nothing at exponents 4 mod 5
    order = 75
    table = two_color_table(4, 5 * order)
    signed = [table.values[5 * i] if i % 2 == 0 else -table.values[5 * i]
              for i in range(order + 1)]
    final = TruncatedSeries(EXACT, signed).reduce_mod(5).dissect(5, 4)
    assert final.is_zero()
    assert final.order == (order - 4) // 5


def test_replay_each_step_has_description():
    for step in replay_k4_proof(30):
        assert step.description
        assert step.order >= 1
