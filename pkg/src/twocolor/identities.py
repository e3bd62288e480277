"""Machine checks for series identities and the k = 4 congruence derivation.

Every check expands both sides of an identity independently and compares
coefficients through a stated truncation order.  replay_k4_proof walks the
derivation of p_4(25n + 20) = 0 (mod 5) as fourteen such comparisons, each
anchored against ground truth built from the DP oracle, so a failure
pinpoints the one transformation that broke.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .partitions import two_color_table
from .series import EXACT, CoefficientRing, TruncatedSeries
from .special import (ThetaSpec, jacobi_cube, phi, phi_product, pochhammer,
                      shifted_pochhammer, theta_f)


@dataclass(frozen=True)
class ProofStepResult:
    """One coefficientwise comparison: what was checked and through which order."""

    step_id: str
    description: str
    order: int
    passed: bool
    first_mismatch: Optional[int] = None

    def to_payload(self) -> dict:
        return {
            "step": self.step_id,
            "description": self.description,
            "order": self.order,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
        }


def _compared(step_id: str, description: str, lhs: TruncatedSeries,
              rhs: TruncatedSeries, through: int) -> ProofStepResult:
    outcome = lhs.equal_to_order(rhs, through)
    return ProofStepResult(step_id, description, through, outcome.equal,
                           outcome.first_mismatch)


def check_beauty_identity(order: int) -> ProofStepResult:
    """sum p(5n+4) q^n against 5 (q^5;q^5)^5 / (q;q)^6, coefficientwise.

    The left side extracts every fifth coefficient of the ordinary partition
    generating function, so it needs a base expansion of order 5*order + 4.
    """
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    base = pochhammer(1, EXACT, 5 * order + 4)
    lhs = base.invert().dissect(5, 4)
    rhs = (pochhammer(5, EXACT, order) ** 5) * (pochhammer(1, EXACT, order) ** 6).invert() * 5
    return _compared("beauty", "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6",
                     lhs, rhs, order)


def check_jacobi(order: int) -> ProofStepResult:
    """(q;q)^3 against its alternating odd-weight triangular-number expansion."""
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    lhs = pochhammer(1, EXACT, order) ** 3
    rhs = jacobi_cube(EXACT, order)
    return _compared("jacobi", "(q;q)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)",
                     lhs, rhs, order)


def check_phi_product(order: int) -> ProofStepResult:
    """Theta expansion of phi against its Pochhammer-quotient product form."""
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    lhs = phi(EXACT, order)
    rhs = phi_product(EXACT, order)
    return _compared("phi-product", "phi(q) = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)",
                     lhs, rhs, order)


def check_phi_5dissection(order: int) -> ProofStepResult:
    """phi(q) against phi(q^25) + 2q f(q^15,q^35) + 2q^4 f(q^5,q^45)."""
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    lhs = phi(EXACT, order)
    rhs = (phi(EXACT, order // 25).substitute_power(25)
           + theta_f(ThetaSpec(15, 35), EXACT, order).shift(1) * 2
           + theta_f(ThetaSpec(5, 45), EXACT, order).shift(4) * 2)
    return _compared("phi-5dissect",
                     "phi(q) = phi(q^25) + 2q f(q^15,q^35) + 2q^4 f(q^5,q^45)",
                     lhs, rhs, order)


def check_phi_f_identity(order: int) -> ProofStepResult:
    """phi^2(q) - phi^2(q^5) against 4q f(q^3,q^7) f(q,q^9)."""
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    ph = phi(EXACT, order)
    ph5 = phi(EXACT, order // 5).substitute_power(5)
    lhs = ph * ph - ph5 * ph5
    rhs = (theta_f(ThetaSpec(3, 7), EXACT, order)
           * theta_f(ThetaSpec(1, 9), EXACT, order)).shift(1) * 4
    return _compared("phi-f", "phi^2(q) - phi^2(q^5) = 4q f(q^3,q^7) f(q,q^9)",
                     lhs, rhs, order)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_frobenius_congruence(base: int, prime: int, order: int) -> ProofStepResult:
    """(q^base;q^base)^prime against (q^(base*prime);q^(base*prime)) mod prime."""
    if base < 1:
        raise ValueError("base must be positive, got %d" % base)
    if not _is_prime(prime):
        raise ValueError("modulus %d is not prime" % prime)
    if order < 1:
        raise ValueError("order must be positive, got %d" % order)
    ring = CoefficientRing.mod(prime)
    lhs = pochhammer(base, ring, order) ** prime
    rhs = pochhammer(base * prime, ring, order)
    return _compared("frobenius",
                     "(q^%d;q^%d)^%d = (q^%d;q^%d) mod %d"
                     % (base, base, prime, base * prime, base * prime, prime),
                     lhs, rhs, order)


def replay_k4_proof(order: int) -> List[ProofStepResult]:
    """Replay the k = 4 derivation as fourteen series congruences mod 5.

    Both sides of each step are rebuilt from scratch; the left side is always
    anchored to the DP oracle through the chain s1 -> s2 -> ... so a wrong
    transformation fails exactly where it happens.  Execution stops at the
    first failing step.  The final step certifies p_4(25n + 20) = 0 (mod 5)
    for 25n + 20 <= order * 5, i.e. through n = (order - 4) // 5.
    """
    if order < 25:
        raise ValueError("replay needs order >= 25, got %d" % order)
    n = order
    half = n // 5
    m5 = CoefficientRing.mod(5)
    results: List[ProofStepResult] = []

    def poch(k: int, o: int) -> TruncatedSeries:
        return pochhammer(k, m5, o)

    def done(step: ProofStepResult) -> bool:
        results.append(step)
        return not step.passed

    # s1: the series engine reproduces the oracle, exactly
    oracle = two_color_table(4, 5 * n)
    counts = (pochhammer(1, EXACT, n) * pochhammer(4, EXACT, n)).invert()
    oracle_series = TruncatedSeries(EXACT, list(oracle.values[:n + 1]))
    if done(_compared(
            "s1", "coefficients of 1/((q;q)(q^4;q^4)) match the DP counts",
            counts, oracle_series, n)):
        return results

    # s2: fifth powers collapse mod 5 and phi^3 appears
    counts5 = counts.reduce_mod(5)
    eta_five = poch(5, n) * poch(20, n) * (poch(10, n) ** 3).invert()
    if done(_compared(
            "s2", "mod 5 the count series equals (q^5;q^5)(q^20;q^20)/(q^10;q^10)^3 * phi(q)^3",
            counts5, eta_five * (phi(m5, n) ** 3), n)):
        return results

    # s3: substitute the 5-dissection of phi, keep exponents divisible by 5
    fifths = counts5.dissect(5, 0)
    phi25 = phi(m5, n // 25).substitute_power(25)
    cross = (theta_f(ThetaSpec(15, 35), m5, n) * theta_f(ThetaSpec(5, 45), m5, n)).shift(5)
    kernel = phi25 * (phi25 * phi25 + cross * 4)
    if done(_compared(
            "s3", "phi(q) replaced by its 5-dissection; exponents divisible by 5 extracted",
            fifths, (eta_five * kernel).dissect(5, 0), half)):
        return results

    # s4: rescale q^5 -> q in the extracted series
    eta_one = poch(1, half) * poch(4, half) * (poch(2, half) ** 3).invert()
    phi5 = phi(m5, half // 5).substitute_power(5)
    cross1 = (theta_f(ThetaSpec(3, 7), m5, half) * theta_f(ThetaSpec(1, 9), m5, half)).shift(1)
    if done(_compared(
            "s4", "exponents rescaled q^5 -> q",
            fifths, eta_one * (phi5 * (phi5 * phi5 + cross1 * 4)), half)):
        return results

    # s5: the cross terms recombine with phi^2(q^5) into phi^2(q)
    ph = phi(m5, half)
    if done(_compared(
            "s5", "phi^2(q^5) + 4q f(q^3,q^7) f(q,q^9) recombined into phi^2(q)",
            fifths, eta_one * phi5 * (ph * ph), half)):
        return results

    # s6: expand phi^2(q) as a Pochhammer quotient and cancel
    if done(_compared(
            "s6", "phi^2(q) expanded in Pochhammer factors and cancelled to (q^2;q^2)^7/((q;q)^3(q^4;q^4)^3)",
            fifths,
            phi5 * (poch(2, half) ** 7) * ((poch(1, half) ** 3) * (poch(4, half) ** 3)).invert(),
            half)):
        return results

    # s7: split off a quotient of fifth powers, leaving squares
    ratio = (poch(2, half) ** 5) * ((poch(1, half) ** 5) * (poch(4, half) ** 5)).invert()
    squares = (poch(1, half) ** 2) * (poch(2, half) ** 2) * (poch(4, half) ** 2)
    if done(_compared(
            "s7", "factors regrouped as (q^2;q^2)^5/((q;q)^5(q^4;q^4)^5) times squares",
            fifths, phi5 * ratio * squares, half)):
        return results

    # s8: fifth powers reduce mod 5 to single factors at 5x the step
    reduced = poch(10, half) * (poch(5, half) * poch(20, half)).invert()
    if done(_compared(
            "s8", "fifth powers reduced mod 5: the quotient becomes (q^10;q^10)/((q^5;q^5)(q^20;q^20))",
            fifths, phi5 * reduced * squares, half)):
        return results

    # s9: expand phi(q^5) in product form and merge
    if done(_compared(
            "s9", "phi(q^5) expanded in product form, merging into (q^10;q^10)^6/((q^5;q^5)^3(q^20;q^20)^3)",
            fifths,
            (poch(10, half) ** 6) * ((poch(5, half) ** 3) * (poch(20, half) ** 3)).invert() * squares,
            half)):
        return results

    # s10: split (q;q) and (q^5;q^5) into odd- and even-exponent parts
    odd1 = shifted_pochhammer(1, 2, m5, half)
    odd5 = shifted_pochhammer(5, 10, m5, half)
    if done(_compared(
            "s10", "(q;q) and (q^5;q^5) split into odd- and even-exponent factors",
            fifths,
            (poch(10, half) ** 3) * ((odd5 ** 3) * (poch(20, half) ** 3)).invert()
            * (odd1 ** 2) * (poch(2, half) ** 4) * (poch(4, half) ** 2),
            half)):
        return results

    # s11: replace q by -q; the odd products become even-part quotients
    alternating = fifths.negate_variable()
    neg_odd1 = (poch(2, half) ** 2) * (poch(1, half) * poch(4, half)).invert()
    neg_odd5 = (poch(10, half) ** 2) * (poch(5, half) * poch(20, half)).invert()
    for quotient, direct in ((neg_odd1, shifted_pochhammer(1, 2, m5, half, negated=True)),
                             (neg_odd5, shifted_pochhammer(5, 10, m5, half, negated=True))):
        sub = quotient.equal_to_order(direct, half)
        if not sub.equal:
            results.append(ProofStepResult(
                "s11", "q replaced by -q; (-q;q^2) realized as (q^2;q^2)^2/((q;q)(q^4;q^4))",
                half, False, sub.first_mismatch))
            return results
    if done(_compared(
            "s11", "q replaced by -q; (-q;q^2) realized as (q^2;q^2)^2/((q;q)(q^4;q^4))",
            alternating,
            (poch(10, half) ** 3) * ((neg_odd5 ** 3) * (poch(20, half) ** 3)).invert()
            * (neg_odd1 ** 2) * (poch(2, half) ** 4) * (poch(4, half) ** 2),
            half)):
        return results

    # s12: the alternating series collapses; rebuild it from the oracle at
    # full order and anchor the chain-built copy against it
    signed = [oracle.values[5 * i] if i % 2 == 0 else -oracle.values[5 * i]
              for i in range(n + 1)]
    alternating_oracle = TruncatedSeries(EXACT, signed).reduce_mod(5)
    anchor = alternating.equal_to_order(alternating_oracle, half)
    if not anchor.equal:
        results.append(ProofStepResult(
            "s12", "alternating fifth-count series reduced to (q^5;q^5)^2/(q^10;q^10)^2 (q;q)^3 (q^2;q^2)^3",
            half, False, anchor.first_mismatch))
        return results
    if done(_compared(
            "s12", "alternating fifth-count series reduced to (q^5;q^5)^2/(q^10;q^10)^2 (q;q)^3 (q^2;q^2)^3",
            alternating_oracle,
            (poch(5, n) ** 2) * (poch(10, n) ** 2).invert() * (poch(1, n) ** 3) * (poch(2, n) ** 3),
            n)):
        return results

    # s13: expand both cube factors by the triangular-number formula
    expanded = ((poch(5, n) ** 2) * (poch(10, n) ** 2).invert()
                * jacobi_cube(m5, n) * jacobi_cube(m5, n // 2).substitute_power(2))
    if done(_compared(
            "s13", "(q;q)^3 and (q^2;q^2)^3 expanded as alternating odd-weight triangular sums",
            alternating_oracle, expanded, n)):
        return results

    # s14: no exponent 4 mod 5 survives on either side
    final_order = (n - 4) // 5
    zero = TruncatedSeries.zero(m5, final_order)
    step = _compared(
        "s14", "every coefficient at exponents 4 mod 5 vanishes: p_4(25n+20) = 0 (mod 5)",
        expanded.dissect(5, 4), zero, final_order)
    if step.passed:
        step = _compared(step.step_id, step.description,
                         alternating_oracle.dissect(5, 4), zero, final_order)
    results.append(step)
    return results
