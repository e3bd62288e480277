"""Classical q-series constructors: Pochhammer products and theta functions.

Everything here returns a TruncatedSeries over the caller's ring.  Product
expansions run through the in-place factor kernels; theta expansions place
unit coefficients at quadratic exponents directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .series import CoefficientRing, TruncatedSeries


def _qproduct(first: int, step: int, sign: int, ring: CoefficientRing,
              order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be non-negative, got %d" % order)
    if ring.modulus is None:
        coeffs = kernels.qproduct_int(first, step, sign, order)
    else:
        coeffs = kernels.qproduct_mod(first, step, sign, order, ring.modulus)
    return TruncatedSeries._wrap(ring, coeffs)


def pochhammer(step: int, ring: CoefficientRing, order: int) -> TruncatedSeries:
    """(q^step; q^step)_inf: the product of (1 - q^(step*l)) over l >= 1."""
    if step < 1:
        raise ValueError("step must be positive, got %d" % step)
    return _qproduct(step, step, -1, ring, order)


def shifted_pochhammer(first: int, step: int, ring: CoefficientRing, order: int,
                       negated: bool = False) -> TruncatedSeries:
    """(q^first; q^step)_inf, or (-q^first; q^step)_inf when negated.

    Covers the odd-exponent products (q; q^2), (-q; q^2), (q^5; q^10) and
    their relatives that appear when a Pochhammer product is split by
    exponent parity.
    """
    if first < 1:
        raise ValueError("first exponent must be positive, got %d" % first)
    if step < 1:
        raise ValueError("step must be positive, got %d" % step)
    return _qproduct(first, step, 1 if negated else -1, ring, order)


@dataclass(frozen=True)
class ThetaSpec:
    """Arguments of the two-variable theta series f(q^u, q^v)."""

    u: int
    v: int

    def __post_init__(self):
        if self.u < 1 or self.v < 1:
            raise ValueError("theta exponents must be positive, got (%d, %d)" % (self.u, self.v))

    def exponent(self, j: int) -> int:
        # j(j+1) and j(j-1) are even for every integer j, so this is exact
        return self.u * j * (j + 1) // 2 + self.v * j * (j - 1) // 2


def theta_f(spec: ThetaSpec, ring: CoefficientRing, order: int) -> TruncatedSeries:
    """f(q^u, q^v) = sum over all integers j of q^(u j(j+1)/2 + v j(j-1)/2).

    The exponent grows quadratically in |j|; each direction stops after two
    consecutive terms land beyond the truncation order.
    """
    if order < 0:
        raise ValueError("order must be non-negative, got %d" % order)
    coeffs = [0] * (order + 1)
    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        misses = 0
        while misses < 2:
            e = spec.exponent(j)
            if e <= order:
                coeffs[e] += 1
                misses = 0
            else:
                misses += 1
            j += direction
    return TruncatedSeries(ring, coeffs)


def phi(ring: CoefficientRing, order: int) -> TruncatedSeries:
    """The theta series 1 + 2q + 2q^4 + 2q^9 + ... with exponents j^2."""
    return theta_f(ThetaSpec(1, 1), ring, order)


def phi_product(ring: CoefficientRing, order: int) -> TruncatedSeries:
    """Product form of phi: (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)."""
    num = pochhammer(2, ring, order) ** 5
    den = (pochhammer(1, ring, order) ** 2) * (pochhammer(4, ring, order) ** 2)
    return num * den.invert()


def jacobi_cube(ring: CoefficientRing, order: int) -> TruncatedSeries:
    """(q;q)_inf^3 expanded as sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2)."""
    if order < 0:
        raise ValueError("order must be non-negative, got %d" % order)
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        value = 2 * n + 1 if n % 2 == 0 else -(2 * n + 1)
        coeffs[n * (n + 1) // 2] = ring.reduce(value)
        n += 1
    return TruncatedSeries._wrap(ring, coeffs)
