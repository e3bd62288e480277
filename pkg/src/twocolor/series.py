"""Truncated formal power series in one variable q over Z or Z/m.

A series stores dense coefficients for q^0 .. q^order and knows nothing
beyond q^order.  Binary operations truncate to the smaller operand order
rather than padding, so every stored coefficient of a result is exact.
Series are immutable; every operation returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from . import kernels

# residue kernels accumulate in 64-bit words
MAX_MODULUS = 1 << 31


@dataclass(frozen=True)
class CoefficientRing:
    """Exact arbitrary-precision integers (modulus None) or residues mod m."""

    modulus: Optional[int] = None

    def __post_init__(self):
        m = self.modulus
        if m is None:
            return
        if not isinstance(m, int) or isinstance(m, bool):
            raise TypeError("modulus must be an int, got %r" % (m,))
        if m < 2:
            raise ValueError("modulus must be at least 2, got %d" % m)
        if m > MAX_MODULUS:
            raise ValueError("modulus %d exceeds the machine-word bound 2**31" % m)

    @classmethod
    def mod(cls, m: int) -> "CoefficientRing":
        return cls(m)

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def reduce(self, value: int) -> int:
        return value if self.modulus is None else value % self.modulus

    def is_unit(self, value: int) -> bool:
        if self.modulus is None:
            return value in (1, -1)
        return math.gcd(value, self.modulus) == 1

    def inverse(self, value: int) -> int:
        """Multiplicative inverse of a unit; raises ValueError otherwise."""
        if self.modulus is None:
            if value not in (1, -1):
                raise ValueError("%d is not a unit over the integers" % value)
            return value
        try:
            return pow(value, -1, self.modulus)
        except ValueError:
            raise ValueError("%d is not invertible modulo %d" % (value, self.modulus)) from None

    def __str__(self):
        return "Z" if self.modulus is None else "Z/%d" % self.modulus


EXACT = CoefficientRing()


class SeriesComparison(NamedTuple):
    """Outcome of a coefficientwise comparison through a stated order."""

    equal: bool
    first_mismatch: Optional[int]


class TruncatedSeries:
    """Dense coefficient vector for q^0 .. q^order over a CoefficientRing."""

    __slots__ = ("ring", "order", "_coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Sequence[int]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        reduced = []
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be ints, got %r" % (c,))
            reduced.append(ring.reduce(c))
        self.ring = ring
        self.order = len(reduced) - 1
        self._coeffs = tuple(reduced)

    @classmethod
    def _wrap(cls, ring: CoefficientRing, coeffs) -> "TruncatedSeries":
        # trusted path: coefficients already reduced into the ring
        s = cls.__new__(cls)
        s.ring = ring
        s.order = len(coeffs) - 1
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def make(cls, ring: CoefficientRing, order: int,
             terms: Iterable[Tuple[int, int]]) -> "TruncatedSeries":
        """Series of the given order from sparse (exponent, coefficient) pairs."""
        if order < 0:
            raise ValueError("order must be non-negative, got %d" % order)
        coeffs = [0] * (order + 1)
        seen = set()
        for exponent, value in terms:
            if exponent in seen:
                raise ValueError("duplicate exponent %d" % exponent)
            if exponent < 0 or exponent > order:
                raise ValueError("exponent %d outside 0..%d" % (exponent, order))
            seen.add(exponent)
            coeffs[exponent] = ring.reduce(value)
        return cls._wrap(ring, coeffs)

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be non-negative, got %d" % order)
        return cls._wrap(ring, [0] * (order + 1))

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be non-negative, got %d" % order)
        coeffs = [0] * (order + 1)
        coeffs[0] = ring.reduce(1)
        return cls._wrap(ring, coeffs)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def coefficient(self, exponent: int) -> int:
        if exponent < 0 or exponent > self.order:
            raise IndexError("exponent %d outside 0..%d" % (exponent, self.order))
        return self._coeffs[exponent]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def _require_same_ring(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries, got %r" % (other,))
        if self.ring != other.ring:
            raise ValueError("ring mismatch: %s vs %s" % (self.ring, other.ring))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        m = self.ring.modulus
        if m is None:
            coeffs = [a[i] + b[i] for i in range(order + 1)]
        else:
            coeffs = [(a[i] + b[i]) % m for i in range(order + 1)]
        return TruncatedSeries._wrap(self.ring, coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        m = self.ring.modulus
        if m is None:
            coeffs = [a[i] - b[i] for i in range(order + 1)]
        else:
            coeffs = [(a[i] - b[i]) % m for i in range(order + 1)]
        return TruncatedSeries._wrap(self.ring, coeffs)

    def __neg__(self) -> "TruncatedSeries":
        m = self.ring.modulus
        if m is None:
            coeffs = [-c for c in self._coeffs]
        else:
            coeffs = [(-c) % m for c in self._coeffs]
        return TruncatedSeries._wrap(self.ring, coeffs)

    def _scale(self, value: int) -> "TruncatedSeries":
        m = self.ring.modulus
        if m is None:
            coeffs = [c * value for c in self._coeffs]
        else:
            coeffs = [(c * value) % m for c in self._coeffs]
        return TruncatedSeries._wrap(self.ring, coeffs)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._scale(other)
        self._require_same_ring(other)
        order = min(self.order, other.order)
        a, b = list(self._coeffs), list(other._coeffs)
        m = self.ring.modulus
        if m is None:
            coeffs = kernels.mul_int(a, b, order)
        else:
            coeffs = kernels.mul_mod(a, b, order, m)
        return TruncatedSeries._wrap(self.ring, coeffs)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            raise TypeError("exponent must be an int, got %r" % (exponent,))
        if exponent < 0:
            raise ValueError("exponent must be non-negative, got %d" % exponent)
        result = TruncatedSeries.one(self.ring, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Reciprocal series: self * self.invert() = 1 through self.order.

        The constant term must be a unit of the coefficient ring.
        """
        c0 = self._coeffs[0]
        if not self.ring.is_unit(c0):
            raise ValueError("constant term %d is not a unit in %s" % (c0, self.ring))
        inv0 = self.ring.inverse(c0)
        a = list(self._coeffs)
        m = self.ring.modulus
        if m is None:
            coeffs = kernels.invert_int(a, self.order, inv0)
        else:
            coeffs = kernels.invert_mod(a, self.order, m, inv0)
        return TruncatedSeries._wrap(self.ring, coeffs)

    # -- exponent manipulations --------------------------------------------

    def substitute_power(self, k: int) -> "TruncatedSeries":
        """Replace q by q^k.  Knowing self through q^order determines the
        result through q^(k*(order+1)-1), and that is the order returned."""
        if k < 1:
            raise ValueError("power must be positive, got %d" % k)
        coeffs = [0] * (k * (self.order + 1) - 1 + 1)
        for i, c in enumerate(self._coeffs):
            coeffs[k * i] = c
        return TruncatedSeries._wrap(self.ring, coeffs)

    def dissect(self, m: int, r: int) -> "TruncatedSeries":
        """Keep coefficients at exponents = r (mod m), compressing q^(mn+r) to q^n."""
        if m < 1:
            raise ValueError("modulus must be positive, got %d" % m)
        if r < 0 or r >= m:
            raise ValueError("residue %d outside 0..%d" % (r, m - 1))
        if r > self.order:
            raise ValueError("series of order %d has no exponent %d to dissect at" % (self.order, r))
        return TruncatedSeries._wrap(self.ring, list(self._coeffs[r::m]))

    def negate_variable(self) -> "TruncatedSeries":
        """Replace q by -q: odd-exponent coefficients change sign."""
        m = self.ring.modulus
        if m is None:
            coeffs = [c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs)]
        else:
            coeffs = [c if i % 2 == 0 else (-c) % m for i, c in enumerate(self._coeffs)]
        return TruncatedSeries._wrap(self.ring, coeffs)

    def reduce_mod(self, m: int) -> "TruncatedSeries":
        """Map an exact-integer series into Z/m coefficientwise."""
        if not self.ring.is_exact:
            raise ValueError("reduce_mod expects exact integer coefficients, not %s" % self.ring)
        ring = CoefficientRing.mod(m)
        return TruncatedSeries._wrap(ring, [c % m for c in self._coeffs])

    def shift(self, r: int) -> "TruncatedSeries":
        """Multiply by q^r, extending the order to order + r."""
        if r < 0:
            raise ValueError("shift must be non-negative, got %d" % r)
        return TruncatedSeries._wrap(self.ring, [0] * r + list(self._coeffs))

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above the given order (which must not exceed self.order)."""
        if order < 0:
            raise ValueError("order must be non-negative, got %d" % order)
        if order > self.order:
            raise ValueError("cannot extend order %d to %d" % (self.order, order))
        return TruncatedSeries._wrap(self.ring, self._coeffs[:order + 1])

    def equal_to_order(self, other: "TruncatedSeries", through: int) -> SeriesComparison:
        """Compare coefficients for q^0 .. q^through."""
        self._require_same_ring(other)
        if through < 0:
            raise ValueError("comparison order must be non-negative, got %d" % through)
        if through > min(self.order, other.order):
            raise ValueError("comparison through %d exceeds the common order %d"
                             % (through, min(self.order, other.order)))
        a, b = self._coeffs, other._coeffs
        for i in range(through + 1):
            if a[i] != b[i]:
                return SeriesComparison(False, i)
        return SeriesComparison(True, None)

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ring, self._coeffs))

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("q" if i == 1 else "q^%d" % i)
            else:
                terms.append("%d*q" % c if i == 1 else "%d*q^%d" % (c, i))
        body = " + ".join(terms) if terms else "0"
        return "%s + O(q^%d)" % (body, self.order + 1)

    def __repr__(self):
        return "<TruncatedSeries %s over %s>" % (self, self.ring)
