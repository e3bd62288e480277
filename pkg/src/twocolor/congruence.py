"""Congruence checks for two-color partition counts, driven by the DP oracle.

Each verifier scans an arithmetic progression of indices and reports either
a clean pass up to the bound or the first counterexample with its exact
count.  Exhaustive scanning of exact values is the point: nothing here
trusts the series engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from .partitions import two_color_table


class Counterexample(NamedTuple):
    """First progression step where a congruence fails."""

    n: int
    index: int
    value: int
    residue: int


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of scanning p_k(a*n + b) mod `modulus` for n = 0..bound."""

    k: int
    modulus: int
    progression: Tuple[int, int]
    bound: int
    counterexample: Optional[Counterexample] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def to_payload(self) -> dict:
        cx = None
        if self.counterexample is not None:
            cx = {
                "n": self.counterexample.n,
                "index": self.counterexample.index,
                # exact counts overflow doubles; JSON carries them as strings
                "value": str(self.counterexample.value),
                "residue": self.counterexample.residue,
            }
        return {
            "k": self.k,
            "modulus": self.modulus,
            "progression": list(self.progression),
            "bound": self.bound,
            "verdict": self.verdict,
            "counterexample": cx,
        }


def _scan_progression(k: int, a: int, b: int, bound: int, modulus: int) -> CongruenceReport:
    table = two_color_table(k, a * bound + b)
    for n in range(bound + 1):
        value = table.values[a * n + b]
        residue = value % modulus
        if residue:
            return CongruenceReport(k, modulus, (a, b), bound,
                                    Counterexample(n, a * n + b, value, residue))
    return CongruenceReport(k, modulus, (a, b), bound, None)


def verify_family(k: int, bound: int, modulus: int = 5) -> CongruenceReport:
    """Scan p_k(25n + 24 - k) mod `modulus` for n = 0..bound."""
    if not 1 <= k <= 24:
        raise ValueError("k must be in 1..24, got %d" % k)
    if bound < 0:
        raise ValueError("bound must be non-negative, got %d" % bound)
    if modulus < 2:
        raise ValueError("modulus must be at least 2, got %d" % modulus)
    return _scan_progression(k, 25, 24 - k, bound, modulus)


def characterize_all(bound: int) -> List[CongruenceReport]:
    """Reports for every k in 1..24 at modulus 5, in k order."""
    return [verify_family(k, bound) for k in range(1, 25)]


def verify_strong_5ell(ell: int, bound: int) -> CongruenceReport:
    """Scan the stronger progression p_{5 ell}(5m + 4) mod 5 for m = 0..bound.

    For k divisible by 5 this implies the 25n progression as the subsequence
    m = 5n + 4 - k/5.
    """
    if ell not in (1, 2, 3, 4):
        raise ValueError("ell must be in 1..4, got %d" % ell)
    if bound < 0:
        raise ValueError("bound must be non-negative, got %d" % bound)
    return _scan_progression(5 * ell, 5, 4, bound, 5)


def delta_alpha(alpha: int) -> int:
    """Multiplicative inverse of 8 modulo 5**alpha."""
    if alpha < 1:
        raise ValueError("alpha must be positive, got %d" % alpha)
    return pow(8, -1, 5 ** alpha)


def verify_chan_toh(alpha: int, bound: int) -> CongruenceReport:
    """Scan p_2(5^alpha n + delta) mod 5^(alpha//2), delta = 8^(-1) mod 5^alpha."""
    if alpha < 2:
        raise ValueError("alpha must be at least 2, got %d" % alpha)
    if bound < 0:
        raise ValueError("bound must be non-negative, got %d" % bound)
    return _scan_progression(2, 5 ** alpha, delta_alpha(alpha), bound, 5 ** (alpha // 2))


@dataclass(frozen=True)
class ResidueAnalysis:
    """Residues of triangular and doubled-triangular numbers mod m.

    Witness classes are the pairs (r, s) with tri(r) + 2*tri(s) hitting the
    target residue; coefficient_residues[i] is (2r+1)(2s+1) mod m for
    witness i, the residue of the coefficient such a pair contributes.
    """

    modulus: int
    target: int
    triangular_residues: frozenset
    double_triangular_residues: frozenset
    witness_classes: Tuple[Tuple[int, int], ...]
    coefficient_residues: Tuple[int, ...]

    def to_payload(self) -> dict:
        return {
            "modulus": self.modulus,
            "target": self.target,
            "triangular_residues": sorted(self.triangular_residues),
            "double_triangular_residues": sorted(self.double_triangular_residues),
            "witnesses": [
                {"r": r, "s": s, "coefficient_residue": c}
                for (r, s), c in zip(self.witness_classes, self.coefficient_residues)
            ],
        }


def residue_analysis(modulus: int = 5, target: int = 4) -> ResidueAnalysis:
    """Enumerate tri(r) = r(r+1)/2 and 2*tri(s) = s(s+1) residues for r, s in 0..m-1."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2, got %d" % modulus)
    target = target % modulus
    tri = frozenset(r * (r + 1) // 2 % modulus for r in range(modulus))
    dbl = frozenset(s * (s + 1) % modulus for s in range(modulus))
    witnesses = tuple(
        (r, s)
        for r in range(modulus)
        for s in range(modulus)
        if (r * (r + 1) // 2 + s * (s + 1)) % modulus == target
    )
    coefficients = tuple((2 * r + 1) * (2 * s + 1) % modulus for r, s in witnesses)
    return ResidueAnalysis(modulus, target, tri, dbl, witnesses, coefficients)
