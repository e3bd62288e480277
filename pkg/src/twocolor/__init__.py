"""Truncated q-series arithmetic and modulo-5 partition congruences.

Two independent routes to the same numbers: a dense truncated-series engine
(products, reciprocals, dissections, theta expansions) and an exact
dynamic-programming oracle for partition counts.  The congruence and
identity layers play them against each other.
"""

from .congruence import (CongruenceReport, Counterexample, ResidueAnalysis,
                         characterize_all, delta_alpha, residue_analysis,
                         verify_chan_toh, verify_family, verify_strong_5ell)
from .identities import (ProofStepResult, check_beauty_identity,
                         check_frobenius_congruence, check_jacobi,
                         check_phi_5dissection, check_phi_f_identity,
                         check_phi_product, replay_k4_proof)
from .kernels import BACKEND
from .partitions import PartitionTable, partition_table, two_color_table
from .series import (EXACT, CoefficientRing, SeriesComparison, TruncatedSeries)
from .special import (ThetaSpec, jacobi_cube, phi, phi_product, pochhammer,
                      shifted_pochhammer, theta_f)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CoefficientRing",
    "CongruenceReport",
    "Counterexample",
    "EXACT",
    "PartitionTable",
    "ProofStepResult",
    "ResidueAnalysis",
    "SeriesComparison",
    "ThetaSpec",
    "TruncatedSeries",
    "characterize_all",
    "check_beauty_identity",
    "check_frobenius_congruence",
    "check_jacobi",
    "check_phi_5dissection",
    "check_phi_f_identity",
    "check_phi_product",
    "delta_alpha",
    "jacobi_cube",
    "partition_table",
    "phi",
    "phi_product",
    "pochhammer",
    "replay_k4_proof",
    "residue_analysis",
    "shifted_pochhammer",
    "theta_f",
    "two_color_table",
    "verify_chan_toh",
    "verify_family",
    "verify_strong_5ell",
    "__version__",
]
