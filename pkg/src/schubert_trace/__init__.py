"""Canonical trace ideals of Schubert cycles G(X; γ) and determinantal rings
R(X; δ), computed from blocks-and-gaps combinatorics, with brute-force and
exact-determinant verification of the identities involved."""

__version__ = "0.1.0"

from .errors import DefectError, InputError, ResourceError  # noqa: E402
from .minor_poset import (  # noqa: E402
    Ambient,
    BiMinor,
    SchubertIndex,
    enumerate_bi_interval,
    enumerate_schubert_interval,
    leq_bi,
    leq_schubert,
    meet_join,
    multidegree,
)
from .schubert_analysis import (  # noqa: E402
    BaseRingAssumptions,
    Unit,
    block_decompose,
    boundary_family,
    canonical_class,
    kappa_profile,
    schubert_report,
    schubert_trace,
    zeta_sigma,
)
from .dehomogenization import determinantal_profile, n_thresholds, phi_forward, phi_inverse  # noqa: E402
from .determinantal_analysis import det_report, det_trace  # noqa: E402
