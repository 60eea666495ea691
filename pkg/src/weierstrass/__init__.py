"""Simultaneous polynomial root finding with certified convergence.

Finds all zeros of a monic complex polynomial at once by iterating
z^(k+1) = z^k - W(z^k), where W is the Weierstrass correction. Convergence is
certified from data at the initial point alone through the single scalar
quantity E(z0) = ||W(z0)/d(z0)||_p, and every iterate carries rigorous a
priori and a posteriori error bounds. The package also tabulates the family
of published sufficient convergence radii and implements the damped (SOR)
variant of the iteration.
"""

__version__ = "0.1.0"

from .certificates import (
    Certificate,
    RadiusEntry,
    aposteriori_bound,
    apriori_bound,
    c_wangzhao_inf,
    c_wangzhao_l1,
    certificate_from_quantity,
    certify,
    convergence_radius,
    lambda_zheng,
    majorant,
    radius_exp_majorant,
    radius_han,
    radius_inf_linear,
    radius_simple,
    radius_sum_norm,
    radius_table,
    radius_zhaowang_l1,
    solve_exp_fixed_point,
    threshold_petkovic_herceg,
)
from .errors import (
    CertificateNotSatisfied,
    ConvergenceFailure,
    DegenerateDenominator,
    DegreeTooLarge,
    DegreeTooSmall,
    DistinctCoordinatesViolated,
    DomainViolation,
    DuplicateRoots,
    InvalidExponent,
    NoSignChange,
    NonFiniteValue,
    ParseError,
    WeierstrassError,
    ZeroLeadingCoefficient,
)
from .numerics import bisect, match_roots, minimize_1d
from .operator import (
    NormIndex,
    OperatorData,
    PointVector,
    as_norm,
    certificate_quantity,
    conjugate_exponent,
    distances,
    p_norm,
    weierstrass_correction,
)
from .polynomial import DEFAULT_MAX_DEGREE, Polynomial
from .solver import (
    IterationRecord,
    IterationTrace,
    SolverOptions,
    h_ratio,
    h_wangzhao,
    run_sor,
    run_weierstrass,
)

__all__ = [
    "Certificate",
    "CertificateNotSatisfied",
    "ConvergenceFailure",
    "DEFAULT_MAX_DEGREE",
    "DegenerateDenominator",
    "DegreeTooLarge",
    "DegreeTooSmall",
    "DistinctCoordinatesViolated",
    "DomainViolation",
    "DuplicateRoots",
    "InvalidExponent",
    "IterationRecord",
    "IterationTrace",
    "NoSignChange",
    "NonFiniteValue",
    "NormIndex",
    "OperatorData",
    "ParseError",
    "PointVector",
    "Polynomial",
    "RadiusEntry",
    "SolverOptions",
    "WeierstrassError",
    "ZeroLeadingCoefficient",
    "aposteriori_bound",
    "apriori_bound",
    "as_norm",
    "bisect",
    "c_wangzhao_inf",
    "c_wangzhao_l1",
    "certificate_from_quantity",
    "certificate_quantity",
    "certify",
    "conjugate_exponent",
    "convergence_radius",
    "distances",
    "h_ratio",
    "h_wangzhao",
    "lambda_zheng",
    "majorant",
    "match_roots",
    "minimize_1d",
    "p_norm",
    "radius_exp_majorant",
    "radius_han",
    "radius_inf_linear",
    "radius_simple",
    "radius_sum_norm",
    "radius_table",
    "radius_zhaowang_l1",
    "run_sor",
    "run_weierstrass",
    "solve_exp_fixed_point",
    "threshold_petkovic_herceg",
    "weierstrass_correction",
]
