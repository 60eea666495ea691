"""Initial-point convergence certificates for the Weierstrass iteration.

Everything here is driven by one scalar quantity, E(z) = ||W(z)/d(z)||_p, and
one scalar function of it, `majorant`. A point certifies convergence when
E < 1/2^(1/q) and majorant(E) <= 1; the certified region's edge is the
convergence radius, the unique solution of majorant(x) = 1. The same
quantities yield computable a priori and a posteriori error bounds for every
iterate. The remaining functions reproduce the catalog of published
sufficient thresholds (closed forms and extremal constants) that the exact
radius is compared against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    CertificateNotSatisfied,
    ConvergenceFailure,
    DegenerateDenominator,
    DomainViolation,
)
from .numerics import bisect, minimize_1d
from .operator import NormIndex, NormLike, as_norm, certificate_quantity
from .polynomial import Polynomial

#: Printed constants of the linear max-norm radius 1/(slope*n + offset).
INF_LINEAR_SLOPE = 1.76325
INF_LINEAR_OFFSET = 0.6869
#: Petkovic-Herceg threshold constants, kept verbatim (note the different offset).
PETKOVIC_HERCEG_SLOPE = 1.76325
PETKOVIC_HERCEG_OFFSET = 0.8689425

_BISECT_TOL = 1e-12


@dataclass(frozen=True)
class Certificate:
    """Outcome of the initial-point convergence test at one point.

    lam = majorant(e0) decides convergence (lam <= 1) and the quadratic rate
    (lam < 1); theta = 1 - 2^(1/q) e0 is the geometric factor of the error
    bounds. lam is +inf when e0 falls outside the majorant's domain.
    """

    e0: float
    lam: float
    theta: float
    satisfied: bool
    strict: bool


def _check_degree(n: int) -> None:
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")


def majorant(x: float, n: int, p: NormLike) -> float:
    """The scalar convergence test function.

    majorant(x) = a x / ((1-x)(1-b x)) * (1 + x / (c (1-b x)))^(n-1)
    with a = (n-1)^(1/q), b = 2^(1/q), c = (n-1)^(1/p). It is zero at zero,
    strictly increasing, and blows up at the right end of its domain
    [0, min(1, 1/b)). Values above the domain raise DomainViolation.
    """
    _check_degree(n)
    norm = as_norm(p)
    b = 2.0 ** (1.0 / norm.q)
    limit = min(1.0, 1.0 / b)
    if not 0.0 <= x < limit:
        raise DomainViolation(f"argument must lie in [0, {limit:g}), got {x}")
    den1 = 1.0 - x
    den2 = 1.0 - b * x
    if den1 <= 0.0 or den2 <= 0.0:
        raise DomainViolation(f"argument {x} is too close to the domain edge {limit:g}")
    a = (n - 1) ** (1.0 / norm.q)
    c = (n - 1) ** (1.0 / norm.p)
    try:
        growth = (1.0 + x / (c * den2)) ** (n - 1)
    except OverflowError:
        return math.inf
    return a * x / (den1 * den2) * growth


@lru_cache(maxsize=None)
def _radius_cached(n: int, p_value: float) -> float:
    norm = NormIndex(p_value)
    b = 2.0 ** (1.0 / norm.q)
    hi = (1.0 / b) * (1.0 - 1e-12)
    return bisect(lambda x: majorant(x, n, norm) - 1.0, 0.0, hi, tol=_BISECT_TOL)


def convergence_radius(n: int, p: NormLike) -> float:
    """Largest certifiable E(z0): the unique root of majorant(x) = 1.

    Found by bisection (the majorant rises monotonically from 0 to +inf on
    its domain), to absolute tolerance 1e-12.
    """
    _check_degree(n)
    return _radius_cached(n, as_norm(p).p)


def certificate_from_quantity(e: float, n: int, p: NormLike) -> Certificate:
    """Build the certificate for a point whose quantity E equals e."""
    _check_degree(n)
    norm = as_norm(p)
    b = 2.0 ** (1.0 / norm.q)
    in_domain = 0.0 <= e < min(1.0, 1.0 / b)
    lam = majorant(e, n, norm) if in_domain else math.inf
    theta = 1.0 - b * e
    satisfied = in_domain and lam <= 1.0
    return Certificate(
        e0=e,
        lam=lam,
        theta=theta,
        satisfied=satisfied,
        strict=satisfied and lam < 1.0,
    )


def certify(poly: Polynomial, z0: Sequence[complex], p: NormLike) -> Certificate:
    """Run the initial-point test at z0: compute E(z0) and evaluate the majorant."""
    data = certificate_quantity(poly, z0, p)
    return certificate_from_quantity(data.e, poly.degree, data.p)


def apriori_bound(k: int, cert: Certificate, first_step_norm: float) -> float:
    """Error bound for iterate k from data at the initial point alone.

    ||z^k - roots||_p <= theta^k lam^(2^k - 1) / (1 - theta lam^(2^k)) * ||z^1 - z^0||_p
    for k >= 1. The doubly exponential power is taken through exp/log so that
    underflow clamps cleanly to zero.
    """
    if k < 1:
        raise DomainViolation(f"the bound holds for k >= 1, got k = {k}")
    if not cert.satisfied:
        raise CertificateNotSatisfied(f"certificate does not hold (lam = {cert.lam:g})")
    lam, theta = cert.lam, cert.theta
    if lam == 0.0 or first_step_norm == 0.0:
        return 0.0
    if lam == 1.0:
        pow_2k = 1.0
        pow_2k_minus_1 = 1.0
    else:
        two_k = 2.0 ** k if k < 1024 else math.inf
        log_lam = math.log(lam)
        pow_2k = math.exp(two_k * log_lam)
        pow_2k_minus_1 = math.exp((two_k - 1.0) * log_lam)
    denom = 1.0 - theta * pow_2k
    if denom <= 0.0:
        raise DegenerateDenominator(f"1 - theta lam^(2^k) = {denom:g} is not positive")
    return theta ** k * pow_2k_minus_1 / denom * first_step_norm


def aposteriori_bound(
    poly: Polynomial,
    zk: Sequence[complex],
    p: NormLike,
    step_norm: float,
) -> float:
    """Error bound for the next iterate from data at the current one.

    ||z^(k+1) - roots||_p <= theta_k lam_k / (1 - theta_k lam_k^2) * ||z^(k+1) - z^k||_p
    where lam_k and theta_k come from the certificate evaluated at z^k. Raises
    CertificateNotSatisfied when the per-point test fails, rather than
    assuming it persists along the iteration.
    """
    cert = certify(poly, zk, p)
    if not cert.satisfied:
        raise CertificateNotSatisfied(f"certificate does not hold at this point (E = {cert.e0:g})")
    denom = 1.0 - cert.theta * cert.lam ** 2
    if denom <= 0.0:
        raise DegenerateDenominator(f"1 - theta lam^2 = {denom:g} is not positive")
    return cert.theta * cert.lam / denom * step_norm


# ---------------------------------------------------------------------------
# Published sufficient thresholds.
#
# "ratio" thresholds bound E(z0) = ||W/d||_p directly; "w over delta"
# thresholds bound ||W(z0)||_p / delta(z0), which by the elementary inequality
# E <= ||W||_p / delta is the cruder certificate.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def solve_exp_fixed_point() -> float:
    """Unique solution A of exp(1/A) = A, bracketed in (1, 3); about 1.763222."""
    return bisect(lambda x: math.exp(1.0 / x) - x, 1.0, 3.0, tol=_BISECT_TOL)


def radius_exp_majorant(n: int, p: NormLike, sharp: bool = False) -> float:
    """Closed-form certified radius built on the constant A of exp(1/A) = A.

    Plain form 1/(A a + b + 1) with a = (n-1)^(1/q), b = 2^(1/q). The sharp
    form 2/(m + sqrt(m^2 - 4b)), m = A a + b + 1, is the exact point where the
    exponential upper envelope of the majorant reaches 1, so it is larger and
    still certified.
    """
    _check_degree(n)
    norm = as_norm(p)
    a = (n - 1) ** (1.0 / norm.q)
    b = 2.0 ** (1.0 / norm.q)
    m = solve_exp_fixed_point() * a + b + 1.0
    if sharp:
        return 2.0 / (m + math.sqrt(m * m - 4.0 * b))
    return 1.0 / m


def radius_simple(n: int, p: NormLike) -> float:
    """The plain closed form 1/(2(n-1)^(1/q) + 2)."""
    _check_degree(n)
    norm = as_norm(p)
    return 1.0 / (2.0 * (n - 1) ** (1.0 / norm.q) + 2.0)


@lru_cache(maxsize=None)
def radius_sum_norm() -> float:
    """Certified radius specific to p = 1; about 0.307541.

    Unique root in (0, 1) of x/(1-x)^2 * exp(x/(1-x)) = 1, the n -> inf
    envelope of the p = 1 majorant, so the value certifies every degree.
    """
    return bisect(
        lambda x: x / (1.0 - x) ** 2 * math.exp(x / (1.0 - x)) - 1.0,
        1e-9,
        0.9,
        tol=_BISECT_TOL,
    )


def radius_han(n: int, p: NormLike) -> float:
    """Han's threshold tau (1 - a tau) with tau = n(2^(1/n) - 1)/(a + b)."""
    _check_degree(n)
    norm = as_norm(p)
    a = (n - 1) ** (1.0 / norm.q)
    b = 2.0 ** (1.0 / norm.q)
    tau = n * (2.0 ** (1.0 / n) - 1.0) / (a + b)
    return tau * (1.0 - a * tau)


def lambda_zheng(c: float, n: int) -> float:
    """Zheng's convergence factor for C = ||W(z0)||_inf / delta(z0) < 1/2.

    (n-1) C / ((1-C)(1-2C)) * (1 + C/(1-2C))^(n-1); convergence is certified
    when this is at most 1. Coincides with majorant(C, n, inf).
    """
    _check_degree(n)
    if not 0.0 < c < 0.5:
        raise DomainViolation(f"C must lie in (0, 1/2), got {c}")
    return (n - 1) * c / ((1.0 - c) * (1.0 - 2.0 * c)) * (1.0 + c / (1.0 - 2.0 * c)) ** (n - 1)


def radius_inf_linear(n: int) -> float:
    """Max-norm radius 1/(1.76325 n + 0.6869), specific to p = inf.

    The printed constants are kept verbatim; they are tuned so that the
    majorant stays below 1 for every degree, peaking near n = 132.
    """
    _check_degree(n)
    return 1.0 / (INF_LINEAR_SLOPE * n + INF_LINEAR_OFFSET)


def threshold_petkovic_herceg(n: int) -> float:
    """Petkovic-Herceg threshold on ||W(z0)||_inf / delta(z0): 1/(1.76325 n + 0.8689425)."""
    _check_degree(n)
    return 1.0 / (PETKOVIC_HERCEG_SLOPE * n + PETKOVIC_HERCEG_OFFSET)


def c_wangzhao_inf(n: int) -> float:
    """Wang-Zhao max-norm constant C(n) = max over x > 0 of (2x - x(1+x)^(n-1)).

    The maximizer t is the root of the derivative inside (0, 2^(1/(n-1)) - 1);
    the result is cross-checked against the closed form 2(n-1)t^2/(1+nt).
    """
    _check_degree(n)
    upper = 2.0 ** (1.0 / (n - 1)) - 1.0
    t = bisect(
        lambda x: 2.0 - (1.0 + x) ** (n - 2) * (1.0 + n * x),
        0.0,
        upper,
        tol=_BISECT_TOL,
    )
    value = 2.0 * t - t * (1.0 + t) ** (n - 1)
    closed_form = 2.0 * (n - 1) * t * t / (1.0 + n * t)
    if abs(value - closed_form) > 1e-9:
        raise ConvergenceFailure(
            f"stationary point of the Wang-Zhao objective is inaccurate at n = {n}: "
            f"{value:.12g} vs {closed_form:.12g}"
        )
    return value


def c_wangzhao_l1(n: int) -> float:
    """Wang-Zhao sum-norm constant C(n) = -min over x > 0 of f_n(x), n >= 4,

    where f_n(x) = sum_{j=1}^{n-1} ((n-j)/(j! n)) x^(j+1) - x. The objective is
    strictly convex, so a coarse scan of (0, 3] brackets the minimum for the
    golden-section search.
    """
    if n < 4:
        raise DomainViolation(f"this constant is defined for n >= 4, got {n}")

    def objective(x: float) -> float:
        total = 0.0
        factorial = 1.0
        power = x
        for j in range(1, n):
            factorial *= j
            power *= x
            total += (n - j) / (factorial * n) * power
        return total - x

    xs = [0.01 * i for i in range(1, 301)]
    best = min(range(len(xs)), key=lambda i: objective(xs[i]))
    lo = xs[best] - 0.01 if best > 0 else 1e-12
    hi = xs[best] + 0.01 if best < len(xs) - 1 else 3.0
    _, fmin = minimize_1d(objective, lo, hi, tol=_BISECT_TOL)
    return -fmin


def radius_zhaowang_l1(n: int) -> float:
    """Zhao-Wang threshold on ||W(z0)||_1 / delta(z0): (3 - 2 sqrt(2)) n/(n-1)."""
    _check_degree(n)
    return (3.0 - 2.0 * math.sqrt(2.0)) * n / (n - 1)


# ---------------------------------------------------------------------------
# Catalog used by the CLI to compare thresholds at a given (n, p).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadiusEntry:
    """One row of the threshold comparison table.

    kind "ratio" rows bound E(z0) at the table's p; kind "w_over_delta" rows
    bound ||W(z0)||_norm / delta(z0) for the fixed norm stored in `norm`.
    """

    name: str
    value: float
    kind: str
    norm: float | None
    majorant_at_value: float | None


def radius_table(n: int, p: NormLike) -> tuple[list[RadiusEntry], list[tuple[str, str]]]:
    """All thresholds applicable at (n, p), sorted by value descending,
    plus (name, reason) pairs for the ones that do not apply at this p."""
    _check_degree(n)
    norm = as_norm(p)
    entries: list[RadiusEntry] = []
    omitted: list[tuple[str, str]] = []

    def ratio(name: str, value: float) -> None:
        entries.append(RadiusEntry(name, value, "ratio", None, majorant(value, n, norm)))

    def w_over_delta(name: str, value: float, fixed_norm: float) -> None:
        entries.append(RadiusEntry(name, value, "w_over_delta", fixed_norm, None))

    ratio("exact", convergence_radius(n, norm))
    ratio("exp-majorant-sharp", radius_exp_majorant(n, norm, sharp=True))
    ratio("exp-majorant", radius_exp_majorant(n, norm, sharp=False))
    ratio("simple", radius_simple(n, norm))
    ratio("han", radius_han(n, norm))

    if norm.p == 1.0:
        ratio("sum-norm", radius_sum_norm())
    else:
        omitted.append(("sum-norm", "requires p = 1"))
    if math.isinf(norm.p):
        ratio("inf-linear", radius_inf_linear(n))
    else:
        omitted.append(("inf-linear", "requires p = inf"))

    if math.isinf(norm.p):
        w_over_delta("zheng", convergence_radius(n, norm), math.inf)
        w_over_delta("wang-zhao-inf", c_wangzhao_inf(n), math.inf)
        w_over_delta("petkovic-herceg", threshold_petkovic_herceg(n), math.inf)
    else:
        omitted.append(("zheng", "requires p = inf"))
        omitted.append(("wang-zhao-inf", "requires p = inf"))
        omitted.append(("petkovic-herceg", "requires p = inf"))

    if norm.p == 1.0:
        if n >= 4:
            w_over_delta("wang-zhao-l1", c_wangzhao_l1(n), 1.0)
        else:
            omitted.append(("wang-zhao-l1", "requires n >= 4"))
        w_over_delta("zhao-wang-l1", radius_zhaowang_l1(n), 1.0)
    else:
        omitted.append(("wang-zhao-l1", "requires p = 1"))
        omitted.append(("zhao-wang-l1", "requires p = 1"))

    entries.sort(key=lambda entry: -entry.value)
    return entries, omitted
