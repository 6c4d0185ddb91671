"""Schwarz-function construction, membership tests, and the bound fuzzer.

A Schwarz function here is a polynomial omega with omega(0) = 0 that maps
the unit disk into itself.  Members of the subordination class are built
from omega by solving z*F' = F*Q coefficient-wise with
Q = 1 + gamma*(A-B)*omega/(1 + B*omega), then dividing out the weights
1 + lambda*(k-1).  Recovering omega from a member inverts the Moebius
target pointwise on series: omega = (P-1)/(A - B*P).

The fuzzer drives many random Schwarz samples through this construction
and compares each |a_n| against the bound formulas.  Everything is keyed
off a single integer seed; sample i owns the RNG stream seeded by
(seed, i), so reports do not depend on evaluation order and identical
seeds give byte-identical reports.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import series as srs
from .bounds import coefficient_bound
from .errors import InversionSingular, ParameterDomainError
from .params import ClassParams
from .series import ComplexSeries

CONSTRUCTIONS = ("polynomial_normalized", "rotation", "monomial")

# Largest index the per-sample quadratic-sum inequality is checked at; the
# check needs all lower coefficients, so cost grows quadratically with it.
QUADRATIC_CHECK_LIMIT = 10

_SUP_GRID_RADIUS = 0.99
_SUP_GRID_ANGLES = 256


@dataclass(frozen=True)
class SchwarzSample:
    """A polynomial self-map of the disk with omega(0) = 0.

    sup_estimate is the max of |omega| over a fixed boundary-adjacent
    grid; the polynomial_normalized construction additionally guarantees
    sum_j |c_j| <= 1, which certifies |omega| < 1 analytically.
    """

    omega: ComplexSeries
    sup_estimate: float
    construction: str
    seed: tuple | None

    def to_json_dict(self) -> dict:
        return {
            "omega": self.omega.to_json_dict(),
            "sup_estimate": self.sup_estimate,
            "construction": self.construction,
            "seed": list(self.seed) if self.seed is not None else None,
        }


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    margin: float
    radius_used: float
    angles_used: int

    def to_json_dict(self) -> dict:
        return {
            "member": self.member,
            "margin": self.margin,
            "radius": self.radius_used,
            "angles": self.angles_used,
        }


def _grid_sup(omega: ComplexSeries) -> float:
    vals = omega.eval_on_circle(_SUP_GRID_RADIUS, _SUP_GRID_ANGLES)
    return float(np.max(np.abs(vals)))


def sample_schwarz(
    seed,
    degree: int,
    construction: str = "polynomial_normalized",
    rho: float | None = None,
    theta: float | None = None,
) -> SchwarzSample:
    """Draw a random Schwarz polynomial, reproducibly for a given seed.

    polynomial_normalized: omega = z * sum_{j<d} c_j z^j with the c_j
    rescaled so sum|c_j| = rho for a random rho in (0, 1].
    rotation: omega = exp(i*theta) * z.  monomial: omega = rho * z^d.
    """
    if degree < 1:
        raise ParameterDomainError(f"degree must be >= 1, got {degree}")
    if construction not in CONSTRUCTIONS:
        raise ParameterDomainError(
            f"unknown construction {construction!r}; expected one of {CONSTRUCTIONS}"
        )
    rng = np.random.default_rng(seed)
    seed_tuple = tuple(seed) if isinstance(seed, (tuple, list)) else (int(seed),)

    if construction == "rotation":
        if theta is None:
            theta = float(rng.uniform(0.0, 2.0 * np.pi))
        omega = srs.monomial(srs.exp_i(theta), 1, 1)
    elif construction == "monomial":
        if rho is None:
            rho = 1.0 - float(rng.random())
        if not 0.0 < rho <= 1.0:
            raise ParameterDomainError(f"rho must be in (0, 1], got {rho}")
        omega = srs.monomial(rho, degree, degree)
    else:
        if rho is None:
            rho = 1.0 - float(rng.random())
        if not 0.0 < rho <= 1.0:
            raise ParameterDomainError(f"rho must be in (0, 1], got {rho}")
        c = rng.standard_normal(degree) + 1j * rng.standard_normal(degree)
        total = float(np.sum(np.abs(c)))
        if total == 0.0:
            c = np.ones(degree, dtype=np.complex128)
            total = float(degree)
        c = c * (rho / total)
        coeffs = np.zeros(degree + 1, dtype=np.complex128)
        coeffs[1:] = c
        omega = ComplexSeries(coeffs)

    return SchwarzSample(omega, _grid_sup(omega), construction, seed_tuple)


def member_from_schwarz(omega, p: ClassParams, order: int) -> ComplexSeries:
    """The unique normalized class member generated by a Schwarz polynomial.

    omega may be a SchwarzSample or a plain series with zero constant
    term; it is treated as an exact polynomial and zero-padded as needed.
    """
    om = omega.omega if isinstance(omega, SchwarzSample) else omega
    if order < 1:
        raise ParameterDomainError("order must be at least 1")
    if abs(om.coefficient(0)) > srs.UNIT_TOLERANCE:
        raise ParameterDomainError("omega must vanish at the origin")
    target = max(order - 1, 0)
    om = om.extend(target) if om.order < target else om.truncate(target)
    denom = srs.constant(1.0, target) + om.scale(p.b)
    q = srs.constant(1.0, target) + om.scale(p.product_base()).div(denom)
    big_f = srs.solve_log_derivative(q)
    coeffs = np.asarray(big_f.coeffs, dtype=np.complex128)
    ks = np.arange(len(coeffs))
    coeffs[1:] = coeffs[1:] / (1.0 + p.lam * (ks[1:] - 1))
    return ComplexSeries(coeffs)


def schwarz_from_member(f: ComplexSeries, p: ClassParams) -> SchwarzSample:
    """Recover the Schwarz series that generates a given member.

    Inverts P = (1+A*w)/(1+B*w) as omega = (P-1)/(A - B*P), where P is
    the subordinated quantity 1 + (1/gamma)*(zF'/F - 1).  The recovered
    series has order f.order - 1.
    """
    srs.require_normalized(f)
    coeffs = np.asarray(f.coeffs, dtype=np.complex128)
    ks = np.arange(len(coeffs))
    big_f = coeffs * (1.0 + p.lam * np.maximum(ks - 1, 0))
    u = ComplexSeries(big_f[1:])  # F/z, a unit series
    z_u_prime = u.z_derivative()
    ratio = z_u_prime.div(u).scale(1.0 / p.gamma)  # (1/gamma)*(zF'/F - 1)
    denom = ratio.scale(-p.b) + (p.a - p.b)  # A - B*P
    if abs(denom.coefficient(0)) <= srs.UNIT_TOLERANCE:
        raise InversionSingular("Moebius inversion is singular: A - B*P(0) ~ 0")
    omega = ratio.div(denom)
    return SchwarzSample(omega, _grid_sup(omega), "recovered", None)


def is_member(
    f: ComplexSeries,
    p: ClassParams,
    radius: float = 0.99,
    angles: int = 2048,
    tolerance: float = 1e-6,
) -> MembershipReport:
    """Grid membership test: recover omega and check |omega| < 1.

    The margin is 1 - max|omega| over the grid; boundary-touching
    extremal members sit at margin -> 0+, so a small negative tolerance
    still counts as membership.
    """
    sample = schwarz_from_member(f, p)
    vals = sample.omega.eval_on_circle(radius, angles)
    margin = 1.0 - float(np.max(np.abs(vals)))
    return MembershipReport(margin > -tolerance, margin, radius, angles)


def quadratic_sum_slack(f: ComplexSeries, p: ClassParams, n: int) -> float:
    """Normalized slack of the quadratic coefficient inequality at index n.

    Every member satisfies

      (n-1)^2 (1+lambda*(n-1))^2 |a_n|^2
        <= |gamma|^2 (A-B)^2
           + sum_{k=2}^{n-1} (|gamma*(A-B) - B*(k-1)|^2 - (k-1)^2)
                             * (1+lambda*(k-1))^2 |a_k|^2.

    Returns (rhs - lhs) / max(1, lhs, rhs); both sides grow like n^2 * n^2
    at the extremal members, so the slack is scaled before comparing it
    against a fixed tolerance.  Nonnegative up to rounding for members.
    """
    if n < 2 or n > f.order:
        raise ParameterDomainError(f"need 2 <= n <= {f.order}, got {n}")
    base = p.product_base()
    lhs = ((n - 1) * (1.0 + p.lam * (n - 1)) * abs(f.coefficient(n))) ** 2
    rhs = abs(base) ** 2
    for k in range(2, n):
        weight = (1.0 + p.lam * (k - 1)) ** 2 * abs(f.coefficient(k)) ** 2
        rhs += (abs(base - p.b * (k - 1)) ** 2 - (k - 1) ** 2) * weight
    return (rhs - lhs) / max(1.0, lhs, abs(rhs))


@dataclass(frozen=True)
class FuzzIndexStats:
    n: int
    bound: float
    case_tag: str
    max_observed: float
    argmax_index: int | None
    argmax_seed: tuple | None
    violations: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "case": self.case_tag,
            "max_observed": self.max_observed,
            "argmax_index": self.argmax_index,
            "argmax_seed": list(self.argmax_seed) if self.argmax_seed else None,
            "violations": self.violations,
        }


@dataclass(frozen=True)
class FuzzReport:
    params: ClassParams
    seed: int
    samples: int
    degree: int
    n_max: int
    constructions: dict
    per_index: tuple
    quadratic_checked_to: int
    quadratic_violations: int
    quadratic_min_slack: float

    def total_violations(self) -> int:
        return sum(row.violations for row in self.per_index)

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "seed": self.seed,
            "samples": self.samples,
            "degree": self.degree,
            "n_max": self.n_max,
            "constructions": {k: self.constructions[k] for k in CONSTRUCTIONS},
            "per_n": [row.to_json_dict() for row in self.per_index],
            "quadratic_inequality": {
                "checked_to": self.quadratic_checked_to,
                "violations": self.quadratic_violations,
                "min_slack": self.quadratic_min_slack,
            },
            "total_violations": self.total_violations(),
        }


def _worker_count() -> int:
    raw = os.environ.get("SCHLICHT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _pick_construction(rng) -> str:
    u = rng.random()
    if u < 0.8:
        return "polynomial_normalized"
    if u < 0.9:
        return "rotation"
    return "monomial"


def fuzz_bounds(
    p: ClassParams,
    n_max: int,
    samples: int,
    seed: int,
    degree: int = 4,
    violation_rtol: float = 1e-9,
) -> FuzzReport:
    """Stress-test the bound formulas with random Schwarz samples.

    For each sample, builds the member, records |a_n| for 2 <= n <= n_max
    against the bound (violation when |a_n| > bound*(1+violation_rtol)),
    and checks the quadratic coefficient inequality for n up to 10.
    Deterministic for a given seed regardless of worker count.
    """
    if n_max < 2:
        raise ParameterDomainError(f"n_max must be >= 2, got {n_max}")
    if samples < 1:
        raise ParameterDomainError(f"samples must be >= 1, got {samples}")
    if seed < 0:
        raise ParameterDomainError("seed must be a nonnegative integer")
    bounds = {n: coefficient_bound(p, n) for n in range(2, n_max + 1)}
    check_to = min(n_max, QUADRATIC_CHECK_LIMIT)

    def run_sample(index: int):
        sample_seed = (seed, index)
        # the construction pick owns its own stream so it does not bias the
        # draws sample_schwarz makes from (seed, index)
        pick_rng = np.random.default_rng((seed, index, 1))
        construction = _pick_construction(pick_rng)
        sample = sample_schwarz(sample_seed, degree, construction)
        f = member_from_schwarz(sample, p, n_max)
        magnitudes = [abs(f.coefficient(n)) for n in range(2, n_max + 1)]
        min_slack = min(
            (quadratic_sum_slack(f, p, n) for n in range(2, check_to + 1)),
            default=0.0,
        )
        return construction, sample_seed, magnitudes, min_slack

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_sample, range(samples)))
    else:
        results = [run_sample(i) for i in range(samples)]

    construction_counts = {name: 0 for name in CONSTRUCTIONS}
    max_observed = {n: 0.0 for n in range(2, n_max + 1)}
    argmax = {n: None for n in range(2, n_max + 1)}
    violations = {n: 0 for n in range(2, n_max + 1)}
    quad_min = float("inf")
    quad_violations = 0
    for index, (construction, sample_seed, magnitudes, min_slack) in enumerate(
        results
    ):
        construction_counts[construction] += 1
        for n, value in zip(range(2, n_max + 1), magnitudes):
            if value > max_observed[n]:
                max_observed[n] = value
                argmax[n] = (index, sample_seed)
            if value > bounds[n].value * (1.0 + violation_rtol):
                violations[n] += 1
        if min_slack < quad_min:
            quad_min = min_slack
        if min_slack < -violation_rtol:
            quad_violations += 1

    per_index = tuple(
        FuzzIndexStats(
            n,
            bounds[n].value,
            bounds[n].case_tag,
            max_observed[n],
            argmax[n][0] if argmax[n] else None,
            argmax[n][1] if argmax[n] else None,
            violations[n],
        )
        for n in range(2, n_max + 1)
    )
    return FuzzReport(
        params=p,
        seed=seed,
        samples=samples,
        degree=degree,
        n_max=n_max,
        constructions=construction_counts,
        per_index=per_index,
        quadratic_checked_to=check_to,
        quadratic_violations=quad_violations,
        quadratic_min_slack=float(quad_min),
    )
