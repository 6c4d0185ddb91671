"""Disk criteria for spiral-likeness and the associated growth bounds.

The membership tests here are grid evaluations on circles |z| = r: the
quantities z*f'/f (spiral/starlike tests) and (1 + z*f''/f')/(z*f'/f)
(the quotient-deviation class) are sampled at equispaced angles and the
relevant real-part minimum or deviation maximum is reported.  By the
maximum principle the largest test radius is the binding one.

Instances that satisfy the quotient criteria are constructed forward:
given a source s with s(0) = 0, the recurrence k*p_k = [z^k](s * p^2)
solves z*p' = s*p^2 with p(0) = 1, and z*f'/f = p then determines the
member.  Constructing forward avoids inverting the non-univalent target
of the criterion, and exercises the implication in the direction it is
actually used.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import series as srs
from .errors import (
    EvaluationSingularity,
    ParameterDomainError,
    PreconditionNotVerified,
)
from .series import ComplexSeries
from .subordination import SchwarzSample

SINGULARITY_FLOOR = 1e-12

DEFAULT_RADII = (0.5, 0.9, 0.95)
DEFAULT_ANGLES = 2048

GROWTH_RADII = (0.3, 0.5, 0.6)
GROWTH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpiralParams:
    """Rotation angle alpha with |alpha| < pi/2.

    a_spiral is the unimodular constant exp(-2i*alpha) of the Moebius
    target.  When the same alpha is reused as a starlikeness order
    (0 <= alpha < 1) the growth exponent satisfies 1/beta = 2*(1-alpha);
    beta_for_growth exposes that value.
    """

    alpha: float

    def __post_init__(self):
        if not abs(self.alpha) < math.pi / 2:
            raise ParameterDomainError(f"need |alpha| < pi/2, got {self.alpha}")

    @property
    def a_spiral(self) -> complex:
        return cmath.exp(-2j * self.alpha)

    @property
    def beta_for_growth(self) -> float:
        if not 0.0 <= self.alpha < 1.0:
            raise ParameterDomainError(
                f"growth exponent needs 0 <= alpha < 1, got {self.alpha}"
            )
        return 1.0 / (2.0 * (1.0 - self.alpha))


@dataclass(frozen=True)
class SpiralReport:
    member: bool
    min_re: float
    radius: float
    angles: int
    winding: int

    def to_json_dict(self) -> dict:
        return {
            "member": self.member,
            "min_re": self.min_re,
            "radius": self.radius,
            "angles": self.angles,
            "winding": self.winding,
        }


@dataclass(frozen=True)
class DeviationReport:
    member: bool
    max_dev: float
    radius: float
    angles: int
    winding: int

    def to_json_dict(self) -> dict:
        return {
            "member": self.member,
            "max_dev": self.max_dev,
            "radius": self.radius,
            "angles": self.angles,
            "winding": self.winding,
        }


@dataclass(frozen=True)
class GrowthReport:
    ok: bool
    worst_slack: float
    alpha: float
    beta: float
    radii: tuple
    narrow_hypothesis: bool

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "worst_slack": self.worst_slack,
            "alpha": self.alpha,
            "beta": self.beta,
            "radii": list(self.radii),
            "narrow_hypothesis": self.narrow_hypothesis,
        }


@dataclass(frozen=True)
class SecondCoeffReport:
    ok: bool
    value: float
    limit: float

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "value": self.value, "limit": self.limit}


def winding_number(values: np.ndarray) -> int:
    """Winding of a sampled closed curve around 0 (sum of phase steps)."""
    shifted = np.roll(values, -1)
    return int(round(float(np.sum(np.angle(shifted / values))) / (2.0 * math.pi)))


def _circle_values(f: ComplexSeries, radius: float, angles: int) -> np.ndarray:
    pts = srs.circle_points(radius, angles)
    f_vals = f.eval_at(pts)
    if float(np.min(np.abs(f_vals))) < SINGULARITY_FLOOR:
        raise EvaluationSingularity(
            f"|f| < {SINGULARITY_FLOOR} on the radius-{radius} grid"
        )
    return f_vals


def ratio_values(f: ComplexSeries, radius: float, angles: int) -> np.ndarray:
    """Values of z*f'/f on the circle |z| = radius."""
    f_vals = _circle_values(f, radius, angles)
    pts = srs.circle_points(radius, angles)
    return f.z_derivative().eval_at(pts) / f_vals


def spiral_membership(
    f: ComplexSeries,
    alpha: float,
    radius: float = 0.95,
    angles: int = DEFAULT_ANGLES,
) -> SpiralReport:
    """Grid test of Re(exp(i*alpha) * z*f'/f) > 0.

    The circle criterion certifies a function only when f has no zero in
    the punctured disk; the winding of f around the circle must therefore
    be exactly 1 (the normalization zero at the origin) for membership.
    """
    sp = SpiralParams(alpha)
    f_vals = _circle_values(f, radius, angles)
    pts = srs.circle_points(radius, angles)
    vals = f.z_derivative().eval_at(pts) / f_vals
    winding = winding_number(f_vals)
    min_re = float(np.min((cmath.exp(1j * sp.alpha) * vals).real))
    return SpiralReport(min_re > 0.0 and winding == 1, min_re, radius, angles, winding)


def starlike_membership(
    f: ComplexSeries,
    order_alpha: float,
    radius: float = 0.95,
    angles: int = DEFAULT_ANGLES,
) -> SpiralReport:
    """Grid test of Re(z*f'/f) > order_alpha; min_re reports the margin."""
    if not 0.0 <= order_alpha < 1.0:
        raise ParameterDomainError(f"order must be in [0, 1), got {order_alpha}")
    f_vals = _circle_values(f, radius, angles)
    pts = srs.circle_points(radius, angles)
    vals = f.z_derivative().eval_at(pts) / f_vals
    winding = winding_number(f_vals)
    margin = float(np.min(vals.real)) - order_alpha
    return SpiralReport(margin > 0.0 and winding == 1, margin, radius, angles, winding)


def gb_membership(
    f: ComplexSeries,
    b: float,
    radius: float = 0.95,
    angles: int = DEFAULT_ANGLES,
) -> DeviationReport:
    """Grid test of |(1 + z*f''/f')/(z*f'/f) - 1| <= b.

    Membership additionally requires winding(f) = 1 on the circle (no
    stray zeros of f inside, same guard as the spiral test) and a
    zero-free f' there.
    """
    if not 0.0 < b <= 1.0:
        raise ParameterDomainError(f"need 0 < b <= 1, got {b}")
    pts = srs.circle_points(radius, angles)
    f_vals = f.eval_at(pts)
    fp = f.derivative()
    fp_vals = fp.eval_at(pts)
    floor = min(float(np.min(np.abs(f_vals))), float(np.min(np.abs(fp_vals))))
    if floor < SINGULARITY_FLOOR:
        raise EvaluationSingularity(
            f"|f| or |f'| < {SINGULARITY_FLOOR} on the radius-{radius} grid"
        )
    winding = winding_number(f_vals)
    fpp_vals = fp.derivative().eval_at(pts)
    numer = 1.0 + pts * fpp_vals / fp_vals
    denom = pts * fp_vals / f_vals
    max_dev = float(np.max(np.abs(numer / denom - 1.0)))
    member = max_dev <= b and winding == 1 and winding_number(fp_vals) == 0
    return DeviationReport(member, max_dev, radius, angles, winding)


def gb_spiral_threshold(alpha: float, grid: int = 100_000) -> float:
    """Largest quotient deviation b certified to imply spiral-likeness.

    Minimizes |(1+A)e^{i*t}/(1+A*e^{i*t})^2| over t for A = exp(-2i*alpha)
    on a dense grid, then sharpens with golden-section search.  The value
    equals |1 + A|/4.
    """
    sp = SpiralParams(alpha)
    a = sp.a_spiral

    def objective(t: float) -> float:
        w = cmath.exp(1j * t)
        return abs((1.0 + a) * w / (1.0 + a * w) ** 2)

    ts = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    ws = np.exp(1j * ts)
    vals = np.abs((1.0 + a) * ws / (1.0 + a * ws) ** 2)
    best = int(np.argmin(vals))
    step = 2.0 * math.pi / grid
    lo, hi = ts[best] - step, ts[best] + step

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    for _ in range(80):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = objective(x2)
    return min(f1, f2, float(vals[best]))


def gb_threshold_closed_form(alpha: float) -> float:
    """The grid-minimized threshold in closed form: |1 + exp(-2i*alpha)|/4."""
    return abs(1.0 + SpiralParams(alpha).a_spiral) / 4.0


def quotient_source_ratio(source: ComplexSeries, order: int) -> ComplexSeries:
    """Solve z*p' = source * p^2 with p(0) = 1 (source(0) must vanish)."""
    if abs(source.coefficient(0)) > srs.UNIT_TOLERANCE:
        raise ParameterDomainError("quotient source must vanish at the origin")
    s = np.zeros(order + 1, dtype=np.complex128)
    upto = min(source.order, order)
    s[: upto + 1] = np.asarray(source.coeffs[: upto + 1], dtype=np.complex128)
    p = np.zeros(order + 1, dtype=np.complex128)
    sq = np.zeros(order + 1, dtype=np.complex128)  # running p^2
    p[0] = 1.0
    sq[0] = 1.0
    for k in range(1, order + 1):
        # sq[:k] is final here since it only involves p_0..p_{k-1}
        p[k] = np.dot(s[1 : k + 1], sq[k - 1 :: -1]) / k
        sq[k] = np.dot(p[: k + 1], p[k :: -1])
    return ComplexSeries(p)


def _as_series(omega) -> ComplexSeries:
    return omega.omega if isinstance(omega, SchwarzSample) else omega


def function_from_ratio(p: ComplexSeries) -> ComplexSeries:
    """The normalized f with z*f'/f = p, for p with p(0) = 1."""
    return srs.solve_log_derivative(p)


def build_spiral_instance(omega, alpha: float, order: int) -> ComplexSeries:
    """Member built to satisfy the spiral quotient criterion exactly.

    Pushes a Schwarz polynomial through the criterion's target
    h(w) = (A+1)*w/(1+A*w)^2 and solves the two recurrences; the result
    is spiral-like with angle alpha by the criterion.
    """
    sp = SpiralParams(alpha)
    om = _as_series(omega)
    target = max(order - 1, 0)
    om = om.extend(target) if om.order < target else om.truncate(target)
    v = srs.constant(1.0, target) + om.scale(sp.a_spiral)
    source = om.scale(sp.a_spiral + 1.0).div(v).div(v)
    p = quotient_source_ratio(source, target)
    return function_from_ratio(p)


def build_gb_instance(omega, b: float, order: int) -> ComplexSeries:
    """Member of the quotient-deviation class with deviation b*omega."""
    if not 0.0 < b <= 1.0:
        raise ParameterDomainError(f"need 0 < b <= 1, got {b}")
    om = _as_series(omega)
    target = max(order - 1, 0)
    om = om.extend(target) if om.order < target else om.truncate(target)
    p = quotient_source_ratio(om.scale(b), target)
    return function_from_ratio(p)


def growth_check(
    f: ComplexSeries,
    alpha: float,
    radii=GROWTH_RADII,
    angles: int = 1024,
    membership_radius: float = 0.75,
    tolerance: float = GROWTH_TOLERANCE,
) -> GrowthReport:
    """Check |f(z)| <= |z|/(1-|z|)^{1/beta} for a starlike f of order alpha.

    Membership (Re(z*f'/f) > alpha on a grid) is verified first and a
    failure raises PreconditionNotVerified rather than reporting a bogus
    growth violation.  worst_slack is min over the grid of
    bound(|z|) - |f(z)|; ok means it stays above -tolerance.
    """
    sp = SpiralParams(alpha)
    beta = sp.beta_for_growth
    membership = starlike_membership(f, alpha, membership_radius, angles)
    if not membership.member:
        raise PreconditionNotVerified(
            f"grid margin {membership.min_re} <= 0 at radius {membership_radius}"
        )
    worst = float("inf")
    for r in radii:
        if not 0.0 < r < 1.0:
            raise ParameterDomainError(f"radius {r} not in (0, 1)")
        vals = np.abs(f.eval_on_circle(r, angles))
        bound = r / (1.0 - r) ** (1.0 / beta)
        slack = bound - float(np.max(vals))
        if slack < worst:
            worst = slack
    return GrowthReport(
        ok=worst >= -tolerance,
        worst_slack=worst,
        alpha=alpha,
        beta=beta,
        radii=tuple(radii),
        narrow_hypothesis=alpha >= 0.5,
    )


def second_coeff_check(
    f: ComplexSeries, alpha: float, tolerance: float = GROWTH_TOLERANCE
) -> SecondCoeffReport:
    """Check |f''(0)| <= 2/beta for the growth exponent tied to alpha."""
    sp = SpiralParams(alpha)
    limit = 2.0 / sp.beta_for_growth
    value = 2.0 * abs(f.coefficient(2))
    return SecondCoeffReport(value <= limit + tolerance, value, limit)


def growth_extremal(beta: float, order: int) -> ComplexSeries:
    """The function z*(1+z)^{-1/beta} as a series."""
    if beta <= 0.0:
        raise ParameterDomainError(f"beta must be positive, got {beta}")
    base = srs.constant(1.0, order - 1) + srs.monomial(1.0, 1, order - 1)
    return base.powc(-1.0 / beta).times_z()


def growth_extremal_starlike_order(beta: float) -> float:
    """Starlikeness order of z*(1+z)^{-1/beta}: its z*f'/f maps the disk
    onto the half-plane Re w > 1 - 1/(2*beta)."""
    if beta <= 0.0:
        raise ParameterDomainError(f"beta must be positive, got {beta}")
    return 1.0 - 1.0 / (2.0 * beta)


def growth_extremal_profile(beta: float, order: int) -> dict:
    """Series, starlikeness order, and the univalence expectation flag."""
    f = growth_extremal(beta, order)
    star_order = growth_extremal_starlike_order(beta)
    return {
        "beta": beta,
        "starlike_order": star_order,
        "not_univalent_expected": star_order < 0.0,
        "series": f.to_json_dict(),
    }
