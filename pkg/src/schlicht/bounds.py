"""Sharp coefficient-bound formulas and their consistency checks.

All bounds are modulus products over the complex seed gamma*(A-B).
Factorial denominators are folded in factor by factor, which keeps every
intermediate on the order of the final bound and avoids overflow for the
index range this package targets (n <= 50 comfortably; doubles only give
out near 171!).

Case I and II bounds are sharp (an explicit member attains them); case
III bounds carry sharpness "unknown", which is the honest status: no
attaining member is known and none is claimed.
"""

from dataclasses import dataclass

from .errors import HypothesisViolated, ParameterDomainError
from .params import (
    CauchyEulerParams,
    ClassParams,
    classify_case,
    reduce_subclass,
    spiral_gamma,
)

SHARP = "true"
SHARP_UNKNOWN = "unknown"


@dataclass(frozen=True)
class BoundResult:
    """A single coefficient bound together with its provenance."""

    n: int
    value: float
    case_tag: str
    crossover_k: int | None
    sharp: str
    formula_id: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "case": self.case_tag,
            "k": self.crossover_k,
            "bound": self.value,
            "sharp": self.sharp,
        }


def case_i_value(p: ClassParams, n: int) -> float:
    """|gamma|*(A-B) / ((n-1)*(1+lambda*(n-1)))."""
    return abs(p.gamma) * (p.a - p.b) / ((n - 1) * (1.0 + p.lam * (n - 1)))


def case_ii_value(p: ClassParams, n: int) -> float:
    """prod_{j=0}^{n-2} |gamma*(A-B) - j*B| / ((n-1)! * (1+lambda*(n-1)))."""
    base = p.product_base()
    acc = 1.0
    for j in range(n - 1):
        acc *= abs(base - j * p.b) / (j + 1)
    return acc / (1.0 + p.lam * (n - 1))


def case_iii_value(p: ClassParams, n: int, k: int) -> float:
    """prod_{j=0}^{k-1} |gamma*(A-B) - j*B| / ((k-1)!*(n-1)*(1+lambda*(n-1)))."""
    if not 1 <= k <= n - 1:
        raise ParameterDomainError(f"crossover k={k} outside 1..{n - 1}")
    base = p.product_base()
    acc = 1.0
    for j in range(k):
        acc *= abs(base - j * p.b) / max(j, 1)
    return acc / ((n - 1) * (1.0 + p.lam * (n - 1)))


def coefficient_bound(p: ClassParams, n: int) -> BoundResult:
    """Sharp (cases I/II) or best-known (case III) bound on |a_n|."""
    cls = classify_case(p, n)
    if cls.case_tag == "I":
        return BoundResult(n, case_i_value(p, n), "I", None, SHARP, "case-i")
    if cls.case_tag == "II":
        return BoundResult(n, case_ii_value(p, n), "II", None, SHARP, "case-ii")
    k = cls.crossover_k
    return BoundResult(
        n, case_iii_value(p, n, k), "III", k, SHARP_UNKNOWN, "case-iii"
    )


def cauchy_euler_factor(ce: CauchyEulerParams, n: int) -> float:
    """prod_{j=0}^{m-1} (mu+j+1)/(mu+j+n); equals 1 at n=1, < 1 for n >= 2."""
    acc = 1.0
    for j in range(ce.m):
        acc *= (ce.mu + j + 1.0) / (ce.mu + j + n)
    return acc


def coefficient_bound_cauchy_euler(
    p: ClassParams, ce: CauchyEulerParams, n: int
) -> BoundResult:
    """Bound for solutions of the Cauchy-Euler equation sourced by the class."""
    inner = coefficient_bound(p, n)
    return BoundResult(
        n,
        inner.value * cauchy_euler_factor(ce, n),
        inner.case_tag,
        inner.crossover_k,
        inner.sharp,
        inner.formula_id + "+cauchy-euler",
    )


def telescoping_identity_residual(p: ClassParams, m: int) -> float:
    """Relative residual of the telescoping modulus-product identity.

    With X_k = |gamma*(A-B) - B*(k-1)| the identity states

      |gamma*(A-B)|^2
        + sum_{k=2}^{m-1} (|X_k^2 - (k-1)^2| / ((k-1)!)^2)
                          * prod_{j=0}^{k-2} |gamma*(A-B)-j*B|^2
        = prod_{j=0}^{m-2} |gamma*(A-B)-j*B|^2 / ((m-2)!)^2,

    provided X_{m-1} >= m-2 (that hypothesis makes every summand a clean
    telescoping difference).  Returns |lhs - rhs| / |rhs|.
    """
    if m < 2:
        raise ParameterDomainError(f"m must be >= 2, got {m}")
    base = p.product_base()
    if abs(base - p.b * (m - 2)) < (m - 2):
        raise HypothesisViolated(
            f"|gamma*(A-B) - B*(m-2)| >= m-2 fails for m={m}"
        )
    lhs = abs(base) ** 2
    # running = prod_{j=0}^{k-2} |base - j*B|^2 / ((k-1)!)^2, maintained per k
    running = abs(base) ** 2
    for k in range(2, m):
        x_k = abs(base - p.b * (k - 1))
        lhs += abs(x_k**2 - (k - 1) ** 2) * running
        running *= (x_k / k) ** 2
    rhs = abs(base) ** 2
    for j in range(1, m - 1):
        rhs *= (abs(base - j * p.b) / j) ** 2
    return abs(lhs - rhs) / abs(rhs)


def spiral_product_bound(beta: float, a: float, b: float, n: int) -> float:
    """prod_{j=0}^{n-2} |(A-B)*exp(-i*beta)*cos(beta) - j*B| / (j+1)."""
    import cmath
    import math

    if not abs(beta) < math.pi / 2:
        raise ParameterDomainError(f"need |beta| < pi/2, got {beta}")
    if not -1.0 <= b < a <= 1.0:
        raise ParameterDomainError(f"need -1 <= B < A <= 1, got A={a}, B={b}")
    if n < 2:
        raise ParameterDomainError(f"index n must be >= 2, got {n}")
    seed = (a - b) * cmath.exp(-1j * beta) * math.cos(beta)
    acc = 1.0
    for j in range(n - 1):
        acc *= abs(seed - j * b) / (j + 1)
    return acc


def spiral_bound_cross_check(beta: float, a: float, b: float, n: int) -> float:
    """|spiral product bound - reduced-class bound|; defined in case II only."""
    p = ClassParams(spiral_gamma(beta), 0.0, a, b)
    result = coefficient_bound(p, n)
    if result.case_tag != "II":
        raise HypothesisViolated(
            "cross-check is defined only when the reduction lands in case II; "
            f"got case {result.case_tag} for beta={beta}, A={a}, B={b}, n={n}"
        )
    return abs(spiral_product_bound(beta, a, b, n) - result.value)


def subclass_bound(name: str, n: int, **kw) -> BoundResult:
    """Bound for a named subclass, via its parameter reduction."""
    red = reduce_subclass(name, **kw)
    if red.cauchy_euler is not None:
        return coefficient_bound_cauchy_euler(red.params, red.cauchy_euler, n)
    return coefficient_bound(red.params, n)
