"""Truncated complex power-series arithmetic.

Every higher-level computation in this package runs on Taylor polynomials
c_0 + c_1 z + ... + c_N z^N with complex double coefficients.  Binary
operations truncate to the smaller operand order, so a result never
contains coefficients that both inputs do not determine.  Fractional
powers use the principal branch through exp(alpha*log(.)) of a series
with constant term 1; that is the only branch convention in the package.

Instances are immutable (the backing array is marked read-only) and all
operations are pure functions, so series can be shared freely between
concurrent tasks.
"""

import cmath
import math

import numpy as np

from .errors import (
    BranchPointAtOrigin,
    DivisionByNonUnit,
    NonvanishingInnerConstant,
    NormalizationError,
    RadiusOutOfRange,
)

# Constant terms within this distance of the required unit value are accepted;
# anything farther is a hard error rather than a silent regularization.
UNIT_TOLERANCE = 1e-14


class ComplexSeries:
    """A complex Taylor polynomial of fixed truncation order.

    ``coeffs[k]`` is the coefficient of z^k; the order is ``len(coeffs)-1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        c.setflags(write=False)
        self._c = c

    # -- basic structure ---------------------------------------------------

    @property
    def order(self) -> int:
        return self._c.size - 1

    @property
    def coeffs(self) -> tuple:
        return tuple(complex(v) for v in self._c)

    def coefficient(self, k: int) -> complex:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside 0..{self.order}")
        return complex(self._c[k])

    def truncate(self, order: int) -> "ComplexSeries":
        if order > self.order:
            raise ValueError("truncate cannot raise the order; use extend")
        if order < 0:
            raise ValueError("order must be nonnegative")
        return ComplexSeries(self._c[: order + 1])

    def extend(self, order: int) -> "ComplexSeries":
        """Zero-pad to a higher order (treats the series as an exact polynomial)."""
        if order < self.order:
            raise ValueError("extend cannot lower the order; use truncate")
        out = np.zeros(order + 1, dtype=np.complex128)
        out[: self._c.size] = self._c
        return ComplexSeries(out)

    def __repr__(self):
        head = ", ".join(f"{complex(v):.6g}" for v in self._c[:4])
        tail = ", ..." if self.order > 3 else ""
        return f"ComplexSeries(order={self.order}, [{head}{tail}])"

    def __eq__(self, other):
        if not isinstance(other, ComplexSeries):
            return NotImplemented
        return self.order == other.order and bool(np.all(self._c == other._c))

    # -- ring operations ---------------------------------------------------

    def add(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.order, other.order)
        return ComplexSeries(self._c[: n + 1] + other._c[: n + 1])

    def sub(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.order, other.order)
        return ComplexSeries(self._c[: n + 1] - other._c[: n + 1])

    def mul(self, other: "ComplexSeries") -> "ComplexSeries":
        n = min(self.order, other.order)
        prod = np.convolve(self._c[: n + 1], other._c[: n + 1])
        return ComplexSeries(prod[: n + 1])

    def div(self, other: "ComplexSeries") -> "ComplexSeries":
        """Series quotient; the divisor constant term must be a unit."""
        n = min(self.order, other.order)
        t = other._c
        if abs(t[0]) <= UNIT_TOLERANCE:
            raise DivisionByNonUnit(
                f"divisor constant term {t[0]} has modulus <= {UNIT_TOLERANCE}"
            )
        s = self._c
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = s[0] / t[0]
        for k in range(1, n + 1):
            out[k] = (s[k] - np.dot(out[:k], t[k:0:-1])) / t[0]
        return ComplexSeries(out)

    def scale(self, factor: complex) -> "ComplexSeries":
        return ComplexSeries(self._c * complex(factor))

    def __add__(self, other):
        if isinstance(other, ComplexSeries):
            return self.add(other)
        out = np.array(self._c)
        out[0] += complex(other)
        return ComplexSeries(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ComplexSeries):
            return self.sub(other)
        return self + (-complex(other))

    def __rsub__(self, other):
        return (-self) + complex(other)

    def __neg__(self):
        return ComplexSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, ComplexSeries):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ComplexSeries):
            return self.div(other)
        return self.scale(1.0 / complex(other))

    # -- composition and transcendental maps --------------------------------

    def compose(self, inner: "ComplexSeries") -> "ComplexSeries":
        """Taylor coefficients of self(inner(z)); inner(0) must vanish."""
        if abs(inner._c[0]) > UNIT_TOLERANCE:
            raise NonvanishingInnerConstant(
                f"inner constant term {inner._c[0]} is not zero"
            )
        n = min(self.order, inner.order)
        inner_t = inner if inner.order == n else inner.truncate(n)
        acc = constant(self._c[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc.mul(inner_t) + complex(self._c[k])
        return acc

    def log1(self) -> "ComplexSeries":
        """Principal log of a series with constant term 1."""
        if abs(self._c[0] - 1.0) > UNIT_TOLERANCE:
            raise BranchPointAtOrigin(
                f"log1 needs constant term 1, got {self._c[0]}"
            )
        if self.order == 0:
            return ComplexSeries([0.0])
        return self.derivative().div(self.truncate(self.order - 1)).integrate()

    def exp0(self) -> "ComplexSeries":
        """Exponential of a series with zero constant term."""
        if abs(self._c[0]) > UNIT_TOLERANCE:
            raise BranchPointAtOrigin(
                f"exp0 needs constant term 0, got {self._c[0]}"
            )
        n = self.order
        w = self._c * np.arange(n + 1)
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = 1.0
        for k in range(1, n + 1):
            out[k] = np.dot(w[1 : k + 1], out[k - 1 :: -1]) / k
        return ComplexSeries(out)

    def powc(self, alpha: complex) -> "ComplexSeries":
        """Principal-branch power (1 + u)^alpha for a series 1 + u."""
        if abs(self._c[0] - 1.0) > UNIT_TOLERANCE:
            raise BranchPointAtOrigin(
                f"powc needs constant term 1, got {self._c[0]}"
            )
        alpha = complex(alpha)
        if alpha == 0:
            return constant(1.0, self.order)
        return self.log1().scale(alpha).exp0()

    # -- calculus ------------------------------------------------------------

    def derivative(self) -> "ComplexSeries":
        if self.order == 0:
            return ComplexSeries([0.0])
        return ComplexSeries(self._c[1:] * np.arange(1, self.order + 1))

    def integrate(self) -> "ComplexSeries":
        """Termwise antiderivative with constant term 0; order grows by one."""
        out = np.zeros(self._c.size + 1, dtype=np.complex128)
        out[1:] = self._c / np.arange(1, self._c.size + 1)
        return ComplexSeries(out)

    def times_z(self) -> "ComplexSeries":
        """Multiply by z; order grows by one."""
        out = np.zeros(self._c.size + 1, dtype=np.complex128)
        out[1:] = self._c
        return ComplexSeries(out)

    def z_derivative(self) -> "ComplexSeries":
        """The series z * d/dz of self (same order, coefficient k*c_k)."""
        return ComplexSeries(self._c * np.arange(self._c.size))

    # -- evaluation ------------------------------------------------------------

    def eval_at(self, points) -> np.ndarray:
        """Horner evaluation at arbitrary complex points."""
        pts = np.asarray(points, dtype=np.complex128)
        vals = np.full(pts.shape, self._c[-1], dtype=np.complex128)
        for k in range(self.order - 1, -1, -1):
            vals = vals * pts + self._c[k]
        return vals

    def eval_on_circle(self, radius: float, num_angles: int) -> np.ndarray:
        """Values on the circle of given radius at equispaced angles."""
        if not 0.0 < radius < 1.0:
            raise RadiusOutOfRange(f"radius {radius} not in (0, 1)")
        if num_angles < 1:
            raise ValueError("num_angles must be positive")
        return self.eval_at(circle_points(radius, num_angles))

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[float(v.real), float(v.imag)] for v in self._c],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ComplexSeries":
        coeffs = [complex(re, im) for re, im in doc["coeffs"]]
        if len(coeffs) != int(doc["order"]) + 1:
            raise ValueError("coefficient count does not match declared order")
        return cls(coeffs)


def constant(value: complex, order: int) -> ComplexSeries:
    out = np.zeros(order + 1, dtype=np.complex128)
    out[0] = complex(value)
    return ComplexSeries(out)


def monomial(coefficient: complex, degree: int, order: int) -> ComplexSeries:
    if not 0 <= degree <= order:
        raise ValueError("degree must lie in 0..order")
    out = np.zeros(order + 1, dtype=np.complex128)
    out[degree] = complex(coefficient)
    return ComplexSeries(out)


def identity(order: int) -> ComplexSeries:
    """The series z."""
    return monomial(1.0, 1, order)


def circle_points(radius: float, num_angles: int) -> np.ndarray:
    theta = 2.0 * math.pi * np.arange(num_angles) / num_angles
    return radius * np.exp(1j * theta)


def solve_log_derivative(q: ComplexSeries) -> ComplexSeries:
    """Normalized series F (F(0)=0, F'(0)=1) with z*F' = F*q.

    The source q must have constant term 1; coefficients follow the
    recurrence (k-1)*F_k = sum_{j=1}^{k-1} F_j q_{k-j}, so q of order M
    determines F through order M+1.
    """
    qc = q._c
    if abs(qc[0] - 1.0) > UNIT_TOLERANCE:
        raise NormalizationError(f"source constant term must be 1, got {qc[0]}")
    n = q.order + 1
    out = np.zeros(n + 1, dtype=np.complex128)
    out[1] = 1.0
    for k in range(2, n + 1):
        out[k] = np.dot(out[1:k], qc[k - 1 : 0 : -1]) / (k - 1)
    return ComplexSeries(out)


def require_normalized(f: ComplexSeries, tolerance: float = 1e-12) -> None:
    """Check f(0)=0 and f'(0)=1 up to tolerance."""
    if f.order < 1:
        raise NormalizationError("series order must be at least 1")
    if abs(f.coefficient(0)) > tolerance or abs(f.coefficient(1) - 1.0) > tolerance:
        raise NormalizationError(
            f"series is not normalized: c0={f.coefficient(0)}, c1={f.coefficient(1)}"
        )


def exp_i(phi: float) -> complex:
    return cmath.exp(1j * phi)
