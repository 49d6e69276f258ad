"""Lorentzian linear algebra in 2+1 dimensions.

Vectors live either in the standard chart, where the quadratic form is
x^2 + y^2 - z^2 and the future cone is z > 0, or in the chart of a null
frame (s, s-, s+), where the Gram matrix is

    [[1, 0, 0], [0, 0, -1], [0, -1, 0]]

and the quadratic form is a^2 - 2bc.  Every scalar routine here is written
with plain arithmetic so that ``fractions.Fraction`` inputs stay exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

DEFAULT_EPS = 1e-9

STD = "std"

Number = Union[int, float, Fraction]


class ChartError(ValueError):
    """Raised when two vectors expressed in different charts are combined."""


@dataclass(frozen=True)
class Vec3:
    x: Number
    y: Number
    z: Number
    chart: "str | NullFrame" = field(default=STD, compare=False)

    @classmethod
    def of(cls, values, chart=STD) -> "Vec3":
        x, y, z = values
        return cls(x, y, z, chart)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: "Vec3") -> "Vec3":
        _same_chart(self, other)
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z, self.chart)

    def __sub__(self, other: "Vec3") -> "Vec3":
        _same_chart(self, other)
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z, self.chart)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z, self.chart)

    def __mul__(self, k: Number) -> "Vec3":
        return Vec3(k * self.x, k * self.y, k * self.z, self.chart)

    __rmul__ = __mul__

    def __truediv__(self, k: Number) -> "Vec3":
        return Vec3(self.x / k, self.y / k, self.z / k, self.chart)

    def to_array(self) -> np.ndarray:
        return np.array([float(self.x), float(self.y), float(self.z)])

    def to_float(self) -> "Vec3":
        return Vec3(float(self.x), float(self.y), float(self.z), self.chart)

    def max_abs(self):
        return max(abs(self.x), abs(self.y), abs(self.z))

    def euclidean_norm(self) -> float:
        return math.sqrt(float(self.x) ** 2 + float(self.y) ** 2 + float(self.z) ** 2)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    @property
    def in_std(self) -> bool:
        return isinstance(self.chart, str)


Point = Vec3

ORIGIN = Vec3(0, 0, 0)
E1 = Vec3(1, 0, 0)
E2 = Vec3(0, 1, 0)
E3 = Vec3(0, 0, 1)


def vec(x, y, z) -> Vec3:
    return Vec3(x, y, z)


def _same_chart(u: Vec3, v: Vec3) -> None:
    if u.chart is v.chart:
        return
    if u.in_std and v.in_std:
        return
    if u.chart != v.chart:
        raise ChartError("vectors are expressed in different charts")


def _frame_chart(v: Vec3) -> bool:
    return not v.in_std


def inner(u: Vec3, v: Vec3):
    """Lorentzian inner product (signature (2,1))."""
    _same_chart(u, v)
    if _frame_chart(u):
        return u.x * v.x - u.y * v.z - u.z * v.y
    return u.x * v.x + u.y * v.y - u.z * v.z


def norm2(v: Vec3):
    return inner(v, v)


def det3(u: Vec3, v: Vec3, w: Vec3):
    """The oriented volume form; equals 1 on (e1, e2, e3) and on (s, s-, s+)."""
    _same_chart(u, v)
    _same_chart(v, w)
    return (
        u.x * (v.y * w.z - v.z * w.y)
        - u.y * (v.x * w.z - v.z * w.x)
        + u.z * (v.x * w.y - v.y * w.x)
    )


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Lorentzian cross product, defined by inner(cross(u, v), w) = det3(u, v, w)."""
    _same_chart(u, v)
    cx = u.y * v.z - u.z * v.y
    cy = u.z * v.x - u.x * v.z
    cz = u.x * v.y - u.y * v.x
    # the metric matrix squares to the identity in both charts
    if _frame_chart(u):
        return Vec3(cx, -cz, -cy, u.chart)
    return Vec3(cx, cy, -cz, u.chart)


def euclidean_cross(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
        u.chart,
    )


def _scaled_sign(value, scale, eps: float) -> int:
    if abs(value) <= eps * scale:
        return 0
    return 1 if value > 0 else -1


class CausalClass(enum.Enum):
    ZERO = "zero"
    TIMELIKE_FUTURE = "timelike_future"
    TIMELIKE_PAST = "timelike_past"
    NULL_FUTURE = "null_future"
    NULL_PAST = "null_past"
    SPACELIKE = "spacelike"

    @property
    def is_timelike(self) -> bool:
        return self in (CausalClass.TIMELIKE_FUTURE, CausalClass.TIMELIKE_PAST)

    @property
    def is_null(self) -> bool:
        return self in (CausalClass.NULL_FUTURE, CausalClass.NULL_PAST)

    @property
    def is_future(self) -> bool:
        return self in (CausalClass.TIMELIKE_FUTURE, CausalClass.NULL_FUTURE)


def classify(v: Vec3, eps: float = DEFAULT_EPS) -> CausalClass:
    if v.is_zero():
        return CausalClass.ZERO
    q = norm2(v)
    scale = v.max_abs() ** 2
    sign = _scaled_sign(q, scale, eps)
    if sign > 0:
        return CausalClass.SPACELIKE
    time = v.y + v.z if _frame_chart(v) else v.z
    future = time > 0
    if sign < 0:
        return CausalClass.TIMELIKE_FUTURE if future else CausalClass.TIMELIKE_PAST
    return CausalClass.NULL_FUTURE if future else CausalClass.NULL_PAST


def _rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class NullFrame:
    """A positively oriented basis (s, s-, s+) with s unit spacelike and
    s-, s+ future null, s- . s+ = -1, s x s- = -s-, s x s+ = s+."""

    s: Vec3
    s_minus: Vec3
    s_plus: Vec3

    def matrix(self) -> np.ndarray:
        """Columns are s, s-, s+ in the standard chart."""
        return np.column_stack([self.s.to_array(), self.s_minus.to_array(), self.s_plus.to_array()])

    def residuals(self) -> dict[str, float]:
        """Signed defects of every frame invariant (all zero for a valid frame)."""
        s, sm, sp = self.s, self.s_minus, self.s_plus
        cm = cross(s, sm) + sm
        cp = cross(s, sp) - sp
        return {
            "s.s-1": float(inner(s, s) - 1),
            "s.s-": float(inner(s, sm)),
            "s.s+": float(inner(s, sp)),
            "s-.s+ +1": float(inner(sm, sp) + 1),
            "s-.s-": float(inner(sm, sm)),
            "s+.s+": float(inner(sp, sp)),
            "sxs- + s-": float(cm.max_abs()),
            "sxs+ - s+": float(cp.max_abs()),
        }

    def check(self, eps: float = DEFAULT_EPS) -> None:
        bad = {k: r for k, r in self.residuals().items() if abs(r) > eps}
        if bad:
            raise ValueError(f"not a null frame: {bad}")
        if self.s_minus.z <= 0 or self.s_plus.z <= 0:
            raise ValueError("null frame vectors must be future pointing")
        if det3(self.s, self.s_minus, self.s_plus) <= 0:
            raise ValueError("null frame must be positively oriented")

    def reversed(self) -> "NullFrame":
        """The frame of -s: (-s, s+, s-)."""
        return NullFrame(-self.s, self.s_plus, self.s_minus)


def null_frame(s: Vec3, exact: bool = False, eps: float = DEFAULT_EPS) -> NullFrame:
    """Normalized null frame of a spacelike vector.

    The null directions are the +-1 eigenvectors of ``w -> s x w`` on the
    orthogonal complement of ``s``.  By default s- and s+ get equal time
    components; with ``exact=True`` s- has unit time component and s+ absorbs
    the normalization, which keeps rational input rational.
    """
    if not s.in_std:
        raise ChartError("null_frame expects a vector in the standard chart")
    # rational input is classified exactly
    if classify(s, 0.0 if exact else eps) is not CausalClass.SPACELIKE:
        raise ValueError(f"director must be spacelike, got {s!r}")
    q = norm2(s)
    if exact:
        r = _rational_sqrt(Fraction(q))
        if r is None:
            raise ValueError("exact null frame needs s.s to be a rational square")
        s = Vec3(Fraction(s.x) / r, Fraction(s.y) / r, Fraction(s.z) / r)
    else:
        s = s.to_float() / math.sqrt(float(q))
    q = norm2(s)

    best = None
    for e in (E1, E2, E3):
        w = e - s * (inner(e, s) / q)
        xw = cross(s, w)
        plus, minus = w + xw, w - xw
        score = min(plus.euclidean_norm(), minus.euclidean_norm())
        if best is None or score > best[0]:
            best = (score, minus, plus)
    _, minus, plus = best
    if minus.z < 0:
        minus = -minus
    if plus.z < 0:
        plus = -plus
    minus = minus / minus.z
    plus = plus / plus.z
    product = inner(minus, plus)
    if exact:
        plus = plus / (-product)
    else:
        k = 1.0 / math.sqrt(-float(product))
        minus, plus = minus * k, plus * k
    return NullFrame(s, minus, plus)


def to_frame(v: Vec3, f: NullFrame) -> Vec3:
    """Coordinates (a, b, c) with v = a s + b s- + c s+."""
    if not v.in_std:
        raise ChartError("to_frame expects a vector in the standard chart")
    return Vec3(inner(v, f.s), -inner(v, f.s_plus), -inner(v, f.s_minus), f)


def from_frame(v: Vec3, f: NullFrame) -> Vec3:
    if v.in_std or v.chart != f:
        raise ChartError("from_frame expects a vector in the chart of the given frame")
    s, sm, sp = f.s, f.s_minus, f.s_plus
    return Vec3(
        v.x * s.x + v.y * sm.x + v.z * sp.x,
        v.x * s.y + v.y * sm.y + v.z * sp.y,
        v.x * s.z + v.y * sm.z + v.z * sp.z,
    )


def frame_vector(a, b, c, f: NullFrame) -> Vec3:
    return Vec3(a, b, c, f)


# -- affine maps ------------------------------------------------------------

_J = np.diag([1.0, 1.0, -1.0])


@dataclass(frozen=True, eq=False)
class AffineMap:
    """x -> linear @ x + translation, in the standard chart."""

    linear: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "linear", np.asarray(self.linear, dtype=float).reshape(3, 3))
        object.__setattr__(self, "translation", np.asarray(self.translation, dtype=float).reshape(3))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(np.eye(3))

    @classmethod
    def translation_by(cls, w: Vec3) -> "AffineMap":
        return cls(np.eye(3), w.to_array())

    def __call__(self, p: Vec3) -> Vec3:
        return Vec3.of(self.linear @ p.to_array() + self.translation)

    def apply_vector(self, v: Vec3) -> Vec3:
        return Vec3.of(self.linear @ v.to_array())

    def __matmul__(self, other: "AffineMap") -> "AffineMap":
        return AffineMap(self.linear @ other.linear, self.linear @ other.translation + self.translation)

    def inverse(self) -> "AffineMap":
        inv = np.linalg.inv(self.linear)
        return AffineMap(inv, -inv @ self.translation)

    def about(self, p: Vec3) -> "AffineMap":
        """Conjugate so that the linear part acts around ``p`` instead of the origin."""
        pa = p.to_array()
        return AffineMap(self.linear, pa - self.linear @ pa + self.translation)

    def allclose(self, other: "AffineMap", tol: float = 1e-9) -> bool:
        return bool(
            np.allclose(self.linear, other.linear, atol=tol)
            and np.allclose(self.translation, other.translation, atol=tol)
        )

    def conformal_factor(self, tol: float = DEFAULT_EPS) -> float | None:
        """lambda with L^T J L = lambda J, or None if the linear part is not conformal."""
        g = self.linear.T @ _J @ self.linear
        lam = g[0, 0]
        scale = max(1.0, float(np.abs(g).max()))
        if lam <= 0 or np.abs(g - lam * _J).max() > tol * scale:
            return None
        return float(lam)

    @property
    def is_conformal(self) -> bool:
        return self.conformal_factor() is not None

    @property
    def is_isometry(self) -> bool:
        lam = self.conformal_factor()
        return lam is not None and abs(lam - 1.0) <= 1e-9

    @property
    def preserves_orientation(self) -> bool:
        return float(np.linalg.det(self.linear)) > 0

    @property
    def preserves_time_orientation(self) -> bool:
        # image of the future unit timelike vector must still be future
        return float((self.linear @ np.array([0.0, 0.0, 1.0]))[2]) > 0


def frame_linear_map(f: NullFrame, frame_matrix) -> np.ndarray:
    """Standard-chart matrix of the map whose matrix in frame coordinates is given."""
    F = f.matrix()
    return F @ np.asarray(frame_matrix, dtype=float) @ np.linalg.inv(F)


def boost(t: float, f: NullFrame) -> AffineMap:
    return AffineMap(frame_linear_map(f, np.diag([1.0, math.exp(t), math.exp(-t)])))


def homothety(s: float) -> AffineMap:
    return AffineMap(math.exp(s) * np.eye(3))


def rho(f: NullFrame) -> AffineMap:
    """The involution (a, b, c) -> (-a, -c, -b)."""
    return AffineMap(frame_linear_map(f, [[-1, 0, 0], [0, 0, -1], [0, -1, 0]]))


def spine_reflection(f: NullFrame, p: Vec3) -> AffineMap:
    """Reflection in the spine through p: (a, b, c) -> (a, -b, -c)."""
    return AffineMap(frame_linear_map(f, np.diag([1.0, -1.0, -1.0]))).about(p)


def stem_particle_reflection(f: NullFrame, p: Vec3, t: float) -> AffineMap:
    """Reflection in the stem particle through p spanned by e^t s- + e^-t s+."""
    m = [[-1, 0, 0], [0, 0, math.exp(2 * t)], [0, math.exp(-2 * t), 0]]
    return AffineMap(frame_linear_map(f, m)).about(p)


# -- vectorized helpers -----------------------------------------------------


def inner_many(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Row-wise Lorentzian inner products of (..., 3) arrays in the standard chart."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def frame_coords_many(points: np.ndarray, origin: Vec3, f: NullFrame) -> np.ndarray:
    """Frame coordinates (a, b, c) of an (n, 3) array of points relative to ``origin``."""
    d = np.asarray(points, dtype=float) - origin.to_array()
    a = inner_many(d, f.s.to_array())
    b = -inner_many(d, f.s_plus.to_array())
    c = -inner_many(d, f.s_minus.to_array())
    return np.stack([a, b, c], axis=-1)
