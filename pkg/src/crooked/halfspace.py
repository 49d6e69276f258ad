"""Crooked halfspaces, their boundary strata and translational semigroup.

In frame coordinates (a, b, c) relative to the vertex the open halfspace
is (+,+,*) u (0,+,-) u (-,*,-) and its closure is {a,b >= 0} u {a,c <= 0}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .cone import TranslationCone
from .hyperbolic import Halfplane
from .minkowski import (
    DEFAULT_EPS,
    AffineMap,
    NullFrame,
    Vec3,
    frame_coords_many,
    from_frame,
    inner,
    norm2,
    null_frame,
    to_frame,
)


@dataclass(frozen=True)
class CrookedHalfspace:
    vertex: Vec3
    director: Vec3
    frame: NullFrame = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.frame is None:
            f = null_frame(self.director)
            object.__setattr__(self, "director", f.s)
            object.__setattr__(self, "frame", f)
        elif self.frame.s != self.director:
            raise ValueError("frame does not belong to the director")

    @classmethod
    def exact(cls, vertex: Vec3, director: Vec3) -> "CrookedHalfspace":
        """Rational halfspace: frame built without square roots."""
        f = null_frame(director, exact=True)
        return cls(vertex, f.s, f)

    def coords(self, q: Vec3) -> Vec3:
        """Frame coordinates of q - vertex."""
        return to_frame(q - self.vertex, self.frame)

    def point(self, a, b, c) -> Vec3:
        """World point with the given frame coordinates."""
        return self.vertex + from_frame(Vec3(a, b, c, self.frame), self.frame)

    def translate(self, v: Vec3) -> "CrookedHalfspace":
        return CrookedHalfspace(self.vertex + v, self.director, self.frame)

    # derived strata, as (point, direction) data in the standard chart
    @property
    def hinge_minus(self) -> tuple[Vec3, Vec3]:
        return self.vertex, self.frame.s_minus

    @property
    def hinge_plus(self) -> tuple[Vec3, Vec3]:
        return self.vertex, self.frame.s_plus

    @property
    def spine(self) -> tuple[Vec3, Vec3]:
        return self.vertex, self.director


class Stratum(enum.Enum):
    OPEN_INTERIOR = "open_interior"
    WING_MINUS = "wing_minus"
    WING_PLUS = "wing_plus"
    STEM_FACE = "stem_face"
    HINGE_MINUS = "hinge_minus"
    HINGE_PLUS = "hinge_plus"
    VERTEX = "vertex"
    EXTERIOR = "exterior"

    @property
    def on_boundary(self) -> bool:
        return self not in (Stratum.OPEN_INTERIOR, Stratum.EXTERIOR)


def _signs(a, b, c, eps: float):
    scale = max(abs(a), abs(b), abs(c))
    tol = eps * scale

    def sgn(x):
        if abs(x) <= tol:
            return 0
        return 1 if x > 0 else -1

    return sgn(a), sgn(b), sgn(c)


def octant_contains(a, b, c, closed: bool = False, eps: float = DEFAULT_EPS) -> bool:
    """Membership from the sign pattern of frame coordinates."""
    sa, sb, sc = _signs(a, b, c, eps)
    if closed:
        if sa > 0:
            return sb >= 0
        if sa < 0:
            return sc <= 0
        return sb >= 0 or sc <= 0
    return (sa > 0 and sb > 0) or (sa == 0 and sb > 0 and sc < 0) or (sa < 0 and sc < 0)


def contains(H: CrookedHalfspace, q: Vec3, closed: bool = False, eps: float = DEFAULT_EPS) -> bool:
    a, b, c = H.coords(q)
    return octant_contains(a, b, c, closed, eps)


def contains_inner_form(H: CrookedHalfspace, q: Vec3, closed: bool = False, eps: float = DEFAULT_EPS) -> bool:
    """Membership evaluated clause by clause on the inner products with s, s-, s+."""
    d = q - H.vertex
    f = H.frame
    ds, dm, dp = inner(d, f.s), inner(d, f.s_minus), inner(d, f.s_plus)
    tol = eps * max(abs(ds), abs(dm), abs(dp))

    def pos(x):
        return x > tol

    def neg(x):
        return x < -tol

    def zero(x):
        return abs(x) <= tol

    if closed:
        return (not pos(dp) and not neg(ds)) or (not neg(dm) and not pos(ds))
    return (
        (neg(dp) and pos(ds))
        or (neg(dp) and pos(dm) and zero(ds))
        or (pos(dm) and neg(ds))
    )


def contains_many(H: CrookedHalfspace, points: np.ndarray, closed: bool = False, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Vectorized membership for an (n, 3) float array of points."""
    abc = frame_coords_many(points, H.vertex, H.frame)
    tol = eps * np.abs(abc).max(axis=-1)
    a, b, c = abc[..., 0], abc[..., 1], abc[..., 2]
    pa, na = a > tol, a < -tol
    pb, nb = b > tol, b < -tol
    pc, nc = c > tol, c < -tol
    za = ~pa & ~na
    if closed:
        return (pa & ~nb) | (na & ~pc) | (za & (~nb | ~pc))
    return (pa & pb) | (za & pb & nc) | (na & nc)


def stratum(H: CrookedHalfspace, q: Vec3, eps: float = DEFAULT_EPS) -> Stratum:
    sa, sb, sc = _signs(*H.coords(q), eps)
    if sa == 0:
        if sb == 0 and sc == 0:
            return Stratum.VERTEX
        if sc == 0:
            return Stratum.HINGE_MINUS
        if sb == 0:
            return Stratum.HINGE_PLUS
        if sb * sc > 0:
            return Stratum.STEM_FACE
        return Stratum.OPEN_INTERIOR if sb > 0 else Stratum.EXTERIOR
    if sa > 0:
        if sb == 0:
            return Stratum.WING_MINUS
        return Stratum.OPEN_INTERIOR if sb > 0 else Stratum.EXTERIOR
    if sc == 0:
        return Stratum.WING_PLUS
    return Stratum.OPEN_INTERIOR if sc < 0 else Stratum.EXTERIOR


def semigroup_generators(H: CrookedHalfspace) -> tuple[Vec3, Vec3]:
    return H.frame.s_minus, -H.frame.s_plus


def stem_quadrant(H: CrookedHalfspace) -> TranslationCone:
    """Quad(H) = vertex + V(H), the cone on s- and -s+."""
    return TranslationCone(semigroup_generators(H), apex=H.vertex)


def semigroup_contains(H: CrookedHalfspace, v: Vec3, relative_interior: bool = False, eps: float = DEFAULT_EPS) -> bool:
    f = H.frame
    ds, alpha, beta = inner(v, f.s), inner(v, f.s_minus), -inner(v, f.s_plus)
    tol = eps * max(abs(ds), abs(alpha), abs(beta))
    if abs(ds) > tol:
        return False
    if relative_interior:
        return alpha > tol and beta > tol
    return alpha >= -tol and beta >= -tol


def complement(H: CrookedHalfspace) -> CrookedHalfspace:
    """The open halfspace complementary to the closure of H."""
    f = H.frame.reversed()
    return CrookedHalfspace(H.vertex, f.s, f)


def linearize(H: CrookedHalfspace) -> Halfplane:
    return Halfplane(H.director)


def transform(H: CrookedHalfspace, g: AffineMap) -> CrookedHalfspace:
    """Image of H under an orientation-preserving conformal affine map.

    Time-orientation-reversing maps swap the future null directions, so the
    image director is then the negated image of s.
    """
    if g.conformal_factor() is None or not g.preserves_orientation:
        raise ValueError("transform needs an orientation-preserving conformal map")
    s = g.apply_vector(H.director)
    s = s / float(norm2(s)) ** 0.5
    if not g.preserves_time_orientation:
        s = -s
    return CrookedHalfspace(g(H.vertex), s)
