"""Halfplanes of the hyperbolic plane in the hyperboloid model.

A point is a future unit timelike vector; a halfplane h(s) is the set of
points with v . s >= 0 for a unit spacelike s.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .minkowski import (
    DEFAULT_EPS,
    CausalClass,
    Vec3,
    classify,
    euclidean_cross,
    inner,
    norm2,
    null_frame,
)


@dataclass(frozen=True)
class HPoint:
    v: Vec3

    def __post_init__(self):
        if abs(float(norm2(self.v)) + 1.0) > 1e-6 * max(1.0, self.v.max_abs() ** 2) or self.v.z <= 0:
            raise ValueError(f"not on the future unit hyperboloid: {self.v!r}")

    @classmethod
    def from_klein(cls, x: float, y: float) -> "HPoint":
        r2 = x * x + y * y
        if r2 >= 1:
            raise ValueError("Klein coordinates must lie in the open unit disk")
        k = 1.0 / math.sqrt(1.0 - r2)
        return cls(Vec3(x * k, y * k, k))

    @classmethod
    def from_timelike(cls, v: Vec3) -> "HPoint":
        cls_ = classify(v)
        if not cls_.is_timelike:
            raise ValueError("expected a timelike vector")
        k = 1.0 / math.sqrt(-float(norm2(v)))
        if cls_ is CausalClass.TIMELIKE_PAST:
            k = -k
        return cls(v.to_float() * k)

    def klein(self) -> tuple[float, float]:
        return float(self.v.x / self.v.z), float(self.v.y / self.v.z)


@dataclass(frozen=True)
class Halfplane:
    s: Vec3

    @classmethod
    def from_spacelike(cls, s: Vec3) -> "Halfplane":
        return cls(_unit_spacelike(s))

    def complement(self) -> "Halfplane":
        return Halfplane(-self.s)


class GeodesicRelation(enum.Enum):
    ULTRAPARALLEL = "ultraparallel"
    ASYMPTOTIC = "asymptotic"
    CROSSING = "crossing"
    EQUAL = "equal"


def _unit_spacelike(s: Vec3) -> Vec3:
    if classify(s) is not CausalClass.SPACELIKE:
        raise ValueError(f"expected a spacelike vector, got {s!r}")
    return s.to_float() / math.sqrt(float(norm2(s)))


def hp_contains(h: Halfplane, p: HPoint, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    value = float(inner(p.v, h.s))
    tol = eps * max(1.0, p.v.euclidean_norm())
    return value >= -tol if closed else value > tol


def consistently_oriented(s1: Vec3, s2: Vec3, eps: float = DEFAULT_EPS) -> bool:
    """s1.s2 < 0 and every cross pairing with the null vectors is <= 0."""
    s1, s2 = _unit_spacelike(s1), _unit_spacelike(s2)
    f1, f2 = null_frame(s1), null_frame(s2)
    if inner(s1, s2) >= -eps:
        return False
    pairings = (
        inner(s1, f2.s_minus),
        inner(s1, f2.s_plus),
        inner(f1.s_minus, s2),
        inner(f1.s_plus, s2),
    )
    return all(x <= eps for x in pairings)


def parallel(u: Vec3, v: Vec3, eps: float = DEFAULT_EPS) -> bool:
    """True when u and v span the same line."""
    c = euclidean_cross(u.to_float(), v.to_float()).euclidean_norm()
    return c <= eps * u.euclidean_norm() * v.euclidean_norm()


def relation(s1: Vec3, s2: Vec3, eps: float = DEFAULT_EPS) -> GeodesicRelation:
    s1, s2 = _unit_spacelike(s1), _unit_spacelike(s2)
    if parallel(s1, s2, eps):
        return GeodesicRelation.EQUAL
    d = abs(float(inner(s1, s2)))
    if abs(d - 1.0) <= eps:
        return GeodesicRelation.ASYMPTOTIC
    return GeodesicRelation.ULTRAPARALLEL if d > 1.0 else GeodesicRelation.CROSSING


def halfplanes_disjoint(h1: Halfplane, h2: Halfplane, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    """Disjointness of closed (default) or open halfplanes.

    Distinct geodesics: disjoint exactly when the directors are consistently
    oriented.  A shared geodesic: only the open complementary halfplanes are
    disjoint (s and -s pass the consistency test but share the boundary).
    """
    if parallel(h1.s, h2.s, eps):
        return not closed and float(inner(h1.s, h2.s)) < 0
    return consistently_oriented(h1.s, h2.s, eps)


def halfplane_subset(h1: Halfplane, h2: Halfplane, eps: float = DEFAULT_EPS) -> bool:
    """Whether h1 is contained in h2."""
    if parallel(h1.s, h2.s, eps):
        return float(inner(h1.s, h2.s)) > 0
    return consistently_oriented(h1.s, -h2.s, eps)


def klein_boundary_x(h: Halfplane, eps: float = DEFAULT_EPS) -> float:
    """Abscissa of the boundary chord x = const of a halfplane in the Klein disk."""
    s = h.s
    if abs(float(s.y)) > eps * s.euclidean_norm():
        raise ValueError("boundary is not a vertical chord (director has a y component)")
    return float(s.z) / float(s.x)
