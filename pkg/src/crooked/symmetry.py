"""Automorphisms of a crooked halfspace and the orbit invariant with its global slice.

In frame coordinates the affine automorphisms are rho^eps e^s diag(e^u, e^t, e^-t);
the conformal ones have u = 0 and the isometries also s = 0.  The invariant
Phi(a, b, c) = bc/a^2 classifies Conf+(H)-orbits, with the stem quadrant
sent to -inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .halfspace import CrookedHalfspace, contains
from .minkowski import DEFAULT_EPS, AffineMap, Vec3, frame_linear_map

RHO = np.array([[-1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, -1.0, 0.0]])
Q0 = (0.0, 1.0, -1.0)


@dataclass(frozen=True)
class AutomorphismParams:
    s: float = 0.0
    t: float = 0.0
    u: float = 0.0
    eps: int = 0

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    @property
    def is_conformal(self) -> bool:
        return self.u == 0

    @property
    def is_isometry(self) -> bool:
        return self.u == 0 and self.s == 0

    def frame_matrix(self) -> np.ndarray:
        m = math.exp(self.s) * np.diag([math.exp(self.u), math.exp(self.t), math.exp(-self.t)])
        return RHO @ m if self.eps else m

    def apply_frame(self, abc) -> tuple[float, float, float]:
        return tuple(float(x) for x in self.frame_matrix() @ np.asarray(abc, dtype=float))

    def to_map(self, H: CrookedHalfspace) -> AffineMap:
        """The automorphism of H as an affine map of E fixing the vertex."""
        return AffineMap(frame_linear_map(H.frame, self.frame_matrix())).about(H.vertex)


@dataclass(frozen=True)
class OrbitCoordinate:
    """Value of Phi; ``phi = -inf`` marks the stem quadrant."""

    phi: float

    @property
    def in_stem_quadrant(self) -> bool:
        return self.phi == -math.inf

    def serialize(self):
        return "-inf" if self.in_stem_quadrant else self.phi

    @classmethod
    def parse(cls, value) -> "OrbitCoordinate":
        return cls(-math.inf if value == "-inf" else float(value))


def _frame_coords(H: CrookedHalfspace, q: Vec3, eps: float):
    if not contains(H, q, closed=False, eps=eps):
        raise ValueError("point is not in the open halfspace")
    a, b, c = (float(x) for x in H.coords(q))
    if abs(a) <= eps * max(abs(a), abs(b), abs(c)):
        a = 0.0
    return a, b, c


def phi_frame(a: float, b: float, c: float) -> OrbitCoordinate:
    if a == 0:
        return OrbitCoordinate(-math.inf)
    return OrbitCoordinate(b * c / (a * a))


def phi(H: CrookedHalfspace, q: Vec3, eps: float = DEFAULT_EPS) -> OrbitCoordinate:
    return phi_frame(*_frame_coords(H, q, eps))


@dataclass(frozen=True)
class Canonical:
    params: AutomorphismParams
    slice_point: tuple[float, float, float]  # frame coordinates
    phi: OrbitCoordinate


def canonicalize_frame(a: float, b: float, c: float) -> Canonical:
    """Write (a, b, c) = g(x) with g in Conf+(H) and x = q0 or p_gamma = (1, 1, gamma)."""
    if a == 0:
        s = (math.log(b) + math.log(-c)) / 2
        t = (math.log(b) - math.log(-c)) / 2
        return Canonical(AutomorphismParams(s, t), Q0, OrbitCoordinate(-math.inf))
    eps = 0
    if a < 0:
        a, b, c = -a, -c, -b
        eps = 1
    gamma = b * c / (a * a)
    params = AutomorphismParams(math.log(a), math.log(b / a), 0.0, eps)
    return Canonical(params, (1.0, 1.0, gamma), OrbitCoordinate(gamma))


def canonicalize(H: CrookedHalfspace, q: Vec3, eps: float = DEFAULT_EPS) -> Canonical:
    return canonicalize_frame(*_frame_coords(H, q, eps))


def global_slice(a: float) -> tuple[float, float, float]:
    """The rho-equivariant slice sigma for the identity component, in frame coordinates.

    The two middle branches are the printed ones; the outer branches use
    (1, 1, a-1) and its rho-image, so that sigma hits every orbit once on
    each side of the stem quadrant.
    """
    a = float(a)
    if a <= -1:
        return (-1.0, a + 1.0, -1.0)
    if a <= 0:
        return (a, a + 1.0, -1.0)
    if a <= 1:
        return (a, 1.0, a - 1.0)
    return (1.0, 1.0, a - 1.0)


def gamma_middle(a: float) -> float:
    """Phi along the [0, 1] branch: (a - 1)/a^2."""
    return (a - 1.0) / (a * a)


def a_of_gamma(g: float) -> float:
    """Inverse of gamma_middle on (0, 1], for g <= 0."""
    if g == -math.inf:
        return 0.0
    # rationalized root of g a^2 - a + 1 = 0; no cancellation near g = 0
    return 2.0 / (1.0 + math.sqrt(1.0 - 4.0 * g))


def slice_parameter(H: CrookedHalfspace, q: Vec3, eps: float = DEFAULT_EPS) -> float:
    """Parameter a with sigma(a) in the Conf0(H)-orbit of q."""
    a, b, c = _frame_coords(H, q, eps)
    if a == 0:
        return 0.0
    sign = 1.0
    if a < 0:
        a, b, c = -a, -c, -b
        sign = -1.0
    g = b * c / (a * a)
    return sign * (a_of_gamma(g) if g <= 0 else 1.0 + g)


def identity_component_params(x, q) -> AutomorphismParams:
    """The element of Conf0(H) (diagonal, no rho) taking frame point x to q.

    Both must lie in the same solid quadrant or both in the stem quadrant.
    """
    xa, xb, xc = x
    qa, qb, qc = q
    if xa == 0 and qa == 0:
        # e^s e^t = qb/xb, e^s e^-t = qc/xc
        lb, lc = math.log(qb / xb), math.log(qc / xc)
        return AutomorphismParams((lb + lc) / 2, (lb - lc) / 2)
    s = math.log(qa / xa)
    # use whichever of b, c is nonzero on x to fix t
    if xb != 0:
        t = math.log(qb / xb) - s
    else:
        t = s - math.log(qc / xc)
    return AutomorphismParams(s, t)


@dataclass(frozen=True)
class Ray:
    origin: Vec3
    direction: Vec3

    def at(self, r: float) -> Vec3:
        if r < 0:
            raise ValueError("ray parameter must be nonnegative")
        return self.origin + self.direction * r


def fixed_ray(H: CrookedHalfspace) -> Ray:
    """Ray of rho-fixed points in the stem quadrant: vertex + R+ (0, 1, -1)."""
    return Ray(H.vertex, H.point(*Q0) - H.vertex)
