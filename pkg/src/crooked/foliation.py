"""Crooked foliations: integrating the vertex path and certifying the leaves.

A foliation is given by a path of directors s_t, positive coefficients
(a_t, b_t) and an initial vertex.  The vertex path integrates
p_t' = a_t s_t- - b_t s_t+, which lies in the relative interior of the
translational semigroup of H(p_t, s_t); the leaves are then pairwise disjoint
crooked planes, with H(p_t2, s_t2) inside H(p_t1, s_t1) for t1 < t2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .disjointness import halfspaces_disjoint
from .expr import compile_expr
from .halfspace import CrookedHalfspace, complement, contains, semigroup_contains
from .minkowski import DEFAULT_EPS, NullFrame, Vec3, norm2, null_frame


@dataclass(frozen=True)
class DirectorPath:
    func: Callable[[float], Vec3]
    t_range: tuple[float, float]
    name: str = "custom"

    @classmethod
    def orthogonal(cls, t_range=(-3.0, 3.0)) -> "DirectorPath":
        """s_t = (0, cosh t, sinh t): the geodesics orthogonal to the one directed by (1, 0, 0)."""
        return cls(lambda t: Vec3(0.0, math.cosh(t), math.sinh(t)), tuple(float(x) for x in t_range), "orthogonal")

    def __call__(self, t: float) -> Vec3:
        return self.func(t)

    def frame(self, t: float) -> NullFrame:
        return null_frame(self.func(t))

    def check(self, samples: int = 100, lipschitz: float = 10.0, tol: float = 1e-9) -> None:
        t0, t1 = self.t_range
        ts = np.linspace(t0, t1, samples)
        prev = None
        for t in ts:
            s = self.func(float(t))
            if abs(float(norm2(s)) - 1.0) > tol:
                raise ValueError(f"director at t={t} is not unit spacelike")
            # Euclidean size grows along hyperbolic families, so the bound is relative
            step = lipschitz * (ts[1] - ts[0]) * max(1.0, s.euclidean_norm())
            if prev is not None and (s - prev).euclidean_norm() > step:
                raise ValueError(f"director path jumps near t={t}")
            prev = s


@dataclass(frozen=True)
class CoefficientPath:
    a: Callable[[float], float]
    b: Callable[[float], float]
    source: tuple = (None, None)

    @classmethod
    def constant(cls, a: float, b: float) -> "CoefficientPath":
        return cls(lambda t: a, lambda t: b, (a, b))

    @classmethod
    def from_expr(cls, a, b) -> "CoefficientPath":
        return cls(compile_expr(a), compile_expr(b), (a, b))

    def __call__(self, t: float) -> tuple[float, float]:
        return self.a(t), self.b(t)


@dataclass
class CrookedFoliation:
    directors: DirectorPath
    coeffs: CoefficientPath
    p0: Vec3
    ts: np.ndarray
    points: np.ndarray      # (n, 3) vertex path
    velocities: np.ndarray  # (n, 3) p_t' at the samples
    label_flips: int = 0

    def __len__(self) -> int:
        return len(self.ts)

    def vertex(self, i: int) -> Vec3:
        return Vec3(*(float(x) for x in self.points[i]))

    def leaf(self, i: int) -> CrookedHalfspace:
        return CrookedHalfspace(self.vertex(i), self.directors(float(self.ts[i])))

    def leaves(self, indices=None) -> list[CrookedHalfspace]:
        idx = range(len(self)) if indices is None else indices
        return [self.leaf(i) for i in idx]


def velocity(directors: DirectorPath, coeffs: CoefficientPath, t: float) -> np.ndarray:
    a, b = coeffs(t)
    if not (a > 0 and b > 0):
        raise ValueError(f"coefficients must be positive, got a={a}, b={b} at t={t}")
    f = directors.frame(t)
    return a * f.s_minus.to_array() - b * f.s_plus.to_array()


def rk4(fun, t0: float, y0: np.ndarray, h: float, n: int) -> np.ndarray:
    """Classical fixed-step fourth-order integration of y' = fun(t); returns n+1 states.

    The field does not depend on y, so the two midpoint stages coincide and
    each step is Simpson's rule.
    """
    out = np.empty((n + 1, len(y0)))
    y = np.asarray(y0, dtype=float)
    out[0] = y
    for k in range(n):
        t = t0 + k * h
        k1, k2, k4 = fun(t), fun(t + h / 2), fun(t + h)
        y = y + (h / 6) * (k1 + 4 * k2 + k4)
        out[k + 1] = y
    return out


def _count_label_flips(directors: DirectorPath, ts: np.ndarray) -> int:
    """Number of samples where s- lies closer to the previous s+ than to the previous s-."""
    flips = 0
    prev = None
    for t in ts:
        f = directors.frame(float(t))
        m, p = f.s_minus.to_array(), f.s_plus.to_array()
        if prev is not None:
            pm, pp = prev
            if np.dot(m, pm) < np.dot(m, pp):
                flips += 1
        prev = (m, p)
    return flips


def vertex_path(directors: DirectorPath, coeffs: CoefficientPath, p0: Vec3,
                steps: int = 1000, anchor: float | None = None) -> CrookedFoliation:
    """Integrate the vertex path on a uniform grid of ``steps`` intervals.

    ``p0`` is the vertex at parameter ``anchor``, which defaults to 0 when
    the range contains it and to the left endpoint otherwise.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    t0, t1 = directors.t_range
    if not t1 > t0:
        raise ValueError("empty parameter range")
    if anchor is None:
        anchor = 0.0 if t0 <= 0.0 <= t1 else t0
    if not t0 <= anchor <= t1:
        raise ValueError("anchor outside the parameter range")
    h = (t1 - t0) / steps
    fun = lambda t: velocity(directors, coeffs, t)
    start = p0.to_array().astype(float)
    k = (anchor - t0) / h
    if abs(k - round(k)) < 1e-9:
        # anchor on the grid: integrate outward in both directions
        k = int(round(k))
        back = rk4(fun, anchor, start, -h, k)[::-1]
        fwd = rk4(fun, anchor, start, h, steps - k)
        points = np.concatenate([back[:-1], fwd])
    else:
        n_back = max(1, math.ceil(k))
        first = rk4(fun, anchor, start, (t0 - anchor) / n_back, n_back)[-1]
        points = rk4(fun, t0, first, h, steps)
    ts = t0 + h * np.arange(steps + 1)
    ts[-1] = t1
    velocities = np.array([fun(float(t)) for t in ts])
    return CrookedFoliation(directors, coeffs, p0, ts, points, velocities,
                            label_flips=_count_label_flips(directors, ts))


def closed_form_orthogonal(a: float, b: float, t) -> np.ndarray:
    """Vertex path for s_t = (0, cosh t, sinh t) and constant a_t = sqrt2 a, b_t = sqrt2 b."""
    t = np.asarray(t, dtype=float)
    return np.stack([-(a + b) * t, (a - b) * np.cosh(t), (a - b) * np.sinh(t)], axis=-1)


@dataclass
class CertificationReport:
    passed: bool
    semigroup_ok: bool
    disjoint_ok: bool
    checked_pairs: int
    leaf_indices: list[int]
    first_failure: tuple[int, int] | None = None
    bad_velocity: int | None = None
    witness: Vec3 | None = None
    label_flips: int = 0
    notes: list[str] = field(default_factory=list)

    def as_record(self) -> dict:
        return {
            "certified": self.passed,
            "semigroup_ok": self.semigroup_ok,
            "disjoint_ok": self.disjoint_ok,
            "checked_pairs": self.checked_pairs,
            "first_failure": None if self.first_failure is None else list(self.first_failure),
            "bad_velocity": self.bad_velocity,
            "witness": None if self.witness is None else [float(x) for x in self.witness],
            "label_flips": self.label_flips,
        }


def _leaf_indices(n: int, count: int) -> list[int]:
    if count >= n:
        return list(range(n))
    return sorted(set(int(round(x)) for x in np.linspace(0, n - 1, count)))


def certify_foliation(F: CrookedFoliation, leaves: int = 101, eps: float = DEFAULT_EPS,
                      witness: bool = True) -> CertificationReport:
    """Check the semigroup condition on every recorded velocity and pairwise
    disjointness of the crooked planes of a subsample of leaves.

    For i < j the plane of leaf j is disjoint from the plane of leaf i iff the
    closed leaf j misses the closure of the complement of leaf i.
    """
    bad_velocity = None
    for k, t in enumerate(F.ts):
        H = F.leaf(k)
        if not semigroup_contains(H, Vec3(*F.velocities[k]), relative_interior=True, eps=eps):
            bad_velocity = k
            break
    idx = _leaf_indices(len(F), leaves)
    Hs = [F.leaf(i) for i in idx]
    comps = [complement(H) for H in Hs]
    first = None
    pairs = 0
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            pairs += 1
            if not halfspaces_disjoint(Hs[b], comps[a], closed=True, eps=eps):
                first = (idx[a], idx[b])
                break
        if first is not None:
            break
    report = CertificationReport(
        passed=bad_velocity is None and first is None,
        semigroup_ok=bad_velocity is None,
        disjoint_ok=first is None,
        checked_pairs=pairs,
        leaf_indices=idx,
        first_failure=first,
        bad_velocity=bad_velocity,
        label_flips=F.label_flips,
    )
    if F.label_flips:
        report.notes.append("null-frame labels jump along the path")
    if first is not None and witness:
        from .oracle import OracleConfig, halfspace_pair_oracle

        i, j = first
        res = halfspace_pair_oracle(F.leaf(j), complement(F.leaf(i)), OracleConfig(samples=0), sample=False, eps=eps)
        report.witness = res.witness
    return report


def locate(F: CrookedFoliation, q: Vec3, eps: float = DEFAULT_EPS) -> tuple[int, int]:
    """Adjacent indices (i, i+1) with q in open leaf i but not in open leaf i+1.

    A point on the plane of leaf k is outside open leaf k, so it lands in
    (k-1, k).
    """
    n = len(F)

    def inside(i):
        return contains(F.leaf(i), q, closed=False, eps=eps)

    if not inside(0) or inside(n - 1):
        raise ValueError("point lies outside the foliated region")
    lo, hi = 0, n - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if inside(mid):
            lo = mid
        else:
            hi = mid
    return lo, hi
