"""Finitely generated cones of translations.

Membership is decided from facet normals (n . v >= 0 for every facet, with
the Lorentzian inner product) and, independently, by solving for
nonnegative generator coefficients with a linear program.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .minkowski import DEFAULT_EPS, ORIGIN, Vec3, cross, det3, euclidean_cross, inner


@dataclass(frozen=True, eq=False)
class TranslationCone:
    generators: tuple[Vec3, ...]
    apex: Vec3 = ORIGIN
    facet_normals: tuple[Vec3, ...] = field(init=False)
    degenerate: bool = field(init=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        degenerate = len(gens) < 3 or _coplanar(gens)
        object.__setattr__(self, "degenerate", degenerate)
        object.__setattr__(self, "facet_normals", () if degenerate else _facets(gens))

    def contains_point(self, q: Vec3, interior: bool = False, eps: float = DEFAULT_EPS) -> bool:
        return cone_contains(self, q - self.apex, interior, eps)


def _coplanar(gens) -> bool:
    if len(gens) < 3:
        return True
    scale = max(g.euclidean_norm() for g in gens) ** 3
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            for k in range(j + 1, len(gens)):
                d = det3(gens[i], gens[j], gens[k])
                if abs(d) > 1e-12 * scale or (d != 0 and scale == 0):
                    return False
    return True


def _facets(gens) -> tuple[Vec3, ...]:
    normals = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            n = cross(gens[i], gens[j])
            if n.is_zero():
                continue
            others = [inner(n, g) for k, g in enumerate(gens) if k not in (i, j)]
            tol = 1e-12 * n.euclidean_norm() * max(g.euclidean_norm() for g in gens)
            if all(x >= -tol for x in others) and any(x > tol for x in others):
                normals.append(n)
            elif all(x <= tol for x in others) and any(x < -tol for x in others):
                normals.append(-n)
    if not normals:
        raise ValueError("cone is not salient; no supporting facets")
    return tuple(normals)


def _planar_coefficients(g1: Vec3, g2: Vec3, v: Vec3):
    """Coefficients of v on (g1, g2) and the out-of-plane residual."""
    n = euclidean_cross(g1, g2)
    nn = n.x * n.x + n.y * n.y + n.z * n.z
    c1 = euclidean_cross(v, g2)
    c2 = euclidean_cross(g1, v)
    alpha = (c1.x * n.x + c1.y * n.y + c1.z * n.z) / nn
    beta = (c2.x * n.x + c2.y * n.y + c2.z * n.z) / nn
    off = (v.x * n.x + v.y * n.y + v.z * n.z)
    return alpha, beta, off, nn


def cone_contains(C: TranslationCone, v: Vec3, interior: bool = False, eps: float = DEFAULT_EPS) -> bool:
    """Closed membership, or interior membership with ``interior=True``.

    For a planar cone the interior test is the relative interior; the cone's
    ``degenerate`` flag tells callers which one they got.
    """
    if C.degenerate:
        if len(C.generators) != 2:
            raise ValueError("only two-generator planar cones are supported")
        g1, g2 = C.generators
        alpha, beta, off, nn = _planar_coefficients(g1, g2, v)
        vn = v.euclidean_norm()
        if abs(off) > eps * vn * nn**0.5:
            return False
        ta = eps * vn / g1.euclidean_norm()
        tb = eps * vn / g2.euclidean_norm()
        if interior:
            return alpha > ta and beta > tb
        return alpha >= -ta and beta >= -tb
    vn = v.euclidean_norm()
    for n in C.facet_normals:
        value = inner(n, v)
        tol = eps * n.euclidean_norm() * vn
        if interior:
            if value <= tol:
                return False
        elif value < -tol:
            return False
    return True


def cone_contains_lp(C: TranslationCone, v: Vec3, interior: bool = False, eps: float = DEFAULT_EPS) -> bool:
    """Coefficient route: maximize t subject to sum(l_i g_i) = v, l_i >= t."""
    G = np.column_stack([g.to_array() / np.linalg.norm(g.to_array()) for g in C.generators])
    va = v.to_array()
    vn = np.linalg.norm(va)
    if vn == 0:
        return not interior
    va = va / vn
    k = G.shape[1]
    # variables: l_1..l_k, t ; maximize t
    c = np.zeros(k + 1)
    c[-1] = -1.0
    A_eq = np.hstack([G, np.zeros((3, 1))])
    A_ub = np.hstack([-np.eye(k), np.ones((k, 1))])
    bounds = [(None, None)] * k + [(None, 1.0)]
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(k), A_eq=A_eq, b_eq=va, bounds=bounds, method="highs")
    if res.status == 2:
        return False
    if res.status != 0:
        raise RuntimeError(f"linear program failed: {res.message}")
    t = -res.fun
    return t > eps if interior else t >= -eps
