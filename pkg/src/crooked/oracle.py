"""Brute-force oracles used to cross-check the closed-form predicates.

Nothing here is clever on purpose: points are sampled, probed along the
strata seams, or found by a linear program on the convex pieces of each
halfspace, and every witness is re-checked with the membership predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .halfspace import CrookedHalfspace, contains, contains_many
from .hyperbolic import Halfplane, HPoint, hp_contains
from .lines import Line
from .minkowski import DEFAULT_EPS, Vec3, null_frame, to_frame


@dataclass(frozen=True)
class OracleConfig:
    samples: int = 10_000
    seed: int = 0
    radius_factor: float = 1e3  # outer sampling radius is radius_factor * (1 + |p1 - p2|)
    inner_factor: float = 1e-3
    max_rounds: int = 200
    lp: bool = True


@dataclass
class OracleResult:
    disjoint: bool
    witness: Vec3 | None = None
    source: str | None = None
    checked: int = 0


# -- crooked halfspace pairs ------------------------------------------------


def _ball_samples(rng, center: np.ndarray, r_lo: float, r_hi: float, n: int) -> np.ndarray:
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    r = np.exp(rng.uniform(math.log(r_lo), math.log(r_hi), size=(n, 1)))
    return center + d * r


def sample_halfspace(H: CrookedHalfspace, n: int, rng, center: np.ndarray, r_lo: float, r_hi: float,
                     closed: bool = True, max_rounds: int = 200) -> np.ndarray:
    """Rejection-sample n points of H from a multi-scale ball around center."""
    out = []
    have = 0
    for _ in range(max_rounds):
        pts = _ball_samples(rng, center, r_lo, r_hi, max(2 * (n - have), 64))
        pts = pts[contains_many(H, pts, closed=closed)]
        out.append(pts)
        have += len(pts)
        if have >= n:
            break
    pts = np.concatenate(out) if out else np.zeros((0, 3))
    return pts[:n]


def seam_probes(H: CrookedHalfspace) -> np.ndarray:
    """Points on the singular strata and the face seams, at many scales."""
    f = H.frame
    p = H.vertex.to_array()
    dirs = [f.s_minus, -f.s_minus, f.s_plus, -f.s_plus, f.s, -f.s,
            f.s_minus - f.s_plus, f.s + f.s_minus, -f.s - f.s_plus,
            f.s + f.s_plus, -f.s + f.s_minus]
    dirs = np.array([d.to_array() for d in dirs], dtype=float)
    scales = 2.0 ** np.arange(-20, 21)
    pts = [p[None, :]]
    for d in dirs:
        pts.append(p + scales[:, None] * d)
    return np.concatenate(pts)


def _pieces(H: CrookedHalfspace):
    """Convex pieces of the closed halfspace as lists of (normal, offset): n.x >= offset."""
    f = H.frame
    J = np.array([1.0, 1.0, -1.0])
    p = H.vertex.to_array()
    # linear forms in world coordinates: a = Js.(x-p), b = -Js+.(x-p), c = -Js-.(x-p)
    na = J * f.s.to_array()
    nb = -J * f.s_plus.to_array()
    nc = -J * f.s_minus.to_array()
    forms = []
    for piece in ((na, nb), (-na, -nc)):
        forms.append([(n / np.linalg.norm(n), float(n @ p) / np.linalg.norm(n)) for n in piece])
    return forms


def lp_witness(H1: CrookedHalfspace, H2: CrookedHalfspace, closed: bool = True, tol: float = 1e-9):
    """Point of greatest slack in H1 and H2 over all convex piece pairs.

    Returns (slack, point).  Coordinates are centered and scaled so that the
    slack is measured relative to the distance between the vertices.
    """
    p1, p2 = H1.vertex.to_array(), H2.vertex.to_array()
    center = 0.5 * (p1 + p2)
    L = 1.0 + float(np.linalg.norm(p1 - p2))
    best = (-math.inf, None)
    for A in _pieces(H1):
        for B in _pieces(H2):
            rows, rhs = [], []
            for n, off in A + B:
                # n.(center + L y) - off >= delta  ->  -L n.y + delta <= n.center - off
                rows.append(np.concatenate([-L * n, [1.0]]))
                rhs.append(float(n @ center) - off)
            c = np.array([0.0, 0.0, 0.0, -1.0])
            res = linprog(c, A_ub=np.array(rows) / L, b_ub=np.array(rhs) / L,
                          bounds=[(None, None)] * 3 + [(None, 1.0)], method="highs")
            if res.status != 0:
                continue
            slack = -res.fun
            if slack > best[0]:
                best = (slack, center + L * res.x[:3])
    return best


def _validated(H1, H2, q: np.ndarray, closed: bool, eps: float) -> Vec3 | None:
    v = Vec3(*(float(x) for x in q))
    if contains(H1, v, closed=closed, eps=eps) and contains(H2, v, closed=closed, eps=eps):
        return v
    return None


def halfspace_pair_oracle(H1: CrookedHalfspace, H2: CrookedHalfspace, cfg: OracleConfig = OracleConfig(),
                          closed: bool = True, sample: bool = True, eps: float = DEFAULT_EPS) -> OracleResult:
    """Search for a common point of two crooked halfspaces.

    Sampling and seam probes come first; the LP over convex pieces closes the
    gap for thin intersections.  A witness is reported only after it passes
    both membership predicates.
    """
    checked = 0
    if sample and cfg.samples > 0:
        rng = np.random.default_rng(cfg.seed)
        p1, p2 = H1.vertex.to_array(), H2.vertex.to_array()
        scale = 1.0 + float(np.linalg.norm(p1 - p2))
        r_lo, r_hi = cfg.inner_factor * scale, cfg.radius_factor * scale
        for A, B in ((H1, H2), (H2, H1)):
            for center in (0.5 * (p1 + p2), A.vertex.to_array()):
                pts = sample_halfspace(A, cfg.samples // 2, rng, center, r_lo, r_hi, closed, cfg.max_rounds)
                checked += len(pts)
                hit = pts[contains_many(B, pts, closed=closed)]
                for q in hit[:8]:
                    w = _validated(H1, H2, q, closed, eps)
                    if w is not None:
                        return OracleResult(False, w, "sample", checked)
        for A, B in ((H1, H2), (H2, H1)):
            pts = seam_probes(A)
            checked += len(pts)
            hit = pts[contains_many(B, pts, closed=closed) & contains_many(A, pts, closed=closed)]
            for q in hit[:8]:
                w = _validated(H1, H2, q, closed, eps)
                if w is not None:
                    return OracleResult(False, w, "probe", checked)
    if cfg.lp:
        slack, q = lp_witness(H1, H2, closed)
        found = slack >= -1e-9 if closed else slack > 1e-9
        if found:
            for cand in (q, H1.vertex.to_array(), H2.vertex.to_array()):
                w = _validated(H1, H2, np.asarray(cand, dtype=float), closed, eps)
                if w is not None:
                    return OracleResult(False, w, "lp", checked)
            # the LP says they touch but no candidate survives the tolerance test
            return OracleResult(False, Vec3(*(float(x) for x in q)), "lp-unvalidated", checked)
    return OracleResult(True, None, None, checked)


# -- hyperbolic halfplanes --------------------------------------------------


def _ideal_probes(s: Vec3, depth: int = 12) -> list[tuple[float, float]]:
    f = null_frame(s)
    out = []
    for n in (f.s_minus, f.s_plus):
        x, y = float(n.x / n.z), float(n.y / n.z)
        for k in range(1, depth + 1):
            r = 1.0 - 10.0 ** (-k)
            out.append((x * r, y * r))
    return out


def halfplane_pair_oracle(h1: Halfplane, h2: Halfplane, samples: int = 10_000, seed: int = 0,
                          closed: bool = True, eps: float = DEFAULT_EPS) -> OracleResult:
    """Sample the Klein disk (plus points crowding the ideal endpoints) for a common point."""
    rng = np.random.default_rng(seed)
    r = np.sqrt(rng.uniform(0, 1, samples)) * (1 - 1e-12)
    th = rng.uniform(0, 2 * math.pi, samples)
    xy = np.stack([r * np.cos(th), r * np.sin(th)], axis=1)
    extra = np.array(_ideal_probes(h1.s) + _ideal_probes(h2.s) + [(0.0, 0.0)])
    xy = np.concatenate([xy, extra])
    k = 1.0 / np.sqrt(1.0 - (xy**2).sum(axis=1))
    V = np.stack([xy[:, 0] * k, xy[:, 1] * k, k], axis=1)
    J = np.array([1.0, 1.0, -1.0])
    d1 = V @ (J * h1.s.to_array())
    d2 = V @ (J * h2.s.to_array())
    tol = eps * np.abs(V).max(axis=1)
    if closed:
        ok = (d1 >= -tol) & (d2 >= -tol)
    else:
        ok = (d1 > tol) & (d2 > tol)
    for i in np.flatnonzero(ok)[:8]:
        p = HPoint(Vec3(*V[i]))
        if hp_contains(h1, p, closed, eps) and hp_contains(h2, p, closed, eps):
            return OracleResult(False, p.v, "sample", len(V))
    return OracleResult(True, None, None, len(V))


# -- lines ------------------------------------------------------------------


def _is_exact(*vs) -> bool:
    return all(isinstance(c, (int, Fraction)) for v in vs for c in v)


def line_parameters(line: Line, H: CrookedHalfspace) -> list:
    """Test parameters: a dyadic grid plus every coordinate-plane crossing,
    the midpoints between consecutive crossings and points beyond the ends.
    Between consecutive crossings the sign pattern is constant, so this set
    sees every region the line passes through.  Rational input gives
    rational parameters."""
    exact = _is_exact(line.base, line.dir, H.vertex, H.director)
    num = Fraction if exact else float
    x0s = [num(x) for x in H.coords(line.base)]
    d = [num(x) for x in to_frame(line.dir, H.frame)]
    grid = [num(0)] + [s * num(2) ** k for k in range(-20, 21) for s in (1, -1)]
    cross = []
    dmax = max(abs(x) for x in d)
    for x0, dx in zip(x0s, d):
        # coordinates constant up to rounding have no meaningful crossing
        if (dx != 0) if exact else abs(dx) > 1e-12 * dmax:
            cross.append(-x0 / dx)
    cross = sorted(set(cross))
    extra = list(cross)
    for lo, hi in zip(cross, cross[1:]):
        extra.append((lo + hi) / 2)
    if cross:
        extra += [cross[0] - 1 - abs(cross[0]), cross[-1] + 1 + abs(cross[-1])]
    return grid + extra


def line_oracle(line: Line, H: CrookedHalfspace, closed: bool = True, eps: float = DEFAULT_EPS):
    """(contained, first failing parameter or None); exact for rational input."""
    ts = line_parameters(line, H)
    if _is_exact(line.base, line.dir, H.vertex, H.director):
        for t in ts:
            if not contains(H, line.at(t), closed=closed, eps=0):
                return False, t
        return True, None
    ts = np.array(ts)
    base, d = line.base.to_array().astype(float), line.dir.to_array().astype(float)
    pts = base + ts[:, None] * d
    inside = contains_many(H, pts, closed=closed, eps=eps)
    if inside.all():
        return True, None
    return False, float(ts[np.flatnonzero(~inside)[0]])
