"""Lines contained in a crooked halfspace, and particles through its points."""

from __future__ import annotations

from dataclasses import dataclass

from .halfspace import CrookedHalfspace, contains, linearize
from .hyperbolic import Halfplane
from .minkowski import DEFAULT_EPS, Vec3, inner, norm2, to_frame


@dataclass(frozen=True)
class Line:
    base: Vec3
    dir: Vec3

    def __post_init__(self):
        if self.dir.is_zero():
            raise ValueError("line direction must be nonzero")

    def at(self, t) -> Vec3:
        return self.base + self.dir * t

    def canonical(self) -> "Line":
        """Same line with base at the foot of the Euclidean perpendicular from the origin."""
        d = self.dir
        dd = d.x * d.x + d.y * d.y + d.z * d.z
        t = -(self.base.x * d.x + self.base.y * d.y + self.base.z * d.z) / dd
        return Line(self.at(t), d)

    @property
    def is_particle(self) -> bool:
        return norm2(self.dir) < 0


def _sign(x, tol) -> int:
    if abs(x) <= tol:
        return 0
    return 1 if x > 0 else -1


def line_in_halfspace(line: Line, H: CrookedHalfspace, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    """Whether every point of the line lies in H (or its closure).

    A line crossing the stem plane is contained iff its direction, scaled to
    a positive s-component, has nonnegative s- and s+ components and its
    crossing point lies in the stem quadrant (the open quadrant for open
    containment).  Lines parallel to the stem plane are decided on the plane
    a = const that carries them.
    """
    a0, b0, c0 = H.coords(line.base)
    al, be, ga = to_frame(line.dir, H.frame)
    dscale = max(abs(al), abs(be), abs(ga))
    dtol = eps * dscale
    pscale = max(abs(a0), abs(b0), abs(c0), dscale)
    ptol = eps * pscale

    if _sign(al, dtol) != 0:
        if al < 0:
            al, be, ga = -al, -be, -ga
        # crossing with the stem plane a = 0
        t = -a0 / al
        B, C = b0 + t * be, c0 + t * ga
        sb, sg = _sign(be, dtol), _sign(ga, dtol)
        if sb < 0 or sg < 0:
            return False
        sB, sC = _sign(B, ptol), _sign(C, ptol)
        if closed:
            return sB >= 0 and sC <= 0
        return sB > 0 and sC < 0

    sa = _sign(a0, ptol)
    sb, sg = _sign(be, dtol), _sign(ga, dtol)
    if sa > 0:
        # need b >= 0 along the line
        return sb == 0 and (_sign(b0, ptol) >= 0 if closed else _sign(b0, ptol) > 0)
    if sa < 0:
        return sg == 0 and (_sign(c0, ptol) <= 0 if closed else _sign(c0, ptol) < 0)
    if not closed:
        # the open halfspace meets the stem plane in an open quadrant: no lines
        return False
    # closed: no parameter with b < 0 and c > 0
    bad_b = _open_ray(b0, be, ptol, below=True)
    bad_c = _open_ray(c0, ga, ptol, below=False)
    return not _rays_meet(bad_b, bad_c)


def _open_ray(x0, dx, tol, below: bool):
    """Parameter set {t : x0 + t dx < 0} (below) or {> 0} as (lo, hi) or None/'all'."""
    s = _sign(dx, tol)
    if s == 0:
        inside = (x0 < -tol) if below else (x0 > tol)
        return "all" if inside else None
    root = -x0 / dx
    if (s > 0) == below:
        return (float("-inf"), root)
    return (root, float("inf"))


def _rays_meet(r1, r2) -> bool:
    if r1 is None or r2 is None:
        return False
    if r1 == "all" or r2 == "all":
        return True
    lo = max(r1[0], r2[0])
    hi = min(r1[1], r2[1])
    return lo < hi


def particle_halfplane(H: CrookedHalfspace) -> Halfplane:
    """Directions of particles contained in H form the halfplane h(s)."""
    return linearize(H)


def particle_through(H: CrookedHalfspace, q: Vec3, eps: float = DEFAULT_EPS) -> Line:
    """A particle through q contained in H, for q in the open halfspace."""
    if not contains(H, q, closed=False, eps=eps):
        raise ValueError("point is not in the open halfspace")
    a, b, c = H.coords(q)
    scale = max(abs(a), abs(b), abs(c))
    if abs(a) <= eps * scale:
        d = (0.5, 1.0, 1.0)
    elif a > 0:
        d = _solid_quadrant_direction(a, b, c)
    else:
        # rho(a, b, c) = (-a, -c, -b) carries the a < 0 quadrant to a > 0
        ra, rb, rc = _solid_quadrant_direction(-a, -c, -b)
        d = (-ra, -rc, -rb)
    direction = H.point(*d) - H.vertex
    if direction.z < 0:
        direction = -direction
    return Line(q, direction)


def _solid_quadrant_direction(a, b, c):
    B = b / 2
    C = min(0, c - a * a / (b - B)) - 1
    return a, b - B, c - C


def direction_in_halfplane(H: CrookedHalfspace, u: Vec3, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    value = float(inner(u, H.director))
    tol = eps * u.euclidean_norm()
    return value >= -tol if closed else value > tol
