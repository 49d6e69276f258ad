"""Zigzags, crooked-plane meshes and their text formats (CSV, SVG, OBJ).

A zigzag is the section of a crooked plane by a definite plane: a ray in
the wing W+, a segment of the stem between the two hinge crossings, and a
ray in the wing W-.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .halfspace import CrookedHalfspace
from .minkowski import Vec3, inner


def fmt(x: float, digits: int = 12) -> str:
    """Stable decimal formatting with negative zero folded to zero."""
    x = float(x)
    if x == 0:
        x = 0.0
    s = f"{x:.{digits}g}"
    return "0" if s in ("-0", "0") else s


# -- definite planes and zigzags ---------------------------------------------


@dataclass(frozen=True)
class DefinitePlane:
    point: Vec3
    u: Vec3
    v: Vec3

    def gram(self) -> np.ndarray:
        u, v = self.u, self.v
        return np.array([[float(inner(u, u)), float(inner(u, v))], [float(inner(u, v)), float(inner(v, v))]])

    def check(self) -> None:
        g = self.gram()
        if not (g[0, 0] > 0 and np.linalg.det(g) > 0):
            raise ValueError("cutting plane is not definite (induced metric not positive definite)")

    def at(self, x: float, y: float) -> Vec3:
        return self.point + self.u * x + self.v * y

    def orthonormal_basis(self) -> tuple[Vec3, Vec3]:
        """Gram-Schmidt for the induced (Lorentzian) metric."""
        u, v = self.u, self.v
        e1 = u / math.sqrt(float(inner(u, u)))
        w = v - e1 * float(inner(v, e1))
        e2 = w / math.sqrt(float(inner(w, w)))
        return e1, e2


@dataclass(frozen=True)
class Zigzag:
    breakpoints: tuple[Vec3, Vec3]   # on h- (a = c = 0) then on h+ (a = b = 0)
    wing_plus_dir: Vec3              # ray from the first breakpoint inside W+
    wing_minus_dir: Vec3             # ray from the second breakpoint inside W-
    segment_strata: tuple[str, str, str] = ("wing_plus", "stem_face", "wing_minus")

    @property
    def degenerate(self) -> bool:
        return (self.breakpoints[0] - self.breakpoints[1]).euclidean_norm() == 0


def _affine_frame_coords(H: CrookedHalfspace, P: DefinitePlane):
    """(a, b, c) on the plane as constant + linear part in (x, y)."""
    const = np.array([float(x) for x in H.coords(P.point)])
    f = H.frame
    cols = []
    for w in (P.u, P.v):
        cols.append([float(inner(w, f.s)), -float(inner(w, f.s_plus)), -float(inner(w, f.s_minus))])
    return const, np.array(cols).T  # lin[k] = gradient of coordinate k


def zigzag(H: CrookedHalfspace, P: DefinitePlane) -> Zigzag:
    P.check()
    const, lin = _affine_frame_coords(H, P)

    def solve(i, j):
        xy = np.linalg.solve(lin[[i, j]], -const[[i, j]])
        return xy

    xy_m = solve(0, 2)  # a = 0, c = 0
    xy_p = solve(0, 1)  # a = 0, b = 0
    bm, bp = P.at(*map(float, xy_m)), P.at(*map(float, xy_p))

    def ray(k, want_a_sign):
        # direction in the plane keeping coordinate k fixed
        g = lin[k]
        d = np.array([-g[1], g[0]])
        if want_a_sign * float(lin[0] @ d) < 0:
            d = -d
        vec = P.u * float(d[0]) + P.v * float(d[1])
        return vec / vec.euclidean_norm()

    return Zigzag((bm, bp), ray(2, -1), ray(1, +1))


def zigzag_rows(Z: Zigzag, ray_length: float = 10.0):
    """(t, point, stratum) rows; t is signed Euclidean arclength from the first breakpoint."""
    bm, bp = Z.breakpoints
    seg = (bp - bm).euclidean_norm()
    hinge_m, hinge_p = ("vertex", "vertex") if Z.degenerate else ("hinge_minus", "hinge_plus")
    return [
        (-ray_length, bm + Z.wing_plus_dir * ray_length, "wing_plus"),
        (0.0, bm, hinge_m),
        (seg, bp, hinge_p),
        (seg + ray_length, bp + Z.wing_minus_dir * ray_length, "wing_minus"),
    ]


def zigzag_csv(Z: Zigzag, ray_length: float = 10.0) -> str:
    out = io.StringIO()
    out.write("t,x,y,z,stratum\n")
    for t, p, label in zigzag_rows(Z, ray_length):
        out.write(",".join([fmt(t), fmt(p.x), fmt(p.y), fmt(p.z), label]) + "\n")
    return out.getvalue()


def parse_zigzag_csv(text: str):
    lines = text.strip().splitlines()
    if lines[0] != "t,x,y,z,stratum":
        raise ValueError("unexpected CSV header")
    rows = []
    for line in lines[1:]:
        t, x, y, z, label = line.split(",")
        rows.append((float(t), Vec3(float(x), float(y), float(z)), label))
    return rows


def zigzag_svg(Z: Zigzag, P: DefinitePlane, ray_length: float = 10.0, size: int = 400) -> str:
    """SVG 1.1 document with the zigzag as a single path in orthonormal plane coordinates."""
    e1, e2 = P.orthonormal_basis()
    pts = []
    for _, p, _ in zigzag_rows(Z, ray_length):
        d = p - P.point
        pts.append((float(inner(d, e1)), float(inner(d, e2))))
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)
    margin = 0.05 * span
    x0, y0 = min(xs) - margin, min(ys) - margin
    w = span + 2 * margin
    # flip y so that the plane's second axis points up
    d = " ".join(
        ("M" if k == 0 else "L") + f" {fmt(x - x0, 9)} {fmt(w - (y - y0), 9)}" for k, (x, y) in enumerate(pts)
    )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {fmt(w, 9)} {fmt(w, 9)}">\n'
        f'<path d="{d}" fill="none" stroke="black" stroke-width="{fmt(w / 200, 6)}"/>\n'
        "</svg>\n"
    )


# -- meshes ----------------------------------------------------------------


@dataclass(frozen=True)
class Box:
    lo: tuple[float, float, float]
    hi: tuple[float, float, float]

    def __post_init__(self):
        if not all(h > l for l, h in zip(self.lo, self.hi)):
            raise ValueError("clip box must have positive volume")

    @classmethod
    def around(cls, center: Vec3, half: float) -> "Box":
        c = [float(x) for x in center]
        return cls(tuple(x - half for x in c), tuple(x + half for x in c))

    def corners(self) -> np.ndarray:
        return np.array([[x, y, z] for x in (self.lo[0], self.hi[0])
                         for y in (self.lo[1], self.hi[1]) for z in (self.lo[2], self.hi[2])])


def clip_polygon(poly: list[np.ndarray], box: Box) -> list[np.ndarray]:
    """Sutherland-Hodgman clipping of a planar polygon against an axis-aligned box."""
    out = list(poly)
    for axis in range(3):
        for bound, sign in ((box.lo[axis], 1.0), (box.hi[axis], -1.0)):
            if not out:
                return out
            inp, out = out, []
            for k in range(len(inp)):
                cur, prev = inp[k], inp[k - 1]
                dc = sign * (cur[axis] - bound)
                dp = sign * (prev[axis] - bound)
                if dc >= 0:
                    if dp < 0:
                        out.append(prev + (cur - prev) * (dp / (dp - dc)))
                    out.append(cur)
                elif dp >= 0:
                    out.append(prev + (cur - prev) * (dp / (dp - dc)))
    return out


def _unit(v: Vec3) -> np.ndarray:
    a = v.to_array().astype(float)
    return a / np.linalg.norm(a)


def face_polygons(H: CrookedHalfspace, box: Box) -> list[tuple[str, list[np.ndarray]]]:
    """The four faces of the crooked plane, truncated far enough to cover the box."""
    f = H.frame
    p = H.vertex.to_array().astype(float)
    D = float(np.linalg.norm(box.corners() - p, axis=1).max())
    s, sm, sp = _unit(f.s), _unit(f.s_minus), _unit(f.s_plus)

    def reach(g1, g2):
        sin = np.linalg.norm(np.cross(g1, g2))
        return 2.0 * D / sin + 1.0

    R = reach(sm, sp)
    Rm = reach(s, sp)
    Rp = reach(s, sm)
    return [
        ("stem_future", [p, p + R * sm, p + R * (sm + sp), p + R * sp]),
        ("stem_past", [p, p - R * sp, p - R * (sm + sp), p - R * sm]),
        ("wing_minus", [p - Rm * sp, p + Rm * (s - sp), p + Rm * (s + sp), p + Rm * sp]),
        ("wing_plus", [p + Rp * sm, p + Rp * (-s + sm), p + Rp * (-s - sm), p - Rp * sm]),
    ]


@dataclass
class Mesh:
    vertices: list[tuple[float, float, float]]
    faces: list[tuple[int, int, int]]  # zero-based
    labels: list[str]

    def to_obj(self) -> str:
        out = io.StringIO()
        for v in self.vertices:
            out.write("v " + " ".join(fmt(x, 10) for x in v) + "\n")
        for fc in self.faces:
            out.write("f " + " ".join(str(i + 1) for i in fc) + "\n")
        return out.getvalue()


class _MeshBuilder:
    def __init__(self, digits: int = 9):
        self.index: dict = {}
        self.vertices: list = []
        self.faces: list = []
        self.labels: list = []
        self.digits = digits

    def vertex(self, p: np.ndarray) -> int:
        key = tuple(round(float(x), self.digits) + 0.0 for x in p)
        if key not in self.index:
            self.index[key] = len(self.vertices)
            self.vertices.append(key)
        return self.index[key]

    def triangle(self, a, b, c, label: str, n: int):
        # n x n subdivision of the triangle on a barycentric grid
        pts = {}
        for i in range(n + 1):
            for j in range(n + 1 - i):
                pts[i, j] = self.vertex(a + (b - a) * (i / n) + (c - a) * (j / n))
        for i in range(n):
            for j in range(n - i):
                self._face(pts[i, j], pts[i + 1, j], pts[i, j + 1], label)
                if i + j < n - 1:
                    self._face(pts[i + 1, j], pts[i + 1, j + 1], pts[i, j + 1], label)

    def _face(self, i, j, k, label):
        if len({i, j, k}) == 3:
            self.faces.append((i, j, k))
            self.labels.append(label)


def crooked_plane_mesh(H: CrookedHalfspace, box: Box, resolution: int = 1, builder: _MeshBuilder | None = None) -> Mesh:
    """Triangulated crooked plane clipped to the box."""
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    own = builder is None
    mb = builder or _MeshBuilder()
    for label, poly in face_polygons(H, box):
        clipped = clip_polygon(poly, box)
        for k in range(1, len(clipped) - 1):
            mb.triangle(clipped[0], clipped[k], clipped[k + 1], label, resolution)
    if own:
        return Mesh(mb.vertices, mb.faces, mb.labels)
    return None


def foliation_mesh(halfspaces, box: Box, resolution: int = 1) -> Mesh:
    mb = _MeshBuilder()
    for H in halfspaces:
        crooked_plane_mesh(H, box, resolution, mb)
    return Mesh(mb.vertices, mb.faces, mb.labels)


def vertex_path_csv(ts, points) -> str:
    out = io.StringIO()
    out.write("t,px,py,pz\n")
    for t, p in zip(ts, points):
        out.write(",".join([fmt(t), fmt(p[0]), fmt(p[1]), fmt(p[2])]) + "\n")
    return out.getvalue()
