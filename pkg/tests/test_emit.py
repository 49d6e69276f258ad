import numpy as np
import pytest

from crooked.emit import (
    Box,
    DefinitePlane,
    Mesh,
    clip_polygon,
    crooked_plane_mesh,
    fmt,
    foliation_mesh,
    parse_zigzag_csv,
    vertex_path_csv,
    zigzag,
    zigzag_csv,
    zigzag_rows,
    zigzag_svg,
)
from crooked.halfspace import CrookedHalfspace, Stratum, stratum
from crooked.minkowski import ORIGIN, Vec3

from generators import V, random_halfspace, random_isometry

H0 = CrookedHalfspace(ORIGIN, Vec3(1.0, 0.0, 0.0))
OFFSET_PLANE = DefinitePlane(Vec3(0.0, 1.0, 1.0), Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.5))


def test_fmt():
    assert fmt(-0.0) == "0" and fmt(1.0) == "1" and fmt(1 / 3) == "0.333333333333"


def test_definite_plane_validation():
    with pytest.raises(ValueError):
        zigzag(H0, DefinitePlane(ORIGIN, Vec3(1.0, 0.0, 0.0), Vec3(0.0, 0.0, 1.0)))
    with pytest.raises(ValueError):
        zigzag(H0, DefinitePlane(ORIGIN, Vec3(1.0, 0.0, 0.0), Vec3(2.0, 0.0, 0.0)))


def test_zigzag_breakpoints_on_hinges():
    Z = zigzag(H0, OFFSET_PLANE)
    assert not Z.degenerate
    bm, bp = Z.breakpoints
    assert stratum(H0, bm) is Stratum.HINGE_MINUS and stratum(H0, bp) is Stratum.HINGE_PLUS


def test_zigzag_through_vertex_is_degenerate():
    Z = zigzag(H0, DefinitePlane(ORIGIN, Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0)))
    assert Z.degenerate
    assert [r[2] for r in zigzag_rows(Z)][1:3] == ["vertex", "vertex"]


def test_zigzag_segment_labels_match_strata():
    rng = np.random.default_rng(3)
    for _ in range(50):
        H = random_halfspace(rng, scale=1.0)
        M = random_isometry(rng)
        P = DefinitePlane(V(rng.normal(size=3)), V(M @ [1.0, 0, 0]), V(M @ [0, 1.0, 0]))
        Z = zigzag(H, P)
        bm, bp = Z.breakpoints
        assert stratum(H, bm + Z.wing_plus_dir * 3.0) is Stratum.WING_PLUS
        assert stratum(H, bp + Z.wing_minus_dir * 3.0) is Stratum.WING_MINUS
        if not Z.degenerate:
            assert stratum(H, bm * 0.5 + bp * 0.5) is Stratum.STEM_FACE


def test_csv_round_trip():
    Z = zigzag(H0, OFFSET_PLANE)
    rows = parse_zigzag_csv(zigzag_csv(Z))
    for (t, p, label), (t2, p2, label2) in zip(rows, zigzag_rows(Z)):
        assert label == label2 and abs(t - t2) < 1e-12 and (p - p2).max_abs() < 1e-10


def test_svg_single_path():
    svg = zigzag_svg(zigzag(H0, OFFSET_PLANE), OFFSET_PLANE)
    assert svg.count("<path") == 1 and svg.startswith("<?xml")


def test_clip_polygon():
    square = [np.array(p, dtype=float) for p in ([-2, -2, 0], [2, -2, 0], [2, 2, 0], [-2, 2, 0])]
    out = clip_polygon(square, Box((-1, -1, -1), (1, 1, 1)))
    assert sorted(map(tuple, np.round(out, 12))) == sorted([(-1, -1, 0), (1, -1, 0), (1, 1, 0), (-1, 1, 0)])
    assert clip_polygon(square, Box((5, 5, 5), (6, 6, 6))) == []
    with pytest.raises(ValueError):
        Box((0, 0, 0), (1, 0, 1))


def test_mesh_vertices_on_plane_and_in_box():
    rng = np.random.default_rng(4)
    H = random_halfspace(rng)
    box = Box.around(H.vertex, 3.0)
    m = crooked_plane_mesh(H, box, resolution=3)
    assert set(m.labels) == {"stem_future", "stem_past", "wing_minus", "wing_plus"}
    for v in m.vertices:
        q = Vec3(*v)
        # coordinates are rounded to 9 digits, so a relative test is meaningless at the vertex
        if (q - H.vertex).euclidean_norm() > 1e-6:
            assert stratum(H, q, eps=1e-7).on_boundary
        assert all(lo - 1e-9 <= x <= hi + 1e-9 for x, lo, hi in zip(v, box.lo, box.hi))


def test_mesh_is_deterministic():
    box = Box.around(ORIGIN, 2.0)
    a, b = crooked_plane_mesh(H0, box, 2), crooked_plane_mesh(H0, box, 2)
    assert a.to_obj() == b.to_obj()
    assert len(a.vertices) == len(b.vertices)
    with pytest.raises(ValueError):
        crooked_plane_mesh(H0, box, 0)


def test_obj_format():
    m = Mesh([(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)], [(0, 1, 2)], ["x"])
    assert m.to_obj() == "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"


def test_foliation_mesh_shares_builder():
    box = Box.around(ORIGIN, 2.0)
    Hs = [H0, H0.translate(H0.frame.s_minus - H0.frame.s_plus)]
    m = foliation_mesh(Hs, box)
    assert len(m.faces) == sum(len(crooked_plane_mesh(H, box).faces) for H in Hs)


def test_vertex_path_csv():
    text = vertex_path_csv([0.0, 1.0], np.array([[0.0, -0.0, 1.0], [2.0, 0.5, 0.0]]))
    assert text == "t,px,py,pz\n0,0,0,1\n1,2,0.5,0\n"
