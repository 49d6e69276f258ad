from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crooked.halfspace import (
    CrookedHalfspace,
    Stratum,
    complement,
    contains,
    contains_inner_form,
    contains_many,
    linearize,
    octant_contains,
    semigroup_contains,
    stratum,
    transform,
)
from crooked.minkowski import ORIGIN, Vec3, boost, homothety, rho

from generators import OPEN_PATTERNS, V, point_with_pattern, random_halfspace

H0 = CrookedHalfspace(ORIGIN, Vec3(1.0, 0.0, 0.0))
small = st.integers(-3, 3)


def test_membership_examples():
    assert contains(H0, H0.point(1, 1, 0))
    assert not contains(H0, H0.vertex) and contains(H0, H0.vertex, closed=True)
    q = H0.point(-1, 5, 1)
    assert not contains(H0, q) and not contains(H0, q, closed=True)


@pytest.mark.parametrize("abc,expected", [
    ((0, 3, 0), Stratum.HINGE_MINUS),
    ((0, -3, 0), Stratum.HINGE_MINUS),
    ((0, 0, 2), Stratum.HINGE_PLUS),
    ((2, 0, 7), Stratum.WING_MINUS),
    ((-2, 7, 0), Stratum.WING_PLUS),
    ((0, 2, 2), Stratum.STEM_FACE),
    ((0, -2, -2), Stratum.STEM_FACE),
    ((0, 0, 0), Stratum.VERTEX),
    ((0, 1, -1), Stratum.OPEN_INTERIOR),
    ((0, -1, 1), Stratum.EXTERIOR),
    ((1, -1, 4), Stratum.EXTERIOR),
])
def test_strata(abc, expected):
    assert stratum(H0, H0.point(*abc)) is expected


@given(small, small, small)
def test_strata_partition_closed_halfspace(a, b, c):
    H = CrookedHalfspace.exact(ORIGIN, Vec3(Fraction(1), Fraction(0), Fraction(0)))
    q = H.point(Fraction(a), Fraction(b), Fraction(c))
    st_ = stratum(H, q, eps=0)
    assert contains(H, q, eps=0) == (st_ is Stratum.OPEN_INTERIOR)
    assert contains(H, q, closed=True, eps=0) == (st_ is not Stratum.EXTERIOR)


@given(small, small, small, st.booleans())
def test_octant_form_matches_inner_form(a, b, c, closed):
    H = CrookedHalfspace.exact(Vec3(Fraction(1, 2), 0, 3), Vec3(Fraction(5, 4), Fraction(0), Fraction(3, 4)))
    q = H.point(Fraction(a), Fraction(b), Fraction(c))
    assert contains(H, q, closed, eps=0) == contains_inner_form(H, q, closed, eps=0)


@given(small, small, small)
def test_open_halfspace_and_complement_partition_space(a, b, c):
    q = H0.point(a, b, c)
    Hc = complement(H0)
    inside, outside = contains(H0, q), contains(Hc, q)
    assert not (inside and outside)
    on_plane = stratum(H0, q).on_boundary
    assert inside or outside or on_plane
    assert on_plane == stratum(Hc, q).on_boundary


def test_contains_many_matches_scalar():
    rng = np.random.default_rng(5)
    H = random_halfspace(rng)
    pts = np.array([point_with_pattern(H, rng, tuple(rng.integers(-1, 2, size=3))).to_array() for _ in range(400)])
    for closed in (False, True):
        vec = contains_many(H, pts, closed)
        assert list(vec) == [contains(H, V(p), closed) for p in pts]


def test_semigroup_examples():
    f = H0.frame
    assert semigroup_contains(H0, f.s_minus) and not semigroup_contains(H0, f.s_minus, relative_interior=True)
    v = f.s_minus - f.s_plus
    assert semigroup_contains(H0, v) and semigroup_contains(H0, v, relative_interior=True)
    assert not semigroup_contains(H0, f.s)


def test_semigroup_translates_inside():
    rng = np.random.default_rng(6)
    for _ in range(30):
        H = random_halfspace(rng)
        v = H.frame.s_minus * rng.uniform(0, 2) - H.frame.s_plus * rng.uniform(0, 2)
        for pattern in OPEN_PATTERNS:
            q = point_with_pattern(H, rng, pattern)
            assert contains(H, q + v)


def test_complement_example():
    q = H0.point(1, 1, 0)
    assert contains(H0, q) and not contains(complement(H0), q)
    assert complement(complement(H0)).director == H0.director


def test_linearization_ignores_vertex():
    w = Vec3(1.0, -2.0, 0.5)
    assert linearize(H0) == linearize(H0.translate(w))


def test_transform_by_automorphisms_fixes_halfspace():
    f = H0.frame
    for g in (boost(0.8, f), homothety(0.3), rho(f)):
        H = transform(H0, g)
        assert H.vertex == H0.vertex
        assert (H.director - H0.director).max_abs() < 1e-12


def test_transform_maps_points_consistently():
    rng = np.random.default_rng(8)
    H = random_halfspace(rng)
    g = boost(0.5, CrookedHalfspace(ORIGIN, Vec3(0.0, 1.0, 0.0)).frame)
    gH = transform(H, g)
    for pattern in OPEN_PATTERNS:
        q = point_with_pattern(H, rng, pattern)
        assert contains(gH, g(q))


def test_rejects_bad_director():
    with pytest.raises(ValueError):
        CrookedHalfspace(ORIGIN, Vec3(0.0, 0.0, 1.0))
