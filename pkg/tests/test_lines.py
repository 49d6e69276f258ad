from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crooked.halfspace import CrookedHalfspace
from crooked.lines import Line, direction_in_halfplane, line_in_halfspace, particle_halfplane, particle_through
from crooked.minkowski import ORIGIN, Vec3, to_frame
from crooked.oracle import line_oracle

from generators import OPEN_PATTERNS, point_with_pattern, random_halfspace

H0 = CrookedHalfspace(ORIGIN, Vec3(1.0, 0.0, 0.0))


def direction(H, a, b, c):
    return H.point(a, b, c) - H.vertex


def test_containment_examples():
    assert line_in_halfspace(Line(H0.vertex, direction(H0, 1, 1, 1)), H0, closed=True)
    assert not line_in_halfspace(Line(H0.vertex, direction(H0, 1, -1, 1)), H0, closed=True)
    hinge = Line(*H0.hinge_minus)
    assert line_in_halfspace(hinge, H0, closed=True)
    assert not line_in_halfspace(hinge, H0, closed=False)


def test_direction_examples():
    u = direction(H0, 1, 2, 1)
    assert direction_in_halfplane(H0, u)
    assert line_in_halfspace(particle_through(H0, H0.point(1, 1, 1)), H0)
    # future timelike with a < 0: points against the director
    w = direction(H0, -1, 2, 1)
    assert w.z > 0 and not direction_in_halfplane(H0, w)
    assert not line_in_halfspace(Line(H0.point(0, 1, -1), w), H0)
    t = direction(H0, 0, 1, 1)
    assert direction_in_halfplane(H0, t, closed=True) and not direction_in_halfplane(H0, t, closed=False)


def test_particle_through_examples():
    d = to_frame(particle_through(H0, H0.point(0, 1, -1)).dir, H0.frame)
    assert tuple(d) == pytest.approx((0.5, 1, 1), abs=1e-12)
    d = to_frame(particle_through(H0, H0.point(1, 2, 0)).dir, H0.frame)
    assert tuple(d) == pytest.approx((1, 1, 2), abs=1e-12)


def test_particle_through_rejects_outside_points():
    with pytest.raises(ValueError):
        particle_through(H0, H0.point(-1, 1, 1))


def test_particle_halfplane_is_linearization():
    assert particle_halfplane(H0).s == H0.director


@given(st.integers(0, 2**32 - 1), st.booleans())
def test_line_criterion_matches_oracle(seed, closed):
    rng = np.random.default_rng(seed)
    H = random_halfspace(rng, scale=1.0)
    d = direction(H, *rng.normal(size=3))
    base = point_with_pattern(H, rng, tuple(rng.integers(-1, 2, size=3)))
    line = Line(base, d)
    assert line_in_halfspace(line, H, closed) == line_oracle(line, H, closed)[0]


small = st.integers(-2, 2).map(Fraction)


@given(small, small, small, small, small, small, st.booleans())
def test_line_criterion_exact_degenerate(a, b, c, al, be, ga, closed):
    # rational frame data with many zeros: lines through hinges, the spine, wings
    H = CrookedHalfspace.exact(Vec3(Fraction(1, 3), Fraction(0), Fraction(-1)), Vec3(Fraction(5, 4), Fraction(0), Fraction(3, 4)))
    d = direction(H, al, be, ga)
    if d.is_zero():
        return
    line = Line(H.point(a, b, c), d)
    assert line_in_halfspace(line, H, closed, eps=0) == line_oracle(line, H, closed)[0]


def test_particle_through_random():
    rng = np.random.default_rng(9)
    for k in range(100):
        H = random_halfspace(rng)
        q = point_with_pattern(H, rng, OPEN_PATTERNS[k % len(OPEN_PATTERNS)])
        L = particle_through(H, q)
        assert L.is_particle and line_in_halfspace(L, H)


def test_canonical_base():
    L = Line(Vec3(1.0, 2.0, 3.0), Vec3(0.0, 0.0, 2.0)).canonical()
    assert L.base == Vec3(1.0, 2.0, 0.0)
    with pytest.raises(ValueError):
        Line(ORIGIN, ORIGIN)
