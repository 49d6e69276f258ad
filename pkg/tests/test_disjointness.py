import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crooked.disjointness import (
    NotConsistentlyOriented,
    allowable_cone,
    disjointness_report,
    halfspaces_disjoint,
    halfspaces_disjoint_lp,
    planes_disjoint_dg,
)
from crooked.halfspace import CrookedHalfspace, complement, contains
from crooked.hyperbolic import GeodesicRelation
from crooked.minkowski import ORIGIN, Vec3
from crooked.oracle import OracleConfig, halfspace_pair_oracle

from generators import consistent_pair, offset_pair

S1 = Vec3(-1.0, 0.0, 0.0)
S2 = Vec3(math.cosh(1.0), 0.0, math.sinh(1.0))
S2_ASYM = Vec3(1.0, 1.0, 1.0)


def _gen_sum(s1, s2):
    g = allowable_cone(s1, s2).generators
    out = g[0]
    for x in g[1:]:
        out = out + x
    return out


def test_same_vertex_touches():
    H1, H2 = CrookedHalfspace(ORIGIN, S1), CrookedHalfspace(ORIGIN, S2)
    assert halfspaces_disjoint(H1, H2, closed=False)
    assert not halfspaces_disjoint(H1, H2, closed=True)


@pytest.mark.parametrize("s2", [S2, S2_ASYM])
def test_generator_sum_offsets(s2):
    g = _gen_sum(S1, s2)
    H2 = CrookedHalfspace(Vec3(0.5, -1.0, 2.0), s2)
    H1 = CrookedHalfspace(H2.vertex + g, S1)
    assert halfspaces_disjoint(H1, H2)
    assert halfspace_pair_oracle(H1, H2).disjoint
    H1 = CrookedHalfspace(H2.vertex - g, S1)
    r = disjointness_report(H1, H2)
    assert not r.cone_result
    assert r.witness is not None
    assert contains(H1, r.witness, closed=True) and contains(H2, r.witness, closed=True)


def test_dg_worked_example():
    assert planes_disjoint_dg(ORIGIN, S1, Vec3(0.0, 1.0, 0.0), S2)
    assert not planes_disjoint_dg(ORIGIN, S1, ORIGIN, S2)
    assert not planes_disjoint_dg(ORIGIN, S1, Vec3(0.0, -1.0, 0.0), S2)


@pytest.mark.parametrize("y", [1.0, -1.0, 0.0])
def test_dg_matches_cone_on_worked_example(y):
    p2 = Vec3(0.0, y, 0.0)
    H1, H2 = CrookedHalfspace(ORIGIN, S1), CrookedHalfspace(p2, S2)
    assert halfspaces_disjoint(H1, H2) == planes_disjoint_dg(ORIGIN, S1, p2, S2) == (y > 0)


def test_dg_needs_consistent_orientation():
    with pytest.raises(NotConsistentlyOriented):
        planes_disjoint_dg(ORIGIN, S1, ORIGIN, -S2)
    with pytest.raises(NotConsistentlyOriented):
        allowable_cone(S1, -S2)


def test_crossing_pair_reports_witness():
    H1 = CrookedHalfspace(ORIGIN, Vec3(1.0, 0.0, 0.0))
    H2 = CrookedHalfspace(Vec3(5.0, 5.0, 0.0), Vec3(0.0, 1.0, 0.0))
    r = disjointness_report(H1, H2, oracle_samples=2000)
    assert r.relation is GeodesicRelation.CROSSING
    assert not r.consistent and not r.cone_result and r.dg_result is None
    assert not r.disagreement and r.witness is not None


def test_asymptotic_report_uses_dg():
    H1, H2 = CrookedHalfspace(ORIGIN, S1), CrookedHalfspace(-_gen_sum(S1, S2_ASYM), S2_ASYM)
    r = disjointness_report(H1, H2, oracle_samples=2000)
    assert r.relation is GeodesicRelation.ASYMPTOTIC
    assert r.dg_result is True and r.cone_result is True and not r.disagreement


def test_equal_geodesics():
    s = Vec3(0.0, 1.0, 0.0)
    H = CrookedHalfspace(ORIGIN, s)
    assert not halfspaces_disjoint(H, CrookedHalfspace(Vec3(3.0, 0.0, 0.0), s), closed=False)
    assert not halfspaces_disjoint(H, complement(H), closed=True)
    assert halfspaces_disjoint(H, complement(H), closed=False)
    v = H.frame.s_minus - H.frame.s_plus
    # H translated into itself: the complement of the inner one meets H
    inner_H = H.translate(v)
    assert halfspaces_disjoint(inner_H, complement(H), closed=False)
    assert not halfspaces_disjoint(H, complement(inner_H), closed=False)


@given(st.integers(0, 2**32 - 1), st.sampled_from(["u", "a"]))
def test_all_methods_agree(seed, kind):
    rng = np.random.default_rng(seed)
    H1, H2 = offset_pair(rng, kind)
    r = disjointness_report(H1, H2, oracle_samples=1000, seed=seed)
    assert not r.disagreement, r.as_record()


@given(st.integers(0, 2**32 - 1))
def test_open_disjointness_is_weaker(seed):
    rng = np.random.default_rng(seed)
    H1, H2 = offset_pair(rng, "u")
    if halfspaces_disjoint(H1, H2, closed=True):
        assert halfspaces_disjoint(H1, H2, closed=False)
    assert halfspaces_disjoint(H1, H2, closed=False) == halfspaces_disjoint_lp(H1, H2, closed=False)


def test_disjointness_is_symmetric():
    rng = np.random.default_rng(12)
    for _ in range(50):
        H1, H2 = offset_pair(rng, "u")
        assert halfspaces_disjoint(H1, H2) == halfspaces_disjoint(H2, H1)


def test_report_record_keys():
    H1, H2 = CrookedHalfspace(ORIGIN, S1), CrookedHalfspace(ORIGIN, S2)
    rec = disjointness_report(H1, H2).as_record()
    assert list(rec) == ["relation", "consistent", "closed_disjoint", "open_disjoint", "lp", "dg", "oracle", "witness", "agree"]
