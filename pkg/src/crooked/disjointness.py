"""Disjointness of crooked halfspaces and crooked planes.

Two closed halfspaces H(p1, s1), H(p2, s2) with consistently oriented
directors are disjoint iff p1 - p2 lies in the interior of the cone
V(s1) - V(s2); the open halfspaces are disjoint iff it lies in the closure.
The classical inequalities on the vertex offset (the "dg" test) give an independent test for the planes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cone import TranslationCone, cone_contains, cone_contains_lp
from .halfspace import CrookedHalfspace, semigroup_contains
from .hyperbolic import GeodesicRelation, consistently_oriented, parallel, relation
from .minkowski import DEFAULT_EPS, Vec3, cross, inner, null_frame


class NotConsistentlyOriented(ValueError):
    pass


def _euclid_dot(u: Vec3, v: Vec3) -> float:
    return float(u.x * v.x + u.y * v.y + u.z * v.z)


def allowable_cone(s1: Vec3, s2: Vec3, eps: float = DEFAULT_EPS, exact: bool = False) -> TranslationCone:
    """Closure of A(s1, s2), generated by s1-, -s1+, -s2-, s2+.

    In the asymptotic case two generators point along the same null ray and
    are merged, leaving three.
    """
    if not consistently_oriented(s1, s2, eps):
        raise NotConsistentlyOriented("allowable cone needs consistently oriented directors")
    f1, f2 = null_frame(s1, exact=exact), null_frame(s2, exact=exact)
    gens: list[Vec3] = []
    for g in (f1.s_minus, -f1.s_plus, -f2.s_minus, f2.s_plus):
        if any(parallel(g, h, 1e-9) and _euclid_dot(g, h) > 0 for h in gens):
            continue
        gens.append(g)
    return TranslationCone(tuple(gens))


def _equal_geodesic_disjoint(H1: CrookedHalfspace, H2: CrookedHalfspace, closed: bool, eps: float) -> bool:
    if float(inner(H1.director, H2.director)) > 0:
        # same director: both contain every point far along +s
        return False
    if closed:
        # the closure of H(p1, s) always meets the closure of the complement side
        return False
    # open H(p1, s) misses open H(p2, -s) iff H(p1, s) sits inside closed H(p2, s)
    return semigroup_contains(H1, H1.vertex - H2.vertex, eps=eps)


def halfspaces_disjoint(H1: CrookedHalfspace, H2: CrookedHalfspace, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    """Disjointness of the closed (default) or open halfspaces."""
    if parallel(H1.director, H2.director, eps):
        return _equal_geodesic_disjoint(H1, H2, closed, eps)
    if not consistently_oriented(H1.director, H2.director, eps):
        return False
    C = allowable_cone(H1.director, H2.director, eps)
    return cone_contains(C, H1.vertex - H2.vertex, interior=closed, eps=eps)


def halfspaces_disjoint_lp(H1: CrookedHalfspace, H2: CrookedHalfspace, closed: bool = True, eps: float = DEFAULT_EPS) -> bool:
    """Same as halfspaces_disjoint but with the coefficient (LP) cone test."""
    if parallel(H1.director, H2.director, eps):
        return _equal_geodesic_disjoint(H1, H2, closed, eps)
    if not consistently_oriented(H1.director, H2.director, eps):
        return False
    C = allowable_cone(H1.director, H2.director, eps)
    return cone_contains_lp(C, H1.vertex - H2.vertex, interior=closed, eps=eps)


def _asymptotic_pairing(s1: Vec3, s2: Vec3, eps: float) -> int:
    """+1 if s1- and s2+ span the same null ray, -1 if s2- and s1+ do."""
    f1, f2 = null_frame(s1), null_frame(s2)
    if parallel(f1.s_minus, f2.s_plus, eps):
        return 1
    if parallel(f2.s_minus, f1.s_plus, eps):
        return -1
    raise ValueError("directors are not asymptotic")


def planes_disjoint_dg(p1: Vec3, s1: Vec3, p2: Vec3, s2: Vec3, eps: float = DEFAULT_EPS) -> bool:
    """Classical vertex-offset inequalities for disjoint crooked planes.

    The asymptotic inequalities are stated for s1- = s2+; when instead
    s2- = s1+ the roles of the two planes are exchanged.
    """
    if not consistently_oriented(s1, s2, eps):
        raise NotConsistentlyOriented("dg test needs consistently oriented directors")
    rel = relation(s1, s2, eps)
    if rel is GeodesicRelation.ULTRAPARALLEL:
        d = p2 - p1
        lhs = float(inner(d, cross(s1, s2)))
        rhs = abs(float(inner(d, s1))) + abs(float(inner(d, s2)))
        tol = eps * max(1.0, d.euclidean_norm()) * max(1.0, cross(s1, s2).euclidean_norm())
        return lhs - rhs > tol
    if rel is GeodesicRelation.ASYMPTOTIC:
        if _asymptotic_pairing(s1, s2, 1e-6) < 0:
            p1, s1, p2, s2 = p2, s2, p1, s1
        f1, f2 = null_frame(s1), null_frame(s2)
        d = p2 - p1
        tol = eps * max(1.0, d.euclidean_norm())
        return (
            float(inner(d, s1)) < -tol
            and float(inner(d, s2)) < -tol
            and float(inner(d, cross(f1.s_plus, f2.s_minus))) > tol
        )
    raise ValueError(f"dg test undefined for {rel.value} directors")


@dataclass
class DisjointnessReport:
    relation: GeodesicRelation
    consistent: bool
    cone_result: bool
    open_result: bool
    lp_result: bool
    dg_result: bool | None = None
    oracle_result: bool | None = None
    witness: Vec3 | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def disagreement(self) -> bool:
        verdicts = [self.cone_result, self.lp_result]
        if self.dg_result is not None:
            verdicts.append(self.dg_result)
        if self.oracle_result is not None:
            verdicts.append(self.oracle_result)
        return len(set(verdicts)) > 1

    def as_record(self) -> dict:
        return {
            "relation": self.relation.value,
            "consistent": self.consistent,
            "closed_disjoint": self.cone_result,
            "open_disjoint": self.open_result,
            "lp": self.lp_result,
            "dg": self.dg_result,
            "oracle": self.oracle_result,
            "witness": None if self.witness is None else [float(x) for x in self.witness],
            "agree": not self.disagreement,
        }


def disjointness_report(
    H1: CrookedHalfspace,
    H2: CrookedHalfspace,
    oracle_samples: int = 0,
    seed: int = 0,
    eps: float = DEFAULT_EPS,
) -> DisjointnessReport:
    """Run every available test on the closed halfspaces and collect the verdicts."""
    from .oracle import OracleConfig, halfspace_pair_oracle

    rel = relation(H1.director, H2.director, eps)
    consistent = consistently_oriented(H1.director, H2.director, eps)
    report = DisjointnessReport(
        relation=rel,
        consistent=consistent,
        cone_result=halfspaces_disjoint(H1, H2, True, eps),
        open_result=halfspaces_disjoint(H1, H2, False, eps),
        lp_result=halfspaces_disjoint_lp(H1, H2, True, eps),
    )
    if consistent and rel in (GeodesicRelation.ULTRAPARALLEL, GeodesicRelation.ASYMPTOTIC):
        report.dg_result = planes_disjoint_dg(H1.vertex, H1.director, H2.vertex, H2.director, eps)
    elif rel is GeodesicRelation.EQUAL:
        report.notes.append("equal geodesics: decided in the shared frame")
    if oracle_samples > 0:
        res = halfspace_pair_oracle(H1, H2, OracleConfig(samples=oracle_samples, seed=seed), eps=eps)
        report.oracle_result = res.disjoint
        report.witness = res.witness
    elif not report.cone_result:
        report.witness = halfspace_pair_oracle(H1, H2, OracleConfig(samples=0, seed=seed), sample=False, eps=eps).witness
    return report
