"""Crooked planes, crooked halfspaces and their linearization in 2+1 Minkowski space."""

from .minkowski import (
    DEFAULT_EPS,
    ORIGIN,
    AffineMap,
    CausalClass,
    NullFrame,
    Vec3,
    boost,
    classify,
    cross,
    det3,
    from_frame,
    homothety,
    inner,
    null_frame,
    rho,
    spine_reflection,
    stem_particle_reflection,
    to_frame,
)
from .hyperbolic import GeodesicRelation, Halfplane, HPoint, consistently_oriented, halfplanes_disjoint, hp_contains, relation
from .cone import TranslationCone, cone_contains, cone_contains_lp
from .halfspace import (
    CrookedHalfspace,
    Stratum,
    complement,
    contains,
    linearize,
    semigroup_contains,
    stem_quadrant,
    stratum,
    transform,
)
from .lines import Line, line_in_halfspace, particle_halfplane, particle_through
from .disjointness import allowable_cone, disjointness_report, halfspaces_disjoint, planes_disjoint_dg
from .symmetry import AutomorphismParams, OrbitCoordinate, canonicalize, fixed_ray, global_slice, phi
from .foliation import CoefficientPath, CrookedFoliation, DirectorPath, certify_foliation, locate, vertex_path

__version__ = "0.1.0"
