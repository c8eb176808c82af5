"""Exact matroid polytope subdivisions and the valuations they respect."""

from .catalog import generate_u_a_ab, octahedron_subdivision, table2_matroids, u36_subdivision
from .errors import *  # noqa: F401,F403
from .formal import FormalSum, Polynomial2, UniPoly
from .geometry import (
    FaceLattice,
    HPolytope,
    VPolytope,
    ehrhart_polynomial,
    enumerate_faces,
    matroid_polytope_h,
    matroid_polytope_vertices,
    normalized_volume,
)
from .matroid import (
    ActivityRecord,
    Matroid,
    SubsetRankPair,
    activities,
    matroid_from_bases,
    rank,
    relabel,
    schubert,
    uniform,
)
from .poset import Poset
from .serialization import load_matroid, load_subdivision
from .subdivision import (
    Subdivision,
    face_poset,
    interior_faces,
    intersection_lattice,
    topology_check,
    validate_subdivision,
    verify_valuation,
)
from .valuations import (
    basis_count,
    constant,
    ehrhart,
    f_activities,
    f_rank,
    g_bei,
    g_derksen,
    h_flags,
    i_x,
    pbei_intersects,
    qs_bjr,
    rank_indicator,
    tutte,
    volume,
)

__version__ = "0.1.0"
