"""Pointed pseudo-triangulations of planar point sets.

Exact-arithmetic toolkit: construction, validation, exhaustive enumeration
and counting at small n, bar-joint rigidity analysis of the pointed case,
and deterministic SVG rendering.  All predicates and linear algebra run on
Python integers and Fractions; nothing here uses floating point.
"""

from .construct import canonical_ppt, complete_to_ppt
from .enumeration import (
    BRUTE_FORCE_ALL_LIMIT,
    BRUTE_FORCE_PPT_LIMIT,
    DEFAULT_LIMIT,
    CountReport,
    brute_force_all_pseudo_triangulations,
    brute_force_maximal_pointed,
    check_conjecture,
    enumerate_ppt,
    enumerate_triangulations,
    flip,
    min_max_degree,
)
from .errors import (
    CrossingEdges,
    DisconnectedGraph,
    FileFormatError,
    HullEdgeNotFlippable,
    InvalidPointSet,
    IsolatedVertex,
    LimitExceeded,
    NotAHullEdge,
    NotAPPT,
    NotAPseudoTriangulation,
    NotPointedInput,
    PseudoTriError,
    UnexpectedDofCount,
)
from .fileio import (
    load_graph,
    parse_edges,
    parse_points,
    read_edges,
    read_points,
    write_edges,
    write_points,
)
from .geometry import Point, PointSet, convex_hull, cross, is_pointed_at, orientation, segments_cross
from .randgen import SplitMix64, random_point_set
from .render import render_svg
from .rigidity import (
    ExpansiveReport,
    Motion,
    RigidityMatrix,
    is_expansive,
    is_infinitesimally_rigid,
    mechanism_motion,
    rank,
    rigidity_matrix,
)
from .subdivision import (
    Face,
    GeomGraph,
    PseudoTriangulation,
    ValidationReport,
    edge_key,
    extract_faces,
    is_pointed_vertex,
    is_pseudo_triangle,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Point",
    "PointSet",
    "cross",
    "orientation",
    "segments_cross",
    "convex_hull",
    "is_pointed_at",
    "GeomGraph",
    "Face",
    "PseudoTriangulation",
    "ValidationReport",
    "edge_key",
    "extract_faces",
    "is_pseudo_triangle",
    "is_pointed_vertex",
    "validate",
    "canonical_ppt",
    "complete_to_ppt",
    "flip",
    "enumerate_ppt",
    "enumerate_triangulations",
    "brute_force_maximal_pointed",
    "brute_force_all_pseudo_triangulations",
    "check_conjecture",
    "min_max_degree",
    "CountReport",
    "DEFAULT_LIMIT",
    "BRUTE_FORCE_PPT_LIMIT",
    "BRUTE_FORCE_ALL_LIMIT",
    "RigidityMatrix",
    "Motion",
    "ExpansiveReport",
    "rigidity_matrix",
    "rank",
    "is_infinitesimally_rigid",
    "mechanism_motion",
    "is_expansive",
    "render_svg",
    "SplitMix64",
    "random_point_set",
    "parse_points",
    "read_points",
    "write_points",
    "parse_edges",
    "read_edges",
    "write_edges",
    "load_graph",
    "PseudoTriError",
    "InvalidPointSet",
    "FileFormatError",
    "CrossingEdges",
    "DisconnectedGraph",
    "IsolatedVertex",
    "NotAPseudoTriangulation",
    "NotAPPT",
    "NotPointedInput",
    "HullEdgeNotFlippable",
    "NotAHullEdge",
    "UnexpectedDofCount",
    "LimitExceeded",
]
