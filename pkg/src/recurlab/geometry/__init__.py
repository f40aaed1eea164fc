"""Exact planar geometry: the brute-force oracle for the region counts.

Everything here is integer/rational arithmetic on homogeneous coordinates;
there is no floating point and hence no epsilon anywhere.  The package
selects a compiled intersection kernel at import when available (see
``KERNEL_BACKEND``); the pure-Python fallback is bit-identical.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .arrangement import (
    ChordArrangement,
    DegeneracyReport,
    GeometricVerdict,
    InteriorPoint,
    RegionReport,
    arrangement_to_json_dict,
    build_arrangement,
    count_regions,
    generic_arrangement,
    hexagon_arrangement,
    intersect_chords,
    place_points,
    verify_against_formula,
)
from .facewalk import count_faces
from .points import (
    CirclePoint,
    antipode_parameter,
    generic_parameters,
    hexagon_parameters,
    parse_parameter,
    regular_approx_parameters,
    seeded_parameters,
)

__all__ = [
    "KERNEL_BACKEND",
    "ChordArrangement",
    "CirclePoint",
    "DegeneracyReport",
    "GeometricVerdict",
    "InteriorPoint",
    "RegionReport",
    "antipode_parameter",
    "arrangement_to_json_dict",
    "build_arrangement",
    "count_faces",
    "count_regions",
    "generic_arrangement",
    "generic_parameters",
    "hexagon_arrangement",
    "hexagon_parameters",
    "intersect_chords",
    "parse_parameter",
    "place_points",
    "regular_approx_parameters",
    "seeded_parameters",
    "verify_against_formula",
]
