"""recurlab: exact inference, solving, and verification of linear recurrences.

The pipeline, all in exact rational arithmetic:

1. ``difference_engine``: build the successive-difference table of a
   sequence; a constant row certifies a monic linear recurrence with
   constant right-hand side.
2. ``recurrence_solver``: closed form via the characteristic polynomial,
   resonance-aware undetermined coefficients, and exact elimination.
3. ``genfunc_solver``: the same closed form by an independent route —
   ordinary generating function, partial fractions, coefficient
   extraction.
4. ``moser_formulas`` and ``geometry``: the verified corpus.  The circle-
   division counts f(m) = 1 + C(m,2) + C(m,4) are checked four ways,
   including a brute-force exact-geometry oracle that actually draws the
   chords and counts regions via Euler's formula.

The ``recurlab`` command line (see ``recurlab --help``) exposes the same
pipeline with JSON and human output.
"""

from .core_numeric import (
    NEG_INFINITY,
    Polynomial,
    Rational,
    as_rational,
    binomial,
    binomial_rising,
    format_polynomial,
    format_rational,
    parse_rational,
)
from .difference_engine import (
    DifferenceTable,
    LinearRecurrence,
    Sequence,
    build_difference_table,
    infer_recurrence,
    iterate_recurrence,
    predict_next,
)
from .errors import (
    DegeneracyBudgetError,
    NoConstantRowError,
    RecurlabError,
    SingularMatrixError,
    UnsupportedRootsError,
)
from .genfunc_solver import (
    PartialFractionForm,
    RationalFunction,
    build_ogf,
    extract_coefficient_formula,
    partial_fractions,
    series_expand,
)
from .geometry import (
    KERNEL_BACKEND,
    ChordArrangement,
    CirclePoint,
    GeometricVerdict,
    RegionReport,
    build_arrangement,
    count_faces,
    count_regions,
    hexagon_arrangement,
    intersect_chords,
    place_points,
    verify_against_formula,
)
from .moser_formulas import (
    EulerCounts,
    chord_count,
    euler_counts,
    intersection_count,
    moser_polynomial,
    moser_terms,
    regions_binomial,
    regions_binomial_sum,
    regions_polynomial,
)
from .recurrence_solver import (
    ClosedForm,
    ExactMatrix,
    RootMultiplicity,
    characteristic_polynomial,
    gaussian_solve,
    particular_solution,
    rational_roots,
    solve_charpoly,
    to_moser_variable,
)

__version__ = "0.1.0"

__all__ = [
    "NEG_INFINITY",
    "Polynomial",
    "Rational",
    "as_rational",
    "binomial",
    "binomial_rising",
    "format_polynomial",
    "format_rational",
    "parse_rational",
    "DifferenceTable",
    "LinearRecurrence",
    "Sequence",
    "build_difference_table",
    "infer_recurrence",
    "iterate_recurrence",
    "predict_next",
    "DegeneracyBudgetError",
    "NoConstantRowError",
    "RecurlabError",
    "SingularMatrixError",
    "UnsupportedRootsError",
    "PartialFractionForm",
    "RationalFunction",
    "build_ogf",
    "extract_coefficient_formula",
    "partial_fractions",
    "series_expand",
    "KERNEL_BACKEND",
    "ChordArrangement",
    "CirclePoint",
    "GeometricVerdict",
    "RegionReport",
    "build_arrangement",
    "count_faces",
    "count_regions",
    "hexagon_arrangement",
    "intersect_chords",
    "place_points",
    "verify_against_formula",
    "EulerCounts",
    "chord_count",
    "euler_counts",
    "intersection_count",
    "moser_polynomial",
    "moser_terms",
    "regions_binomial",
    "regions_binomial_sum",
    "regions_polynomial",
    "ClosedForm",
    "ExactMatrix",
    "RootMultiplicity",
    "characteristic_polynomial",
    "gaussian_solve",
    "particular_solution",
    "rational_roots",
    "solve_charpoly",
    "to_moser_variable",
    "__version__",
]
