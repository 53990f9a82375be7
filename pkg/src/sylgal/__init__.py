"""Sylvester-Gallai type incidence geometry over the complex numbers and quaternions."""

__version__ = "0.1.0"

from .errors import (
    BackendMismatchError,
    DegenerateError,
    HypothesisViolation,
    NotApplicable,
    ScalarParseError,
)
from .scalars import QuadExt, Quaternion, ScalarField, compare_real, conj, inverse, mul, norm_sq
from .plane import (
    Point,
    PointSet,
    Slope,
    Vertical,
    collinear,
    dist_sq_point_line,
    inner,
    lambda_star,
    line_through,
    on_line,
    project,
)
from .incidence import SpannedLine, check_sg_bound, enumerate_lines, incidence_count
from .kelly import angle_property, bound_from_angles, find_witness, normalize_to_axis
from .grid import (
    GridSpec,
    check_grid_theorem,
    closest_pair,
    equilateral_third_points,
    furthest_pair,
    interchange_probe,
    is_equilateral,
    projection_similarity_check,
    proof_line,
    similarity_from_pairs,
)
from .configs import gen_hesse, gen_near_collinear, gen_random_grid, gen_random_points, gen_simplex4

__all__ = [
    "BackendMismatchError",
    "DegenerateError",
    "HypothesisViolation",
    "NotApplicable",
    "ScalarParseError",
    "QuadExt",
    "Quaternion",
    "ScalarField",
    "compare_real",
    "conj",
    "inverse",
    "mul",
    "norm_sq",
    "Point",
    "PointSet",
    "Slope",
    "Vertical",
    "collinear",
    "dist_sq_point_line",
    "inner",
    "lambda_star",
    "line_through",
    "on_line",
    "project",
    "SpannedLine",
    "check_sg_bound",
    "enumerate_lines",
    "incidence_count",
    "angle_property",
    "bound_from_angles",
    "find_witness",
    "normalize_to_axis",
    "GridSpec",
    "check_grid_theorem",
    "closest_pair",
    "equilateral_third_points",
    "furthest_pair",
    "interchange_probe",
    "is_equilateral",
    "projection_similarity_check",
    "proof_line",
    "similarity_from_pairs",
    "gen_hesse",
    "gen_near_collinear",
    "gen_random_grid",
    "gen_random_points",
    "gen_simplex4",
]
