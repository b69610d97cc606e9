"""Point sets on the cubic y^2 = x^3 - x^2 with no four collinear points,
their maximal-collinear-line structure, and colorings in which no line is
monochromatic."""

from .configfile import (
    ConfigFileError,
    ConfigurationFile,
    dump_configuration,
    load_configuration,
    save_configuration,
)
from .curve import (
    PointConfiguration,
    ProjectivePoint,
    cot_addition_residual,
    curve_cycle,
    curve_point,
    curve_residual,
    point_at_infinity,
    points_equal,
)
from .geometry import (
    Line,
    LineHypergraph,
    collinear,
    enumerate_lines,
    max_collinear,
    verify_coloring_geometric,
)
from .groupmodel import (
    Coloring,
    GroupElement,
    GroupLine,
    VerificationReport,
    group_lines,
    third_point,
    thirds_coloring,
    verify_coloring_group,
)
from .numerics import (
    DEFAULT_PRECISION,
    DegenerateInputError,
    PoleError,
    PrecisionError,
    default_tolerance,
)
from .projective import ProjectiveMap, find_missing_line, send_to_infinity
from .search import (
    InstanceReport,
    SearchBudgetError,
    SearchOutcome,
    SearchStatus,
    brute_force_coloring,
    check_instance,
    search_coloring,
)
from .svgplot import Window, render_svg

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "ConfigFileError",
    "ConfigurationFile",
    "DEFAULT_PRECISION",
    "DegenerateInputError",
    "GroupElement",
    "GroupLine",
    "InstanceReport",
    "Line",
    "LineHypergraph",
    "PointConfiguration",
    "PoleError",
    "PrecisionError",
    "ProjectiveMap",
    "ProjectivePoint",
    "SearchBudgetError",
    "SearchOutcome",
    "SearchStatus",
    "VerificationReport",
    "Window",
    "brute_force_coloring",
    "check_instance",
    "collinear",
    "cot_addition_residual",
    "curve_cycle",
    "curve_point",
    "curve_residual",
    "default_tolerance",
    "dump_configuration",
    "enumerate_lines",
    "find_missing_line",
    "group_lines",
    "load_configuration",
    "max_collinear",
    "point_at_infinity",
    "points_equal",
    "render_svg",
    "save_configuration",
    "search_coloring",
    "send_to_infinity",
    "third_point",
    "thirds_coloring",
    "verify_coloring_geometric",
    "verify_coloring_group",
]
