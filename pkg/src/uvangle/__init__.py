"""Direction-pair angle geometry.

Fixing two independent directions in the plane yields an angle defined as
half the logarithm of an area cross ratio.  This package provides the angle
and its primitives, the isoptic hyperbolas of a segment, the hyperbolic
power of a point with radical axes and centers, and the degenerate limits
relating the angle to slope differences, together with a deterministic CLI.
"""

from . import errors
from .angle import (
    AngleResult,
    ComponentLabel,
    DirectionPair,
    SigmaValue,
    affine_angle,
    area_cross_ratio,
    canonical_auxiliary,
    is_same_component,
    midpoint_ray,
    preserves_affine_angle,
    sigma_lambda,
    sigma_sign,
)
from .degeneration import (
    LimitReport,
    SlopePair,
    degenerate_cross_ratio,
    first_order_limit,
    slope_cross_ratio_angle,
)
from .errors import GeometryError
from .isoptic import (
    ConicCoefficients,
    IsopticCurve,
    IsopticSpec,
    asymptote_directions,
    conic_center,
    is_admissible,
    isoptic_curve,
    isoptic_point,
    reflect_branch,
    sample_locus,
    sector_area_equivalence,
)
from .kernel import (
    AffineMap,
    DirectionVector,
    Line,
    Point,
    Ray,
    apply_map,
    compose_maps,
    cross,
    decompose,
    distance,
    dot,
    intersect_lines,
    invert_map,
    is_parallel,
    normalize_configuration,
    signed_area,
    vec,
)
from .power import (
    AxisHyperbola,
    SecantResult,
    asymptotic_projections,
    chord_intersection_x,
    chord_line,
    core_quantity,
    one_sided_identity,
    power,
    progression_quadrilateral_area,
    projected_area,
    radical_axis,
    radical_center,
    secant_intersections,
    symmetric_area,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AngleResult",
    "AxisHyperbola",
    "ComponentLabel",
    "ConicCoefficients",
    "DirectionPair",
    "DirectionVector",
    "GeometryError",
    "IsopticCurve",
    "IsopticSpec",
    "LimitReport",
    "Line",
    "Point",
    "Ray",
    "SecantResult",
    "SigmaValue",
    "SlopePair",
    "affine_angle",
    "apply_map",
    "area_cross_ratio",
    "asymptote_directions",
    "asymptotic_projections",
    "canonical_auxiliary",
    "chord_intersection_x",
    "chord_line",
    "compose_maps",
    "conic_center",
    "core_quantity",
    "cross",
    "decompose",
    "degenerate_cross_ratio",
    "distance",
    "dot",
    "errors",
    "first_order_limit",
    "intersect_lines",
    "invert_map",
    "is_admissible",
    "is_parallel",
    "is_same_component",
    "isoptic_curve",
    "isoptic_point",
    "midpoint_ray",
    "normalize_configuration",
    "one_sided_identity",
    "power",
    "preserves_affine_angle",
    "progression_quadrilateral_area",
    "projected_area",
    "radical_axis",
    "radical_center",
    "reflect_branch",
    "render_svg",
    "sample_locus",
    "secant_intersections",
    "sector_area_equivalence",
    "sigma_lambda",
    "sigma_sign",
    "signed_area",
    "slope_cross_ratio_angle",
    "symmetric_area",
    "vec",
]
