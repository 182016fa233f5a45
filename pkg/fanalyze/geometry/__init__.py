"""Cones, fans and complement analysis for fanalyze."""

from fanalyze.geometry.complement import (
    ArrangementFan,
    ComplementAnalysis,
    ComplementComponent,
    arrangement,
    boundary_cones,
    boundary_is_connected,
    closure_dual,
    complement_components,
    is_concave,
)
from fanalyze.geometry.cone import (
    Cone,
    Containment,
    Position,
    cone_contains_cone,
    cone_from_inequalities,
    cone_from_rays,
    contains,
    dim,
    dual,
    faces,
    halfspace,
    intersect,
    is_face_of,
    is_smooth,
    is_strictly_convex,
    relint_point,
    whole_space,
    zero_cone,
)
from fanalyze.geometry.fan import (
    Completion,
    Fan,
    FanMorphism,
    SmoothnessCheck,
    complete_fan,
    fan_from_cones,
    fan_from_max_cones,
    is_complete,
    is_fan_morphism,
    is_smooth_fan,
    is_subdivision,
    resolve,
    stellar_subdivide,
    support_contains,
    support_subset,
    transform_fan,
)

__all__ = [
    "Cone",
    "Containment",
    "Position",
    "cone_from_rays",
    "cone_from_inequalities",
    "cone_contains_cone",
    "contains",
    "dim",
    "dual",
    "faces",
    "halfspace",
    "intersect",
    "is_face_of",
    "is_smooth",
    "is_strictly_convex",
    "relint_point",
    "whole_space",
    "zero_cone",
    "Fan",
    "FanMorphism",
    "Completion",
    "SmoothnessCheck",
    "fan_from_cones",
    "fan_from_max_cones",
    "support_contains",
    "support_subset",
    "is_complete",
    "is_smooth_fan",
    "is_subdivision",
    "is_fan_morphism",
    "stellar_subdivide",
    "resolve",
    "complete_fan",
    "transform_fan",
    "ArrangementFan",
    "ComplementAnalysis",
    "ComplementComponent",
    "arrangement",
    "complement_components",
    "closure_dual",
    "is_concave",
    "boundary_cones",
    "boundary_is_connected",
]
