"""Computational geometry of closed hyperbolic surfaces.

Determinant-one matrix actions on the hyperbolic plane and 3-space, frame
pushes, right-angled hexagon width asymptotics, immersed pair-of-pants
solving and counting predictions, finitely generated group walks with a
census of closed geodesics, and a batch CLI (`hypsurf`) over all of it.

Precision: machine doubles by default; pass mpmath scalars (at your chosen
working precision) through the same entry points for extended precision.
"""

from .errors import (
    AmbiguousHit,
    BadParameters,
    BoundaryMismatch,
    BranchMismatch,
    CapExceeded,
    CaseGap,
    ComplexElement,
    DegenerateHexagon,
    DegenerateQuadruple,
    GeometryError,
    HypothesisViolated,
    IdentityElement,
    IntersectingAxes,
    NonpositiveA,
    NonpositiveRadius,
    NoPantsSolution,
    NotFound,
    NotOrthogonal,
    SharedEndpoint,
    SingularMatrix,
    UnboundedBox,
)
from .width import Width
from .moebius import (
    OO,
    Frame,
    GroupElement,
    from_entries,
    horocycle_u,
    horocycle_v,
    hypercycle_u,
    hypercycle_v,
    identity,
    normalize,
    rotation,
    side_step,
    standard,
    translation,
)
from .geodesy import (
    OrientedGeodesic,
    axis,
    axis_chart,
    axis_parameter,
    common_perpendicular,
    cross_ratio,
    double_cross_width,
    frame_on_axis,
    half_turn,
    intersection_point,
    is_orthogonal,
    width_unsigned,
)
from .hexagon import (
    AsymptoticWidths,
    HexagonH,
    Report,
    F_map,
    asymptotic_widths,
    build_hexagon,
    exact_widths,
    law_residuals,
    lemma_x_report,
    parallel_report,
    perp_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "1.0.0"
