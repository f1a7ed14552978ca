"""Exception types raised by the geometry layers.

Every exception in this package derives from GeometryError so callers can
catch the whole family with one clause.  Subclasses are grouped by the layer
that raises them; none carry extra state beyond the message.
"""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


# --- matrix / group element layer ---

class SingularMatrix(GeometryError):
    """Matrix determinant is zero (or negligible against its entries)."""


class IdentityElement(GeometryError):
    """Operation undefined for the identity element (no axis, no fixed pair)."""


class ComplexElement(GeometryError):
    """Real-entry operation applied to an element with complex entries."""


class NonpositiveRadius(GeometryError):
    """Hypercycle flow requires a strictly positive offset parameter."""


# --- boundary / geodesic layer ---

class DegenerateQuadruple(GeometryError):
    """Cross ratio of the form 0/0: at least three of the four points coincide."""


class SharedEndpoint(GeometryError):
    """Two geodesics share an ideal endpoint; no common perpendicular exists."""


class NotOrthogonal(GeometryError):
    """Double cross requires the middle geodesic to meet both others at right angles."""


class IntersectingAxes(GeometryError):
    """Construction requires disjoint axes but the given axes cross."""


# --- right-angled hexagon layer ---

class DegenerateHexagon(GeometryError):
    """Hexagon sides collapse (shared endpoints) for this matrix and length."""


class BranchMismatch(GeometryError):
    """No branch of the analytic formula matches the constructed hexagon."""


class HypothesisViolated(GeometryError):
    """Inputs sit outside the smallness regime required by the expansion."""


class NonpositiveA(GeometryError):
    """Normal form requires the upper-left entry to be positive."""


# --- pants / counting layer ---

class NoPantsSolution(GeometryError):
    """No hyperbolic pants exists with the requested half-lengths and width."""


class CaseGap(GeometryError):
    """Ratio triple falls in the gap where no growth schedule is defined."""


class BoundaryMismatch(GeometryError):
    """Element is not a boundary of the given pants up to the allowed moves."""


class UnboundedBox(GeometryError):
    """Requested parameter box has infinite volume."""


class BadParameters(GeometryError):
    """Parameters violate a documented precondition (ranges, ordering)."""


# --- enumeration / lab layer ---

class CapExceeded(GeometryError):
    """Enumeration would exceed the configured element or radius cap."""


class AmbiguousHit(GeometryError):
    """Search found two distinct group elements where uniqueness was promised."""


class NotFound(GeometryError):
    """Search exhausted its configured range without a hit."""
