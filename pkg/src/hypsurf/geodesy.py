"""Oriented geodesics, cross ratios, and complex widths between lines.

Boundary points are complex numbers (real numbers for the plane's boundary)
or the point OO at infinity.  Internally every boundary point is a
homogeneous pair (p0, p1) with p = p0/p1 and OO = (1, 0); all cross-ratio
style formulas are evaluated through the 2x2 determinant
det2((p0,p1),(q0,q1)) = p0 q1 - p1 q0, which keeps OO on an equal footing
with finite points.

An OrientedGeodesic is an ordered pair of distinct boundary points
tail -> head.  The signed complex width between two oriented lines, taken
along a third line orthogonal to both, is the double cross: with the middle
line m and the ordered pair (f, s),

    exp(width) = cross_ratio(f.tail, s.tail, m.head, m.tail),

which is log-ed into the strip Im in (-pi, pi].  Its real part is the
signed distance along m (positive in the direction of m), its imaginary
part the turning angle.

The common perpendicular of two disjoint oriented lines is oriented from
the first line toward the second; it is computed as the axis of the
composition of the two half-turns, whose attracting fixed point lies on the
side of the second line.  When the lines cross (purely imaginary width) the
perpendicular through the crossing point is oriented by the turning sense:
map the candidate perpendicular to (0 -> infinity); the images of the two
lines are then antipodal pairs, and the sign of the sine of the angle from
the first image direction to the second picks the head.  The sign
convention is fixed so that the hexagon side widths produced downstream
match the analytic formulas of the hexagon module (see _CROSS_HEAD_ON_PLUS).
"""

import math

from . import numeric as nm
from .errors import (
    BadParameters,
    ComplexElement,
    DegenerateQuadruple,
    IdentityElement,
    SharedEndpoint,
    NotOrthogonal,
)
from .moebius import OO, GroupElement, translation
from .width import Width

ORTHO_TOL = 1e-8
SHARED_TOL = 1e-12
CROSS_TOL = 1e-9
REAL_TOL = 1e-9
AXIS_TOL = 1e-10

# Orientation of the perpendicular through a crossing point: when the
# turning sense s (see _orient_crossing) is positive, the head is the
# fixed point in the "plus" slot of the half-turn composition.  The sign is
# forced by the orientation of the ambient three-space: in the chart where
# the perpendicular is (0 -> infinity), s equals the determinant of the
# (first direction, second direction, upward) triple.
_CROSS_HEAD_ON_PLUS = True


def to_homogeneous(p):
    """Homogeneous pair (p0, p1) with p = p0/p1; OO maps to (1, 0)."""
    if p is OO:
        return (1.0, 0.0)
    return (p, 1.0)


def from_homogeneous(pair):
    p0, p1 = pair
    if p1 == 0:
        return OO
    return p0 / p1


def det2(p, q):
    return p[0] * q[1] - p[1] * q[0]


def chordal(p, q):
    """Chordal distance on the boundary sphere (diameter 2)."""
    if p is OO and q is OO:
        return 0.0
    if p is OO:
        return 2.0 / math.sqrt(1.0 + abs(q) ** 2)
    if q is OO:
        return 2.0 / math.sqrt(1.0 + abs(p) ** 2)
    return 2.0 * abs(complex(p) - complex(q)) / math.sqrt(
        (1.0 + abs(p) ** 2) * (1.0 + abs(q) ** 2))


def boundary_action(g, p):
    """Image of a boundary point under a group element."""
    p0, p1 = to_homogeneous(p)
    return from_homogeneous((g.a * p0 + g.b * p1, g.c * p0 + g.d * p1))


def cross_ratio(a, b, c, d):
    """(a-c)(b-d) / ((a-d)(b-c)) with OO allowed in any slot.

    Returns OO when only the denominator vanishes and raises
    DegenerateQuadruple on 0/0 (three or more coincident points).
    """
    ah, bh, ch, dh = (to_homogeneous(p) for p in (a, b, c, d))
    num = det2(ah, ch) * det2(bh, dh)
    den = det2(ah, dh) * det2(bh, ch)
    if den == 0:
        if num == 0:
            raise DegenerateQuadruple("cross ratio of the form 0/0")
        return OO
    return num / den


class OrientedGeodesic:
    """An ordered pair of distinct boundary points tail -> head."""

    __slots__ = ("tail", "head")

    def __init__(self, tail, head):
        if chordal(tail, head) <= SHARED_TOL:
            raise BadParameters("geodesic endpoints coincide")
        self.tail = tail
        self.head = head

    def reversed(self):
        return OrientedGeodesic(self.head, self.tail)

    def transformed(self, g):
        return OrientedGeodesic(
            boundary_action(g, self.tail), boundary_action(g, self.head))

    def close_to(self, other, tol, oriented=True):
        same = (chordal(self.tail, other.tail) <= tol
                and chordal(self.head, other.head) <= tol)
        if same or oriented:
            return same
        return (chordal(self.tail, other.head) <= tol
                and chordal(self.head, other.tail) <= tol)

    def __repr__(self):
        return "OrientedGeodesic({!r}, {!r})".format(self.tail, self.head)


def _plus_eigenvalue(g, zp):
    """Eigenvalue of g on the homogeneous fixed point zp, using whichever
    coordinate of zp is larger."""
    p0, p1 = zp
    if abs(p0) >= abs(p1):
        return (g.a * p0 + g.b * p1) / p0
    return (g.c * p0 + g.d * p1) / p1


def axis(g):
    """Invariant line of an element with two distinct fixed points and an
    attracting one, oriented from the repelling to the attracting point.

    Accepts complex matrices (loxodromic classes); rejects elements whose
    eigenvalues sit on the unit circle (elliptic, parabolic) since those
    translate along no line.
    """
    zm, zp = g._fixed_points_homogeneous()
    eig = _plus_eigenvalue(g, zp)
    if abs(abs(eig) - 1) <= AXIS_TOL:
        raise BadParameters("element has no translation axis")
    tail, head = from_homogeneous(zm), from_homogeneous(zp)
    if abs(eig) < 1:
        tail, head = head, tail
    return OrientedGeodesic(tail, head)


def half_turn(line):
    """Rotation by pi about the line (an involution fixing its endpoints)."""
    p0, p1 = to_homogeneous(line.tail)
    q0, q1 = to_homogeneous(line.head)
    s = p0 * q1 + p1 * q0
    # det of the raw matrix is -(p0 q1 - p1 q0)^2; divide it out here so the
    # entries reach GroupElement already balanced.
    w = p0 * q1 - p1 * q0
    if w == 0:
        raise BadParameters("line endpoints coincide")
    return GroupElement(s / w, -2 * p0 * q0 / w, 2 * p1 * q1 / w, -s / w)


def _orient_crossing(zm, zp, g_from, g_to):
    # Map the candidate perpendicular (zm -> zp) to (0 -> infinity).  Each
    # of the two crossing lines then becomes an antipodal pair, and the
    # turning sense from the first direction to the second fixes the head.
    def t_value(point):
        h = to_homogeneous(point)
        num = zm[1] * h[0] - zm[0] * h[1]
        den = zp[1] * h[0] - zp[0] * h[1]
        if den == 0:
            raise BadParameters("crossing-line endpoint sits on the perpendicular")
        return num / den

    a0 = t_value(g_from.tail)
    a1 = t_value(g_from.head)
    b0 = t_value(g_to.tail)
    b1 = t_value(g_to.head)
    t1 = (a1 - a0) / abs(a1 - a0)
    t3 = (b1 - b0) / abs(b1 - b0)
    s = nm.im(t1.conjugate() * t3)
    if (s > 0) == _CROSS_HEAD_ON_PLUS:
        tail, head = zm, zp
    else:
        tail, head = zp, zm
    return OrientedGeodesic(from_homogeneous(tail), from_homogeneous(head))


def common_perpendicular(g_from, g_to):
    """The line orthogonal to both inputs, oriented from the first to the
    second.  Raises SharedEndpoint when the inputs share an ideal endpoint
    (no perpendicular) or coincide."""
    for p in (g_from.tail, g_from.head):
        for q in (g_to.tail, g_to.head):
            if chordal(p, q) <= SHARED_TOL:
                raise SharedEndpoint("lines share an ideal endpoint")
    comp = half_turn(g_to) @ half_turn(g_from)
    try:
        mu = comp.displacement()
    except IdentityElement:
        raise SharedEndpoint("lines coincide")
    if mu.distance(0.0) <= CROSS_TOL:
        raise SharedEndpoint("lines are asymptotic")
    zm, zp = comp._fixed_points_homogeneous()
    if mu.real <= CROSS_TOL:
        return _orient_crossing(zm, zp, g_from, g_to)
    eig = _plus_eigenvalue(comp, zp)
    tail, head = from_homogeneous(zm), from_homogeneous(zp)
    if abs(eig) < 1:
        tail, head = head, tail
    return OrientedGeodesic(tail, head)


def is_orthogonal(l1, l2, tol=ORTHO_TOL):
    """Right-angle test: the endpoint quadruple is harmonic (cross ratio -1)."""
    try:
        r = cross_ratio(l1.tail, l1.head, l2.tail, l2.head)
    except DegenerateQuadruple:
        return False
    if r is OO:
        return False
    return abs(r + 1) <= tol


def double_cross_width(first, second, middle, tol=ORTHO_TOL):
    """Signed complex width from `first` to `second` measured along `middle`.

    `middle` must be orthogonal to both other lines.  The real part is the
    signed distance between the feet (positive in the direction of
    `middle`); the imaginary part is the turning angle from `first` to
    `second` around `middle`.
    """
    if not is_orthogonal(middle, first, tol):
        raise NotOrthogonal("middle line is not orthogonal to the first")
    if not is_orthogonal(middle, second, tol):
        raise NotOrthogonal("middle line is not orthogonal to the second")
    r = cross_ratio(first.tail, second.tail, middle.head, middle.tail)
    if r is OO or r == 0:
        raise SharedEndpoint("degenerate double cross")
    return Width(nm.log(r))


def width_unsigned(l1, l2):
    """Canonical width between two oriented lines (sign of Re dropped).

    Computed from tanh^2(width/2) = cross ratio of the endpoint quadruple;
    no common perpendicular is constructed.  Crossing lines give a purely
    imaginary result, disjoint ones a real part equal to the distance, with
    imaginary part 0 or pi according to the relative orientation.
    """
    r = cross_ratio(l1.tail, l1.head, l2.tail, l2.head)
    if r is OO or r == 0 or r == 1:
        raise DegenerateQuadruple("lines share an endpoint")
    t = nm.canonical_sqrt(r)
    return Width(2 * nm.atanh(t)).canonical()


# --- charts along a real line ---

def axis_chart(line):
    """Element mapping the line onto (0 -> infinity).

    For a line with real endpoints the representative is chosen with
    positive determinant before normalization, so the upper half-plane maps
    to itself and orientation along the line is preserved.
    """
    p = to_homogeneous(line.tail)
    q = to_homogeneous(line.head)
    a, b = p[1], -p[0]
    c, d = q[1], -q[0]
    if nm.re(a * d - b * c) < 0:
        c, d = -c, -d
    return GroupElement(a, b, c, d)


def axis_parameter(line, point):
    """Signed arclength coordinate of a point of the line (real case)."""
    z = axis_chart(line).apply(point)
    y = float(nm.im(z))
    if y <= 0:
        raise BadParameters("point is not in the upper half-plane")
    return math.log(y)


def frame_on_axis(line, s):
    """Group element whose frame sits on the line at arclength coordinate s,
    pointing toward the head."""
    return axis_chart(line).inverse() @ translation(s)


# --- intersections of real lines ---

def _real_endpoint(p):
    if p is OO:
        return OO
    if abs(nm.im(p)) > REAL_TOL * (1 + abs(p)):
        raise ComplexElement("endpoint is not real: {!r}".format(p))
    return float(nm.re(p))


def _line_shape(line):
    t = _real_endpoint(line.tail)
    h = _real_endpoint(line.head)
    if t is OO or h is OO:
        x = t if h is OO else h
        return ("vertical", x, None)
    return ("circle", (t + h) / 2.0, abs(h - t) / 2.0)


def intersection_point(l1, l2):
    """The point of the upper half-plane where two real lines cross."""
    k1, c1, r1 = _line_shape(l1)
    k2, c2, r2 = _line_shape(l2)
    if k1 == "vertical" and k2 == "vertical":
        raise BadParameters("vertical lines do not cross in the plane")
    if k1 == "vertical" or k2 == "vertical":
        if k1 == "vertical":
            x, cc, rr = c1, c2, r2
        else:
            x, cc, rr = c2, c1, r1
        y2 = rr * rr - (x - cc) * (x - cc)
        if y2 <= 0:
            raise BadParameters("lines do not cross")
        return complex(x, math.sqrt(y2))
    if c1 == c2:
        raise BadParameters("concentric lines do not cross")
    x = (r1 * r1 - r2 * r2 - c1 * c1 + c2 * c2) / (2.0 * (c2 - c1))
    y2 = r1 * r1 - (x - c1) * (x - c1)
    if y2 <= 0:
        raise BadParameters("lines do not cross")
    return complex(x, math.sqrt(y2))
