"""Pants spanned by two hyperbolic isometries, gap schedules, twist feet,
volume boxes on the frame group, and closed-form count predictions.

Two real hyperbolic elements g1, g2 with disjoint axes span a pair of pants
exactly when the gap M between the axes is wide enough:

    cosh(l3/2) = sinh(l1/2) sinh(l2/2) cosh(M) - cosh(l1/2) cosh(l2/2) >= 1,

where l1, l2 are the translation lengths and l3 is then the length of the
third boundary.  The third boundary class is one of the two product words
g1 g2 and g1 g2^{-1}; which one depends on the orientation configuration
(the identity above is insensitive to replacing a generator by its inverse,
the words are not), so both displacements are computed and the matching one
is kept.

m_schedule gives the gap M = M(L) that pins the third boundary length near
r3 L + rho2 + x when l1 = r1 L + rho1 and the second generator translates by
about r2 L.  It is a three-case schedule (triangle rates, degenerate-triangle
rates, dominant third rate); rate triples outside all three cases are
reported as a gap in the schedule, never interpolated.  mtilde is the
companion three-case scale of the gap itself.

Volume boxes: F(a, b, c) = ((c-b)/a, (c+b)/a, 2 ln a) sends the a > 0 chart
of the real determinant-one group to coordinates in which the invariant
volume of a box preimage has the closed form

    vol(B_X) = integral over X of e^{x3} dx

up to one global normalization constant (the invariant density in the
(a, b, c) chart is da db dc / a; haar_box_ratio estimates the constant by
quadrature that never uses the e^{x3} form).
"""

import math

from . import numeric as nm
from .errors import (
    BadParameters,
    BoundaryMismatch,
    CaseGap,
    DegenerateQuadruple,
    IntersectingAxes,
    NoPantsSolution,
    UnboundedBox,
)
from .geodesy import (
    axis,
    axis_parameter,
    common_perpendicular,
    intersection_point,
    width_unsigned,
)
from .hexagon import F_map

WORD_TOL = 1e-9
INTERSECT_TOL = 1e-9
CASE_TOL = 1e-12
AXIS_MATCH_TOL = 1e-8
LENGTH_MATCH_TOL = 1e-9


class PantsPair:
    """A hyperbolic pair of pants spanned by two boundary isometries.

    Stores the generators, their translation lengths l1 and l2, the gap
    (distance between the two axes), the derived third boundary length l3,
    the product word realizing l3, and the feet on each axis of the common
    perpendicular between the axes, in generator order.
    """

    __slots__ = ("g1", "g2", "l1", "l2", "gap", "l3", "word", "feet")

    def __init__(self, g1, g2, l1, l2, gap, l3, word, feet):
        self.g1 = g1
        self.g2 = g2
        self.l1 = l1
        self.l2 = l2
        self.gap = gap
        self.l3 = l3
        self.word = word
        self.feet = feet

    def boundary_lengths(self):
        return (self.l1, self.l2, self.l3)

    def __repr__(self):
        return "PantsPair(l1={!r}, l2={!r}, gap={!r}, l3={!r})".format(
            self.l1, self.l2, self.gap, self.l3)


def _translation_length(g):
    if g.classify() != "hyperbolic":
        raise BadParameters(
            "pants generators must be hyperbolic, got {}".format(g.classify()))
    return float(nm.re(g.displacement().value))


def pants_rhs(l1, l2, gap):
    """Right side of the defining identity, cosh(l3/2) when a pants exists."""
    return (math.sinh(l1 / 2) * math.sinh(l2 / 2) * math.cosh(gap)
            - math.cosh(l1 / 2) * math.cosh(l2 / 2))


def pants_from_pair(g1, g2):
    """Build the pants spanned by two real hyperbolic elements.

    The axes must be disjoint and far enough apart that the identity in the
    module docstring admits l3 >= 0.  The returned word is whichever of
    g1 g2 and g1 g2^{-1} has displacement matching l3; exactly one does for
    a valid configuration, and the selection is re-verified against
    WORD_TOL rather than assumed.
    """
    l1 = _translation_length(g1)
    l2 = _translation_length(g2)
    ax1 = axis(g1)
    ax2 = axis(g2)
    try:
        w = width_unsigned(ax1, ax2)
    except DegenerateQuadruple:
        raise IntersectingAxes("axes coincide or share an endpoint")
    gap = float(nm.re(w.value))
    if gap <= INTERSECT_TOL:
        raise IntersectingAxes(
            "axes cross or touch (gap {})".format(gap))
    rhs = pants_rhs(l1, l2, gap)
    if rhs < 1:
        raise NoPantsSolution(
            "no third boundary length exists (cosh(l3/2) would be {})".format(rhs))
    l3 = 2 * math.acosh(rhs)
    word, err = None, None
    for cand in (g1 @ g2, g1 @ g2.inverse()):
        d = abs(float(nm.re(cand.displacement().value)) - l3)
        if err is None or d < err:
            word, err = cand, d
    if err > WORD_TOL:
        raise BadParameters(
            "neither product word realizes the third boundary "
            "(best mismatch {})".format(err))
    perp = common_perpendicular(ax1, ax2)
    feet = (intersection_point(ax1, perp), intersection_point(ax2, perp))
    return PantsPair(g1, g2, l1, l2, gap, l3, word, feet)


# --- gap schedules ---

def _rate_case(r1, r2, r3):
    for r in (r1, r2, r3):
        if not r > 0:
            raise BadParameters("rates must be positive, got {}".format(r))
    scale = max(r1, r2, r3)
    if abs(r1 + r2 - r3) <= CASE_TOL * scale:
        return "degenerate"
    if r3 > r1 + r2:
        return "dominant"
    if r1 + r2 > r3 and r1 + r3 > r2 and r2 + r3 > r1:
        return "triangle"
    raise CaseGap(
        "rates ({}, {}, {}) fall outside the three scheduled cases".format(
            r1, r2, r3))


def m_schedule(r1, r2, r3, L, x, l1):
    """Gap M(L) that places the third boundary length near r3 L + rho2 + x.

    Three cases by the rate triple: strict-triangle rates give the
    exponentially small gap 2 e^{(-l1 - r2 L + r3 L + x)/4}; r1 + r2 = r3
    gives the L-independent arccosh(2 e^{x/2} + 1); r3 > r1 + r2 gives the
    linearly growing (-l1 - r2 L + r3 L + x)/2 + ln 4.  Rate triples outside
    all three cases raise CaseGap.
    """
    case = _rate_case(r1, r2, r3)
    if case == "triangle":
        return 2 * math.exp((-l1 - r2 * L + r3 * L + x) / 4)
    if case == "degenerate":
        return math.acosh(2 * math.exp(x / 2) + 1)
    return (-l1 - r2 * L + r3 * L + x) / 2 + math.log(4)


def mtilde(r1, r2, r3, L):
    """Scale of the gap itself for the three rate cases:
    e^{(-r1 - r2 + r3) L / 4}, 1, or (-r1 - r2 + r3) L / 2."""
    case = _rate_case(r1, r2, r3)
    if case == "triangle":
        return math.exp((-r1 - r2 + r3) * L / 4)
    if case == "degenerate":
        return 1.0
    return (-r1 - r2 + r3) * L / 2


# --- twist feet ---

def twist_feet(pp):
    """Feet on each generator axis of the perpendicular between the axes."""
    ax1 = axis(pp.g1)
    ax2 = axis(pp.g2)
    perp = common_perpendicular(ax1, ax2)
    return (intersection_point(ax1, perp), intersection_point(ax2, perp))


def _shared_boundary(pp_a, pp_b):
    axes_a = (axis(pp_a.g1), axis(pp_a.g2))
    axes_b = (axis(pp_b.g1), axis(pp_b.g2))
    lens_a = (pp_a.l1, pp_a.l2)
    lens_b = (pp_b.l1, pp_b.l2)
    for i in (0, 1):
        for j in (0, 1):
            if not axes_a[i].close_to(axes_b[j], AXIS_MATCH_TOL, oriented=False):
                continue
            if abs(lens_a[i] - lens_b[j]) > LENGTH_MATCH_TOL:
                continue
            return i, j
    raise BoundaryMismatch("the pants share no boundary geodesic")


def twist_parameter(pp_a, pp_b):
    """Twist of the gluing of two pants along their shared boundary.

    The foot of each pants on the shared axis is the endpoint there of the
    perpendicular to the other generator's axis; the twist is the signed
    arclength from the first foot to the second, reduced mod half the
    boundary length into [0, length/2).  The shared axis is oriented by
    the first pants' generator.
    """
    i, j = _shared_boundary(pp_a, pp_b)
    shared = (axis(pp_a.g1), axis(pp_a.g2))[i]
    other_a = (axis(pp_a.g1), axis(pp_a.g2))[1 - i]
    other_b = (axis(pp_b.g1), axis(pp_b.g2))[1 - j]
    foot_a = intersection_point(shared, common_perpendicular(shared, other_a))
    foot_b = intersection_point(shared, common_perpendicular(shared, other_b))
    s_a = axis_parameter(shared, foot_a)
    s_b = axis_parameter(shared, foot_b)
    half = (pp_a.l1, pp_a.l2)[i] / 2
    return (s_b - s_a) % half


# --- volume boxes ---

class BoxX:
    """Product of three real intervals, the membership target of F."""

    __slots__ = ("intervals",)

    def __init__(self, intervals):
        ivs = tuple((float(lo), float(hi)) for lo, hi in intervals)
        if len(ivs) != 3:
            raise BadParameters("a box needs exactly three intervals")
        for lo, hi in ivs:
            if not lo <= hi:
                raise BadParameters(
                    "empty interval ({}, {})".format(lo, hi))
        self.intervals = ivs

    @classmethod
    def cube(cls, eps):
        """The centered cube [-eps, eps]^3."""
        if not eps > 0:
            raise BadParameters("cube needs eps > 0")
        return cls(((-eps, eps),) * 3)

    @classmethod
    def shifted(cls, x, eps):
        """The slab (-1,1)^2 x (max(-eps-2x, -eps), min(eps-2x, eps)).

        This is the section at transverse coordinate x of the centered cube
        constraint combined with the length window; empty for |x| >= eps.
        """
        lo = max(-eps - 2 * x, -eps)
        hi = min(eps - 2 * x, eps)
        if not lo < hi:
            raise BadParameters(
                "shift {} at most eps {} leaves an empty section".format(x, eps))
        return cls(((-1.0, 1.0), (-1.0, 1.0), (lo, hi)))

    def is_bounded(self):
        return all(math.isfinite(lo) and math.isfinite(hi)
                   for lo, hi in self.intervals)

    def contains(self, triple):
        return all(lo <= v <= hi
                   for v, (lo, hi) in zip(triple, self.intervals))

    def __repr__(self):
        return "BoxX({!r})".format(self.intervals)


def b_membership(g, box):
    """Whether the a > 0 representative of g has F(a, b, c) in the box.

    Elements with vanishing upper-left entry have no a > 0 representative
    and are non-members by definition.
    """
    a, b, c, _ = g.real_entries()
    if a == 0:
        return False
    if a < 0:
        a, b, c = -a, -b, -c
    return box.contains(F_map(a, b, c))


def b_volume(box):
    """Closed-form integral of e^{x3} over the box,
    len(I1) len(I2) (e^{sup I3} - e^{inf I3})."""
    if not box.is_bounded():
        raise UnboundedBox("volume needs finite intervals")
    (a1, b1), (a2, b2), (a3, b3) = box.intervals
    return (b1 - a1) * (b2 - a2) * (math.exp(b3) - math.exp(a3))


def section_volume(x, eps):
    """Volume of the shifted-section preimage, 8 e^{-x} sinh(eps - |x|)."""
    if not abs(x) < eps:
        return 0.0
    return 8 * math.exp(-x) * math.sinh(eps - abs(x))


def haar_box_ratio(box, n=256):
    """Quadrature of the invariant volume of the box preimage, divided by
    the closed-form b_volume.

    For fixed a the membership conditions confine (b, c) to the band where
    c - b is in a I1 and c + b is in a I2, so the c-section at fixed (a, b)
    is an exact interval intersection; only the b and a integrals are done
    numerically (trapezoid).  The invariant density in the (a, b, c) chart
    is da db dc / a.  Nothing here evaluates e^{x3}, so the ratio is an
    independent check of the closed form; it must come out constant across
    boxes (1/4 with this density normalization).
    """
    if not box.is_bounded():
        raise UnboundedBox("quadrature needs finite intervals")
    (i1lo, i1hi), (i2lo, i2hi), (i3lo, i3hi) = box.intervals
    a_lo = math.exp(i3lo / 2)
    a_hi = math.exp(i3hi / 2)

    def b_integral(a):
        b_lo = a * (i2lo - i1hi) / 2
        b_hi = a * (i2hi - i1lo) / 2
        if b_hi <= b_lo:
            return 0.0
        h = (b_hi - b_lo) / n
        total = 0.0
        for k in range(n + 1):
            b = b_lo + k * h
            c_lo = max(b + a * i1lo, -b + a * i2lo)
            c_hi = min(b + a * i1hi, -b + a * i2hi)
            lam = max(0.0, c_hi - c_lo)
            total += lam if 0 < k < n else lam / 2
        return total * h

    h = (a_hi - a_lo) / n
    vol = 0.0
    for k in range(n + 1):
        a = a_lo + k * h
        f = b_integral(a) / a
        vol += f if 0 < k < n else f / 2
    vol *= h
    return vol / b_volume(box)


# --- count predictions ---

def vol_t1(genus):
    """Volume of the unit tangent bundle of the closed genus-g surface,
    (2 pi)^2 (2 genus - 2)."""
    if genus < 2 or genus != int(genus):
        raise BadParameters("genus must be an integer >= 2, got {}".format(genus))
    return (2 * math.pi) ** 2 * (2 * genus - 2)


def isom_order(r1, r2, r3):
    """Order of the orientation-preserving symmetry group of the boundary
    length triple: 6 when all agree, 2 when exactly two do, else 1."""
    matches = (r1 == r2) + (r1 == r3) + (r2 == r3)
    if matches == 3:
        return 6
    return 2 if matches == 1 else 1


def _require_positive(params, keys):
    for key in keys:
        if not params[key] > 0:
            raise BadParameters("{} must be positive, got {}".format(
                key, params[key]))


def predicted_counts(formula, **params):
    """Closed-form main terms of the asymptotic counts.

    formula is one of:
      geodesics         -- closed geodesics with length in L + (l1, l2):
                           (e^{l2} - e^{l1}) e^L / L;
                           params L, l1, l2.
      pants_given_gamma -- pants with one boundary on a fixed geodesic of
                           length gamma_length (primitive image length
                           gamma_bar_length) and the others near r2 L, r3 L:
                           4 (e^{eps/2} - e^{-eps/2})^2 gamma_bar_length
                           exp(-gamma_length/2 + r2 L/2 + r3 L/2)
                           / (vol_t1(genus) n), n = 2 iff r2 == r3;
                           params eps, gamma_length, gamma_bar_length,
                           r2, r3, L, genus.
      pants_all         -- all pants with boundaries near (r1, r2, r3) L:
                           8 (e^{eps/2} - e^{-eps/2})^3 e^{(r1+r2+r3) L/2}
                           / (vol_t1(genus) isom_order(r1, r2, r3));
                           params eps, r1, r2, r3, L, genus.
      angle             -- vectors on a segment of length segment_length
                           tangent to closed geodesics with length in
                           L + (l1, l2) and angle offset in
                           (a1, a2) e^{-L/2}:
                           segment_length (a2 - a1)(e^{l2} - e^{l1}) e^{L/2}
                           / vol_t1(genus);
                           params segment_length, a1, a2, l1, l2, L, genus.
      twist_window      -- pants from pants_count whose twist foot lands in
                           a window of length window_length on a primitive
                           boundary of length gamma_bar_length:
                           window_length pants_count / gamma_bar_length;
                           params window_length, pants_count,
                           gamma_bar_length.
    """
    if formula == "geodesics":
        _require_positive(params, ("L",))
        return ((math.exp(params["l2"]) - math.exp(params["l1"]))
                * math.exp(params["L"]) / params["L"])
    if formula == "pants_given_gamma":
        _require_positive(
            params, ("eps", "gamma_length", "gamma_bar_length", "r2", "r3", "L"))
        eps = params["eps"]
        n = 2 if params["r2"] == params["r3"] else 1
        return (4 * (math.exp(eps / 2) - math.exp(-eps / 2)) ** 2
                * params["gamma_bar_length"]
                * math.exp(-params["gamma_length"] / 2
                           + params["r2"] * params["L"] / 2
                           + params["r3"] * params["L"] / 2)
                / (vol_t1(params["genus"]) * n))
    if formula == "pants_all":
        _require_positive(params, ("eps", "r1", "r2", "r3", "L"))
        eps = params["eps"]
        return (8 * (math.exp(eps / 2) - math.exp(-eps / 2)) ** 3
                * math.exp((params["r1"] + params["r2"] + params["r3"])
                           * params["L"] / 2)
                / (vol_t1(params["genus"])
                   * isom_order(params["r1"], params["r2"], params["r3"])))
    if formula == "angle":
        _require_positive(params, ("segment_length", "L"))
        return (params["segment_length"]
                * (params["a2"] - params["a1"])
                * (math.exp(params["l2"]) - math.exp(params["l1"]))
                * math.exp(params["L"] / 2)
                / vol_t1(params["genus"]))
    if formula == "twist_window":
        _require_positive(params, ("window_length", "gamma_bar_length"))
        if params["pants_count"] < 0:
            raise BadParameters("pants_count must be nonnegative")
        return (params["window_length"] * params["pants_count"]
                / params["gamma_bar_length"])
    raise BadParameters("unknown formula {!r}".format(formula))
