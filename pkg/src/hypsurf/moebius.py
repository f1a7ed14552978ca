"""Determinant-one 2x2 matrices up to sign, acting on the hyperbolic plane.

A GroupElement stores one representative of a projective matrix class.  The
representative is pinned by a deterministic sign rule so that equal classes
always produce identical entry tuples:

* entries are divided by the canonical square root of the determinant, and
* the sign is chosen so that the first nonzero item of the list
  (Re tr, Im tr, Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d)
  is positive.

Entries may be machine complex numbers or mpmath numbers; all arithmetic
routes through the numeric module so a single code path serves both.

The point at infinity on the boundary is the first-class sentinel OO, not a
large float; functions returning boundary points may return OO.

Standard one-parameter families (upper half-plane model, acting by z ->
(a z + b)/(c z + d)):

* translation(L): diag(exp(L/2), exp(-L/2)), axis the imaginary half-line,
  oriented 0 -> infinity, displacement L.
* horocycle_u(T): unit upper-triangular shear (fixes infinity).
* horocycle_v(T): unit lower-triangular shear (fixes 0).
* rotation(delta): rotation by angle delta about the point i.
* hypercycle_u(r, s) / hypercycle_v(r, s): arclength-s flow along the curve
  at distance r from the imaginary axis, on the side that limits to the
  horocycle_u (resp. horocycle_v) family as r grows:
  G_r (R_{-pi/2} G_{s/cosh r} R_{pi/2}) G_{-r}  (resp. conjugated by G_{-r}),
  which works out to [[cosh(t/2), e^{+-r} sinh(t/2)], [e^{-+r} sinh(t/2),
  cosh(t/2)]] with t = s/cosh(r), converging to the horocycle flows at rate
  exp(-2r).

The unit tangent bundle of the plane is identified with the group itself:
the frame "g" sits at the point g(i) with direction the push-forward of the
upward vertical.  Frame.push_right(t) moves a frame distance t along the
geodesic orthogonal to it on its right side.
"""

from . import numeric as nm
from .errors import (
    BadParameters,
    ComplexElement,
    IdentityElement,
    NonpositiveRadius,
    SingularMatrix,
)
from .width import Width

DET_TOL = 1e-14
REAL_TOL = 1e-12
CLASSIFY_TOL = 1e-10


class _BoundaryInfinity:
    """The point at infinity on the boundary circle/sphere."""

    __slots__ = ()

    def __repr__(self):
        return "OO"


OO = _BoundaryInfinity()


def _signed(a, b, c, d):
    # First nonzero of (Re tr, Im tr, Re a, Im a, ...) decides the sign.
    t = a + d
    keys = (t, a, b, c, d)
    for k in keys:
        x = nm.re(k)
        if x > 0:
            return a, b, c, d
        if x < 0:
            return -a, -b, -c, -d
        y = nm.im(k)
        if y > 0:
            return a, b, c, d
        if y < 0:
            return -a, -b, -c, -d
    return a, b, c, d


class GroupElement:
    """One matrix class in the projective determinant-one group."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        # Cancellation scale of ad - bc, not the Frobenius norm: matrices
        # with one huge off-diagonal entry are regular, not singular.
        scale = abs(a) * abs(d) + abs(b) * abs(c)
        if abs(det) <= DET_TOL * scale or det == 0:
            raise SingularMatrix(
                "determinant {} negligible against entries".format(det))
        if det != 1:
            r = nm.canonical_sqrt(det)
            a, b, c, d = a / r, b / r, c / r, d / r
        a, b, c, d = _signed(a, b, c, d)
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    # --- basic structure ---

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self):
        return self.a + self.d

    def __matmul__(self, other):
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def conjugated_by(self, h):
        """h @ self @ h^-1."""
        return h @ self @ h.inverse()

    def distance(self, other):
        """Max entry difference, minimized over the projective sign."""
        plus = max(
            abs(self.a - other.a), abs(self.b - other.b),
            abs(self.c - other.c), abs(self.d - other.d))
        minus = max(
            abs(self.a + other.a), abs(self.b + other.b),
            abs(self.c + other.c), abs(self.d + other.d))
        return min(plus, minus)

    def close_to(self, other, tol):
        return self.distance(other) <= tol

    def is_identity(self, tol=CLASSIFY_TOL):
        return (abs(self.a - 1) <= tol and abs(self.b) <= tol
                and abs(self.c) <= tol and abs(self.d - 1) <= tol)

    def is_real(self, tol=REAL_TOL):
        scale = max(1.0, abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        return max(abs(nm.im(self.a)), abs(nm.im(self.b)),
                   abs(nm.im(self.c)), abs(nm.im(self.d))) <= tol * scale

    def real_entries(self, tol=REAL_TOL):
        if not self.is_real(tol):
            raise ComplexElement("entries have imaginary parts: {!r}".format(self))
        return (float(nm.re(self.a)), float(nm.re(self.b)),
                float(nm.re(self.c)), float(nm.re(self.d)))

    def __repr__(self):
        return "GroupElement({!r}, {!r}, {!r}, {!r})".format(
            self.a, self.b, self.c, self.d)

    # --- geometry ---

    def apply(self, z):
        """Act on a point of the plane (finite complex number)."""
        return (self.a * z + self.b) / (self.c * z + self.d)

    def classify(self, tol=CLASSIFY_TOL):
        """Trace trichotomy for real elements:
        one of "identity", "parabolic", "elliptic", "hyperbolic"."""
        if not self.is_real():
            raise ComplexElement("classification requires real entries")
        if self.is_identity(tol):
            return "identity"
        x = abs(nm.re(self.trace))
        if abs(x - 2) <= tol:
            return "parabolic"
        return "elliptic" if x < 2 else "hyperbolic"

    def displacement(self):
        """Translation width mu with cosh(mu/2) = tr/2, Re(mu) >= 0.

        Real for hyperbolic classes, purely imaginary (the rotation angle)
        for elliptic ones, complex otherwise.  The identity and parabolic
        classes return zero width.
        """
        half = nm.acosh(self.trace / 2)
        return Width(2 * half).canonical()

    def _fixed_points_homogeneous(self):
        """Both boundary fixed points as homogeneous pairs (minus, plus).

        Roots z = p0/p1 of c z^2 + (d - a) z - b = 0, ordered by the
        canonical square root N of tr^2 - 4 (Re(N) >= 0, tie Im(N) >= 0):
        the minus slot is (a - d - N)/(2c), the plus slot (a - d + N)/(2c).
        Each root is computed from whichever of the two exact forms
        (q +- N)/(2c) and -2b/(q -+ N) has the larger denominator, so the
        pair stays accurate when b or c vanishes.  A parabolic class yields
        its single fixed point twice.
        """
        if self.is_identity():
            raise IdentityElement("every point is fixed")
        q = self.a - self.d
        if self.c == 0 and q == 0:
            return ((1.0, 0.0), (1.0, 0.0))
        n = nm.canonical_sqrt(self.trace * self.trace - 4)
        plus_den = q + n
        minus_den = q - n
        if abs(plus_den) >= abs(minus_den):
            z_minus = (-2 * self.b, plus_den)
            z_plus = (plus_den, 2 * self.c)
        else:
            z_minus = (minus_den, 2 * self.c)
            z_plus = (-2 * self.b, minus_den)
        return (z_minus, z_plus)

    def fixed_points(self):
        """Both boundary fixed points (values in C or OO), minus root first.

        The order is the algebraic one fixed by the canonical square root,
        not the dynamical attracting/repelling order; inverting the element
        swaps the two slots.
        """
        zm, zp = self._fixed_points_homogeneous()
        out = []
        for p0, p1 in (zm, zp):
            out.append(OO if p1 == 0 else p0 / p1)
        return tuple(out)


def normalize(matrix):
    """Build a GroupElement from a nested 2x2 matrix [[a, b], [c, d]]."""
    (a, b), (c, d) = matrix
    return GroupElement(a, b, c, d)


def from_entries(a, b, c, d):
    """Build a group element from matrix entries (any nonzero determinant)."""
    return GroupElement(a, b, c, d)


def identity():
    return GroupElement(1.0, 0.0, 0.0, 1.0)


def translation(length):
    """Flow of signed length along the imaginary axis, oriented 0 -> infinity."""
    x = nm.exp(length / 2)
    return GroupElement(x, 0 * x, 0 * x, 1 / x)


def horocycle_u(shear):
    """Unit upper-triangular shear [[1, T], [0, 1]]."""
    return GroupElement(1.0, shear, 0 * shear, 1.0)


def horocycle_v(shear):
    """Unit lower-triangular shear [[1, 0], [T, 1]]."""
    return GroupElement(1.0, 0 * shear, shear, 1.0)


def rotation(angle):
    """Rotation by the given angle about the point i."""
    ch = nm.cos(angle / 2)
    sh = nm.sin(angle / 2)
    return GroupElement(ch, sh, -sh, ch)


def side_step(t):
    """R_{-pi/2} G_t R_{pi/2}: moves the base frame distance t to its right.

    Equals [[cosh(t/2), sinh(t/2)], [sinh(t/2), cosh(t/2)]].
    """
    return rotation(-nm.pi_of(t) / 2) @ translation(t) @ rotation(nm.pi_of(t) / 2)


def _hypercycle_core(radius, arclength):
    if not nm.re(radius) > 0:
        raise NonpositiveRadius("hypercycle offset must be positive")
    t = arclength / nm.cosh(radius)
    return nm.cosh(t / 2), nm.sinh(t / 2), nm.exp(radius)


def hypercycle_u(radius, arclength):
    """Hypercycle flow at distance r from the axis, limiting to horocycle_u."""
    ch, sh, er = _hypercycle_core(radius, arclength)
    return GroupElement(ch, er * sh, sh / er, ch)


def hypercycle_v(radius, arclength):
    """Hypercycle flow at distance r from the axis, limiting to horocycle_v."""
    ch, sh, er = _hypercycle_core(radius, arclength)
    return GroupElement(ch, sh / er, er * sh, ch)


_STANDARD = {
    "translation": translation,
    "horocycle_u": horocycle_u,
    "horocycle_v": horocycle_v,
    "rotation": rotation,
    "hypercycle_u": hypercycle_u,
    "hypercycle_v": hypercycle_v,
    "matrix": from_entries,
}


def standard(kind, *params):
    """Dispatch to a standard family by name (see _STANDARD for the names)."""
    try:
        maker = _STANDARD[kind]
    except KeyError:
        raise BadParameters("unknown standard family {!r}".format(kind))
    return maker(*params)


class Frame:
    """A unit tangent vector, stored as the group element carrying the base
    frame (point i, upward direction) onto it."""

    __slots__ = ("element",)

    def __init__(self, element):
        if not element.is_real():
            raise ComplexElement("frames require real matrices")
        self.element = element

    @classmethod
    def base(cls):
        return cls(identity())

    def point(self):
        """Base point in the upper half-plane."""
        a, b, c, d = self.element.real_entries()
        return (complex(b, a)) / (complex(d, c))

    def direction(self):
        """Euclidean representative of the unit tangent (hyperbolic norm 1)."""
        a, b, c, d = self.element.real_entries()
        den = complex(d, c)
        return 1j / (den * den)

    def push_right(self, t):
        """Slide the frame distance t along the geodesic to its right."""
        return Frame(self.element @ side_step(t))

    def right_multiply(self, g):
        """Generic flow: right multiplication by a group element."""
        return Frame(self.element @ g)

    def __repr__(self):
        return "Frame({!r})".format(self.element)
