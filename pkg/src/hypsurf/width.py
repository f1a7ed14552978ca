"""Signed complex widths, normalized modulo 2*pi*i.

A width is a complex number recording a signed distance-plus-rotation between
oriented geodesics (real part: distance, positive when the configuration is
right-handed; imaginary part: crossing angle).  Widths are only defined up to
adding 2*pi*i, so every Width is stored strip-reduced with imaginary part in
(-pi, pi].  The sign of a width flips when either endpoint geodesic is
reversed twice-over; callers that do not care about the sign use canonical().
"""

from . import numeric as nm


class Width:
    """A complex width stored in the strip Im in (-pi, pi]."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = nm.strip_reduce(value)

    @property
    def real(self):
        return nm.re(self.value)

    @property
    def imag(self):
        return nm.im(self.value)

    def __neg__(self):
        return Width(-self.value)

    def __add__(self, other):
        other = other.value if isinstance(other, Width) else other
        return Width(self.value + other)

    def __sub__(self, other):
        other = other.value if isinstance(other, Width) else other
        return Width(self.value - other)

    def canonical(self):
        """The representative with Re >= 0, ties broken toward Im >= 0.

        Negating x + i*pi gives -x - i*pi, which strip-reduces back to
        -x + i*pi, so the imaginary part pi is preserved under negation.
        """
        v = self.value
        if nm.re(v) < 0 or (nm.re(v) == 0 and nm.im(v) < 0):
            v = -v
        return Width(v)

    def distance(self, other):
        """Distance to another width in the cylinder C / 2*pi*i*Z."""
        other = other if isinstance(other, Width) else Width(other)
        d = complex(nm.strip_reduce(self.value - other.value))
        two_pi_i = complex(0.0, 2.0 * nm.pi_of(1.0))
        return min(abs(d), abs(d - two_pi_i), abs(d + two_pi_i))

    def close_to(self, other, tol):
        return self.distance(other) <= tol

    def __repr__(self):
        return "Width({!r})".format(self.value)
