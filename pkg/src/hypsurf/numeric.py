"""Scalar helpers that work on both machine complex numbers and mpmath numbers.

All geometry code in this package calls these wrappers instead of cmath or
mpmath directly.  A value is treated as extended precision when it is an
mpmath number; everything else goes through cmath.  Mixing is resolved in
mpmath's favour by the caller (see to_extended).

Branch conventions used package-wide:

* log and sqrt are principal (imaginary part in (-pi, pi], cut on the
  negative real axis).
* canonical_sqrt picks the root with Re >= 0, breaking the Re == 0 tie by
  Im >= 0.
* strip_reduce moves the imaginary part into (-pi, pi] by subtracting an
  integer multiple of 2*pi*i.  This is the normal form for translation
  widths, which are only defined modulo 2*pi*i.
"""

import cmath
import math

import mpmath


def is_extended(z):
    """True when z is an mpmath scalar (mpf or mpc)."""
    return hasattr(z, "_mpf_") or hasattr(z, "_mpc_")


def to_extended(z, dps=None):
    """Convert a scalar to mpmath at the current (or given) working precision."""
    if dps is not None:
        mpmath.mp.dps = dps
    return mpmath.mpmathify(z)


def to_machine(z):
    """Convert any scalar to a python complex."""
    return complex(z)


def re(z):
    return z.real if hasattr(z, "real") else z


def im(z):
    return z.imag if hasattr(z, "imag") else 0.0


def pi_of(z):
    """The constant pi at the precision of z."""
    return mpmath.pi if is_extended(z) else math.pi


def exp(z):
    return mpmath.exp(z) if is_extended(z) else cmath.exp(z)


def log(z):
    return mpmath.log(z) if is_extended(z) else cmath.log(z)


def sqrt(z):
    return mpmath.sqrt(z) if is_extended(z) else cmath.sqrt(z)


def cos(z):
    return mpmath.cos(z) if is_extended(z) else cmath.cos(z)


def sin(z):
    return mpmath.sin(z) if is_extended(z) else cmath.sin(z)


def cosh(z):
    return mpmath.cosh(z) if is_extended(z) else cmath.cosh(z)


def sinh(z):
    return mpmath.sinh(z) if is_extended(z) else cmath.sinh(z)


def tanh(z):
    return mpmath.tanh(z) if is_extended(z) else cmath.tanh(z)


def acosh(z):
    return mpmath.acosh(z) if is_extended(z) else cmath.acosh(z)


def asinh(z):
    return mpmath.asinh(z) if is_extended(z) else cmath.asinh(z)


def atanh(z):
    return mpmath.atanh(z) if is_extended(z) else cmath.atanh(z)


def canonical_sqrt(z):
    """Square root with Re >= 0, ties (Re == 0) broken toward Im >= 0."""
    w = sqrt(z)
    if re(w) < 0 or (re(w) == 0 and im(w) < 0):
        w = -w
    return w


def strip_reduce(z):
    """Shift z by a multiple of 2*pi*i so that Im(z) lands in (-pi, pi]."""
    pi = pi_of(z)
    y = im(z)
    if -pi < y <= pi:
        return z
    if is_extended(z):
        k = mpmath.ceil((y - pi) / (2 * pi))
        return mpmath.mpc(re(z), y - 2 * pi * k)
    k = math.ceil((y - pi) / (2 * pi))
    return complex(re(z), y - 2 * pi * k)


def close(a, b, tol):
    """Absolute closeness test that tolerates mixed machine/extended inputs."""
    return abs(complex(a) - complex(b)) <= tol
