"""Right-angled hexagons spanned by a group element, a coaxial line, and a
prescribed fifth side, with exact and asymptotic width formulas.

The configuration is parametrized by (a, b, c, d, L, J, M) with ad - bc = 1,
Re(a) > 0, J a nonzero boundary point scale, and M a complex width.  The
element under study is

    g = [[a e^{L/2}, b e^{L/2}], [c e^{-L/2}, d e^{-L/2}]].

Sides are oriented geodesics, consecutive ones orthogonal, numbered 1..6:

  1. the base line (infinity -> 0);
  2. the perpendicular from side 1 to side 3;
  3. the invariant line of g, oriented from the root in the minus slot of
     the canonical square root to the plus slot (algebraic order, not
     attracting order);
  4. the perpendicular from side 3 to side 5;
  5. the line (-mh*J -> -J/mh) where mh = tanh(M/2);
  6. the line (-J -> +J).

Perpendiculars between crossing lines are oriented by the positively
oriented frame triple of the ambient three-space (see geodesy).  The side
widths H_1..H_6 are double-cross widths: H_i runs from side i-1 to side i+1
measured along side i (indices mod 6).  With these conventions side 6 has
width exactly M + i pi, and the exact relations hold:

    cosh(H_2) = -N1/N2,
    cosh(H_4) = (N1/N2) cosh(M) + x sinh(M),
    x = (c e^{-L/2} J - b e^{L/2} / J) / N2,

with N1 = a e^{L/2} - d e^{-L/2} and N2 the canonical square root of
trace^2 - 4.  The x formula is the c = 0 stable form of
(D J^2 + (N1^2 - N2^2)/D) / (2 J N2), D = 2 c e^{-L/2}; the two agree
identically because N1^2 - N2^2 = -4bc.

For large L the widths linearize: with x* = (c/a)e^{-L} J - (b/a)/J and
y* = (c/a)e^{-L} J + (b/a)/J (the exact square root of
x*^2 + (4bc/a^2)e^{-L}), there is a sign pair (s1, s2) in {(1,1), (-1,0)}
such that

    H_4 = s1 M + s1 x + O(coth(M) E^2),
    H_5 = s2 i pi + y/sinh(M) + O(E^3 / sinh^3(M)),

where E = (|c| + |b| + |bc| + 1)/|a| * e^{j - L/2} and j = |L/2 - ln|J||.
The sign pair is resolved empirically against the exact widths and is
reported, never assumed.

Two planar specializations drive the perpendicular-foot and parallel-line
reports: J = -i e^{L/2}, M = -i pi/2 places side 5 on the axis through the
base frame of g's chart (foot/angle geometry), and J = e^{L/2} with real
M > 0 places side 5 parallel to side 1 at distance M (gap/slide geometry).
In both, F(a, b, c) = ((c-b)/a, (c+b)/a, 2 ln a) gives the first-order
coefficients.
"""

import math

import mpmath

from . import numeric as nm
from .errors import (
    BadParameters,
    BranchMismatch,
    DegenerateHexagon,
    HypothesisViolated,
    NonpositiveA,
    SharedEndpoint,
)
from .geodesy import OO, OrientedGeodesic, common_perpendicular, double_cross_width
from .moebius import GroupElement
from .width import Width

EXACT_TOL = 1e-9
SIXTH_TOL = 1e-10
LAW_TOL = 1e-8
PLANAR_LAW_TOL = 1e-10
DET_ONE_TOL = 1e-9
REAL_TOL = 1e-12
_SCALE_CAP = 1e12


def _validate_params(a, b, c, d, L, J):
    det = a * d - b * c
    if abs(det - 1) > DET_ONE_TOL * max(1.0, abs(a * d), abs(b * c)):
        raise BadParameters("matrix parameters need determinant 1, got {}".format(det))
    if nm.re(a) < 0:
        a, b, c, d = -a, -b, -c, -d
    if nm.re(a) == 0:
        raise BadParameters("leading parameter must have positive real part")
    if J == 0:
        raise BadParameters("scale J must be nonzero")
    return a, b, c, d


def _derived_scalars(a, b, c, d, L, J, M):
    """The algebraic skeleton: root slots, x, and the fifth-side endpoints."""
    eh = nm.exp(L / 2)
    n1 = a * eh - d / eh
    tr = a * eh + d / eh
    n2 = nm.canonical_sqrt(tr * tr - 4)
    dd = 2 * c / eh
    if abs(n2) <= 1e-13 * max(1.0, abs(tr)):
        raise DegenerateHexagon("element has no axis (trace {} parabolic)".format(tr))
    # Root slots from whichever exact form has the larger denominator;
    # (n1 - n2)(n1 + n2) = -4bc makes the two forms identical.
    plus_den = n1 + n2
    minus_den = n1 - n2
    if abs(plus_den) >= abs(minus_den):
        e0 = -2 * b * eh / plus_den
        e1 = OO if dd == 0 else plus_den / dd
    else:
        e0 = OO if dd == 0 else minus_den / dd
        e1 = -2 * b * eh / minus_den
    x = (c * J / eh - b * eh / J) / n2
    mhat = nm.tanh(M.value / 2)
    if abs(mhat) <= 1 / _SCALE_CAP or abs(mhat) >= _SCALE_CAP:
        raise DegenerateHexagon("fifth side degenerates at tanh(M/2) = {}".format(mhat))
    f0 = -mhat * J
    f1 = -J / mhat
    return {
        "diag_gap": n1, "trace_root": n2, "lower_coef": dd,
        "axis_tail": e0, "axis_head": e1, "half_tanh": mhat,
        "fifth_tail": f0, "fifth_head": f1, "shear_term": x,
    }


class HexagonH:
    """A built hexagon: six oriented sides, six signed complex widths, and
    the derived scalars.  lines[i] and widths[i] hold side i+1; a side whose
    construction degenerated is None (only with allow_degenerate)."""

    __slots__ = ("params", "lines", "widths", "derived", "degenerate", "notes")

    def __init__(self, params, lines, widths, derived, degenerate, notes):
        self.params = params
        self.lines = lines
        self.widths = widths
        self.derived = derived
        self.degenerate = degenerate
        self.notes = notes

    def element(self):
        """The group element spanning side 3."""
        a, b, c, d = (self.params[k] for k in ("a", "b", "c", "d"))
        eh = nm.exp(self.params["L"] / 2)
        return GroupElement(a * eh, b * eh, c / eh, d / eh)

    def __repr__(self):
        return "HexagonH(widths={!r}, degenerate={!r})".format(
            self.widths, self.degenerate)


def build_hexagon(a, b, c, d, L, J, M, allow_degenerate=False):
    """Construct the hexagon and measure all six widths geometrically.

    M may be a Width or a complex number.  Degenerate configurations
    (coinciding side endpoints, parabolic element) raise DegenerateHexagon
    unless allow_degenerate is set, in which case the impossible sides are
    None and their widths are filled from the closed forms where finite.
    """
    if not isinstance(M, Width):
        M = Width(M)
    a, b, c, d = _validate_params(a, b, c, d, L, J)
    derived = _derived_scalars(a, b, c, d, L, J, M)
    params = {"a": a, "b": b, "c": c, "d": d, "L": L, "J": J, "M": M}

    notes = []
    lines = [None] * 6
    lines[0] = OrientedGeodesic(OO, 0.0 * J)
    lines[2] = OrientedGeodesic(derived["axis_tail"], derived["axis_head"])
    lines[4] = OrientedGeodesic(derived["fifth_tail"], derived["fifth_head"])
    lines[5] = OrientedGeodesic(-J, J)
    for idx, pair in ((1, (0, 2)), (3, (2, 4))):
        try:
            lines[idx] = common_perpendicular(lines[pair[0]], lines[pair[1]])
        except (SharedEndpoint, BadParameters) as exc:
            if not allow_degenerate:
                raise DegenerateHexagon(
                    "side {} degenerates: {}".format(idx + 1, exc))
            notes.append("side {} degenerate: {}".format(idx + 1, exc))

    widths = [None] * 6
    for i in range(6):
        mid, fst, snd = lines[i], lines[(i - 1) % 6], lines[(i + 1) % 6]
        if mid is None or fst is None or snd is None:
            continue
        try:
            widths[i] = double_cross_width(fst, snd, mid)
        except (SharedEndpoint, BadParameters) as exc:
            if not allow_degenerate:
                raise DegenerateHexagon(
                    "width {} degenerates: {}".format(i + 1, exc))
            notes.append("width {} degenerate: {}".format(i + 1, exc))

    degenerate = bool(notes)
    if degenerate:
        # Continuity values from the closed forms for the missing widths.
        w2, w4, w6, _ = exact_widths(a, b, c, d, L, J, M)
        for i, w in ((1, w2), (3, w4), (5, w6)):
            if widths[i] is None:
                widths[i] = w
                notes.append("width {} filled from closed form".format(i + 1))

    derived = dict(derived)
    derived.update(_asym_scales(a, b, c, L, J))
    return HexagonH(params, tuple(lines), tuple(widths), derived, degenerate, notes)


def _asym_scales(a, b, c, L, J):
    lf = float(nm.re(L))
    j = abs(lf / 2 - math.log(float(abs(J))))
    escale = (abs(c) + abs(b) + abs(b * c) + 1) / abs(a) * math.exp(j - lf / 2)
    ystar = (c / a) * nm.exp(-L) * J + (b / a) / J
    xstar = (c / a) * nm.exp(-L) * J - (b / a) / J
    return {"radius_gap": j, "error_scale": float(escale),
            "shear_lin": xstar, "shear_twin": ystar}


def _align_branch(cosh_value, reference, tol=EXACT_TOL):
    """Width with the given cosh, on the branch nearest the reference."""
    h = Width(nm.acosh(cosh_value))
    if reference is None:
        return h.canonical()
    plus, minus = h, -h
    dp = plus.distance(reference)
    dm = minus.distance(reference)
    best = plus if dp <= dm else minus
    scale = max(1.0, abs(reference.value))
    if min(dp, dm) > tol * scale:
        raise BranchMismatch(
            "no acosh branch within {} of {!r}".format(tol, reference))
    return best


def exact_widths(a, b, c, d, L, J, M, reference=None):
    """Closed-form widths (H2, H4, H6) and the shear x.

    Without a reference, H2 and H4 sit on the canonical branch (Re >= 0,
    tie Im >= 0).  With reference = a HexagonH or a (w2, w4, w6) triple, each
    is aligned to the matching geometric width and BranchMismatch is raised
    if neither acosh branch agrees within 1e-9.
    """
    if not isinstance(M, Width):
        M = Width(M)
    a, b, c, d = _validate_params(a, b, c, d, L, J)
    der = _derived_scalars(a, b, c, d, L, J, M)
    n1, n2, x = der["diag_gap"], der["trace_root"], der["shear_term"]
    ref2 = ref4 = ref6 = None
    if reference is not None:
        trio = reference.widths[1::2] if isinstance(reference, HexagonH) else reference
        ref2, ref4, ref6 = trio
    pi = nm.pi_of(x)
    w6 = Width(M.value + 1j * pi)
    cosh2 = -n1 / n2
    cosh4 = (n1 / n2) * nm.cosh(M.value) + x * nm.sinh(M.value)
    w2 = _align_branch(cosh2, ref2)
    w4 = _align_branch(cosh4, ref4)
    return w2, w4, w6, x


class AsymptoticWidths:
    """Linearized widths with the empirically resolved sign pair."""

    __slots__ = ("w4", "w5", "x", "y", "sigma1", "sigma2", "error_scale",
                 "budget_w4", "budget_w5", "resid_w4", "resid_w5", "matched")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def __repr__(self):
        return ("AsymptoticWidths(sigma=({}, {}), w4={!r}, w5={!r}, "
                "matched={})".format(self.sigma1, self.sigma2, self.w4,
                                     self.w5, self.matched))


def asymptotic_widths(a, b, c, d, L, J, M, match_tol=None):
    """Large-L width approximations H4 ~ s1(M + x*), H5 ~ s2 i pi + y*/sinh M.

    The sign pair (s1, s2) in {(1,1), (-1,0)} is chosen by comparing both
    candidates against the exact H4 and the geometric H5; matched reports
    whether the winner's residuals fit within match_tol (default: 10 times
    each budget).  Raises HypothesisViolated when the hypotheses j < L/2 and
    |M| > E fail.
    """
    if not isinstance(M, Width):
        M = Width(M)
    a, b, c, d = _validate_params(a, b, c, d, L, J)
    scales = _asym_scales(a, b, c, L, J)
    j, escale = scales["radius_gap"], scales["error_scale"]
    if j >= float(nm.re(L)) / 2:
        raise HypothesisViolated("scale gap j = {} is not below L/2".format(j))
    if abs(M.value) <= escale:
        raise HypothesisViolated(
            "|M| = {} is not above the error scale {}".format(abs(M.value), escale))
    xstar, ystar = scales["shear_lin"], scales["shear_twin"]
    sh = nm.sinh(M.value)
    ch = nm.cosh(M.value)
    # Using the linearized shear terms costs a coth(M) cross-term of size
    # E^2 in both widths; it vanishes when M = -i pi/2 (coth = 0), where the
    # cubic term is what remains.  Budgets carry both contributions.
    coth = float(abs(ch / sh))
    budget4 = coth * escale ** 2 + escale ** 3
    budget5 = (coth * escale ** 2 + escale ** 3 / float(abs(sh)) ** 2) / float(abs(sh))
    pi = nm.pi_of(xstar)

    try:
        hexa = build_hexagon(a, b, c, d, L, J, M, allow_degenerate=True)
        w4_ref = hexa.widths[3]
        w5_ref = hexa.widths[4]
    except DegenerateHexagon:
        w4_ref = w5_ref = None
    if w4_ref is not None:
        _, w4_exact, _, _ = exact_widths(a, b, c, d, L, J, M, reference=hexa)
    else:
        w4_exact = exact_widths(a, b, c, d, L, J, M)[1]

    candidates = []
    for s1, s2 in ((1, 1), (-1, 0)):
        w4p = Width(s1 * (M.value + xstar))
        w5p = Width(s2 * 1j * pi + ystar / sh)
        r4 = w4p.distance(w4_exact)
        r5 = w5p.distance(w5_ref) if w5_ref is not None else 0.0
        candidates.append((r4 + r5, s1, s2, w4p, w5p, r4, r5))
    candidates.sort(key=lambda t: t[0])
    _, s1, s2, w4p, w5p, r4, r5 = candidates[0]
    if match_tol is None:
        ok4 = r4 <= 10 * budget4
        ok5 = (w5_ref is None) or (r5 <= 10 * budget5)
    else:
        ok4 = r4 <= match_tol
        ok5 = (w5_ref is None) or (r5 <= match_tol)
    return AsymptoticWidths(
        w4=w4p, w5=w5p, x=xstar, y=ystar, sigma1=s1, sigma2=s2,
        error_scale=escale, budget_w4=budget4, budget_w5=budget5,
        resid_w4=r4, resid_w5=(r5 if w5_ref is not None else None),
        matched=bool(ok4 and ok5))


# --- planar first-order reports ---

def F_map(a, b, c):
    """First-order coefficient triple ((c-b)/a, (c+b)/a, 2 ln a), real a > 0."""
    if not a > 0:
        raise NonpositiveA("coefficient map needs a > 0, got {}".format(a))
    log_a = mpmath.log(a) if nm.is_extended(a) else math.log(a)
    return ((c - b) / a, (c + b) / a, 2 * log_a)


def _require_real(a, b, c, d):
    for v in (a, b, c, d):
        if abs(nm.im(v)) > REAL_TOL * (1 + abs(v)):
            raise BadParameters("this report needs real matrix parameters")
    return (float(nm.re(a)), float(nm.re(b)), float(nm.re(c)), float(nm.re(d)))


def _bscale(a, b, c, d):
    return max(abs(math.log(a)), abs(b), abs(c), abs(d - 1))


class Report:
    """Estimate/exact/budget rows keyed by quantity name."""

    __slots__ = ("rows", "bscale")

    def __init__(self, rows, bscale):
        self.rows = rows
        self.bscale = bscale

    def __getitem__(self, key):
        return self.rows[key]

    def __repr__(self):
        return "Report({!r})".format(self.rows)


def _row(estimate, exact, budget):
    return {"estimate": estimate, "exact": exact,
            "error": abs(exact - estimate), "budget": budget}


def perp_report(a, b, c, d, L):
    """Foot distance, crossing angle, and translation length of
    [[a e^{L/2}, b e^{L/2}], [c e^{-L/2}, d e^{-L/2}]] against the axis of
    the chart frame, with first-order estimates and error budgets.

    The foot estimate F1 e^{-L/2} is signed: positive when the feet sit on
    the right side of the measuring axis.  Budgets are (B+1)^k e^{-L} with
    k = 3, 2, 1 for foot, angle, length, B = max(|ln a|, |b|, |c|, |d-1|).
    """
    a, b, c, d = _require_real(a, b, c, d)
    f1, f2, f3 = F_map(a, b, c)
    bsc = _bscale(a, b, c, d)
    eh = math.exp(L / 2)
    hexa = build_hexagon(a, b, c, d, L, J=-1j * eh, M=Width(-1j * math.pi / 2))
    w4, w5 = hexa.widths[3], hexa.widths[4]
    foot_exact = float(nm.re(w5.value))
    angle_exact = float(nm.im(w4.value))
    g = hexa.element()
    length_exact = float(nm.re(g.displacement().value))
    el = math.exp(-L)
    rows = {
        "foot": _row(f1 / eh, foot_exact, (bsc + 1) ** 3 * el),
        "angle": _row(math.pi / 2 + f2 / eh, angle_exact, (bsc + 1) ** 2 * el),
        "length": _row(L + f3, length_exact, (bsc + 1) * el),
    }
    return Report(rows, bsc)


def parallel_report(a, b, c, d, L, M):
    """Gap, slide, and translation length against a line at distance M on
    the left of the chart frame axis, with first-order estimates.

    slide is the signed offset Re(H5) along the measuring perpendicular
    between the two feet (foot on the distant line minus foot on the axis
    of g, in the perpendicular's direction).
    """
    if not isinstance(M, Width):
        M = Width(M)
    a, b, c, d = _require_real(a, b, c, d)
    if not float(nm.re(M.value)) > 0:
        raise BadParameters("parallel gap M must have positive real part")
    f1, f2, f3 = F_map(a, b, c)
    bsc = _bscale(a, b, c, d)
    eh = math.exp(L / 2)
    hexa = build_hexagon(a, b, c, d, L, J=eh, M=M)
    w4, w5 = hexa.widths[3], hexa.widths[4]
    gap_exact = abs(float(nm.re(w4.value)))
    slide_exact = float(nm.re(w5.value))
    length_exact = float(nm.re(hexa.element().displacement().value))
    m = float(nm.re(M.value))
    sh, ch = math.sinh(m), math.cosh(m)
    el = math.exp(-L)
    # The slide carries a coth(M) e^{-L} cross-term from evaluating the
    # sinh at M instead of at the true gap M + F1 e^{-L/2}; the cubic term
    # takes over only when M shrinks with L.
    slide_budget = ((bsc + 1) ** 2 * (ch / sh) * el / sh
                    + (bsc + 1) ** 3 * math.exp(-1.5 * L) / abs(sh) ** 3)
    rows = {
        "gap": _row(m + f1 / eh, gap_exact, (bsc + 1) ** 2 * (ch / sh) * el),
        "slide": _row(f2 / (eh * sh), slide_exact, slide_budget),
        "length": _row(L + f3, length_exact, (bsc + 1) * el),
    }
    return Report(rows, bsc)


def lemma_x_report(a, b, c, d, L, m, k, sign=1):
    """Axis gap for a line at distance m1 e^{-m2 L} met at offset k1 + k2 L
    along the chart frame axis: estimate M, exact |Re H4|, budget
    ((|c|+|b|+1)/a) e^{k1 + (k2 - 1/2) L}.
    """
    m1, m2 = m
    k1, k2 = k
    a, b, c, d = _require_real(a, b, c, d)
    if not (0 <= m2 < 0.5):
        raise HypothesisViolated("need 0 <= m2 < 1/2, got {}".format(m2))
    if k2 < 0:
        raise HypothesisViolated("need k2 >= 0, got {}".format(k2))
    mval = m1 * math.exp(-m2 * L)
    kval = k1 + k2 * L
    jval = math.exp(sign * kval + L / 2)
    # Closed forms only: the geometric build loses orthogonality digits when
    # the endpoint spread reaches e^{L(1/2 + k2)}.
    _, w4, _, _ = exact_widths(a, b, c, d, L, jval, Width(mval))
    gap_exact = abs(float(nm.re(w4.value)))
    budget = (abs(c) + abs(b) + 1) / a * math.exp(k1 + (k2 - 0.5) * L)
    return Report({"gap": _row(mval, gap_exact, budget)}, _bscale(a, b, c, d))


def law_residuals(widths):
    """Relative residuals of the hexagon laws for six complex widths.

    Returns (sines_residual, cosines_residuals):
    * sines: the three ratios sinh(H1)/sinh(H4), sinh(H3)/sinh(H6),
      sinh(H5)/sinh(H2) must agree; the residual is the largest pairwise
      difference over the largest ratio magnitude.
    * cosines: per side i, the relative residual of
      cosh(Hi) = cosh(H(i-2)) cosh(H(i+2)) + sinh(H(i-2)) sinh(H(i+2)) cosh(H(i+3)).
    """
    vals = [w.value for w in widths]
    sh = [nm.sinh(v) for v in vals]
    ch = [nm.cosh(v) for v in vals]
    ratios = [sh[0] / sh[3], sh[2] / sh[5], sh[4] / sh[1]]
    scale = max(1.0, max(abs(r) for r in ratios))
    sines = max(abs(ratios[i] - ratios[(i + 1) % 3]) for i in range(3)) / scale
    cosines = []
    for i in range(6):
        lhs = ch[i]
        rhs = ch[(i - 2) % 6] * ch[(i + 2) % 6] \
            + sh[(i - 2) % 6] * sh[(i + 2) % 6] * ch[(i + 3) % 6]
        cosines.append(float(abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))))
    return float(sines), cosines
