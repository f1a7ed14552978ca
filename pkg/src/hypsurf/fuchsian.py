"""Concrete cocompact surface groups and enumeration over them.

A SurfaceGroup is a finite list of real hyperbolic generators together with a
single defining relator word; the constructor checks the relator numerically
and refuses non-hyperbolic generators.  On top of that sit the enumeration
tools: ball (all group elements moving the base point at most R), census
(conjugacy classes of a displacement window, with primitivity and orientation
bookkeeping), g_search (slide a frame along a geodesic and report the group
elements whose normal-form coordinates land in a small box), pants_census
(ordered pants with one boundary pinned to a given class), and
clothesline_search (a chain of pants connecting two classes).

Element identity during enumeration is decided by a fuzzy grid index: entries
are bucketed at 1e-5 with probing of adjacent buckets near cell boundaries.
The bucket size separates two scales measured on the shipped groups: copies
of one element reached along different conjugation paths differ by at most
about 1e-8 (float noise amplified by long products), while distinct elements
stay at least 1e-3 apart in entry distance at every radius used here, because
an entry gap below that would force a group element closer to the identity
than the systole allows.  Tests record both margins.

Conjugacy is decided at desk scale: an element is reduced by greedy
conjugation descent of its axis-to-base-point distance, then grown into the
closure of all conjugates reachable through single-generator moves that keep
that distance below a fixed cut.  Lifts whose axis crosses the central
Dirichlet domain form a single cycle under such moves, and the descent lands
on that cycle, so one closure covers the whole class; a brute-force pairwise
conjugator scan over small windows backs this in the tests.
"""

import math
import os

from . import moebius
from .errors import (AmbiguousHit, BadParameters, CapExceeded, GeometryError,
                     NotFound)
from .geodesy import axis, axis_chart
from .pants import BoxX, b_membership, pants_from_pair

BALL_CAP = 14.0
GRID_STEP = 1e-5
CONJ_TOL = 1e-6
RELATOR_TOL = 1e-9
UNIQUE_EPS = 0.2
T_SCALE = 10.0

_BOLZA_RELATOR = "ADcBadCb"


def point_distance(z, w):
    """Hyperbolic distance between two upper half plane points."""
    dx = z.real - w.real
    dy = z.imag - w.imag
    arg = 1.0 + (dx * dx + dy * dy) / (2.0 * z.imag * w.imag)
    return math.acosh(max(arg, 1.0))


def base_displacement(g):
    """Distance by which g moves the base point i."""
    a, b, c, d = g.real_entries()
    arg = (a * a + b * b + c * c + d * d) / 2.0
    return math.acosh(max(arg, 1.0))


def axis_distance(g):
    """Distance from the base point i to the axis of a hyperbolic g."""
    a, b, c, d = g.real_entries()
    tr = a + d
    frob = a * a + b * b + c * c + d * d
    ratio = (frob - 2.0) / (tr * tr - 4.0)
    return math.acosh(math.sqrt(max(ratio, 1.0)))


def _exact_key(g):
    return g.real_entries()


class _FuzzyIndex:
    """Dictionary on group elements tolerant to last-digit float noise.

    Entries are bucketed on a GRID_STEP lattice; lookups probe the
    neighbouring bucket for any coordinate sitting within a small fraction
    of the cell edge boundary.  Sound as an equality test as long as
    distinct stored elements are farther apart than a couple of grid
    steps, which holds by a wide margin for the groups shipped here.
    """

    __slots__ = ("_cells",)
    _EDGE = 0.05

    def __init__(self):
        self._cells = {}

    @staticmethod
    def _probes(g):
        coords = [x / GRID_STEP for x in g.real_entries()]
        axes = []
        for c in coords:
            base = math.floor(c)
            frac = c - base
            if frac < _FuzzyIndex._EDGE:
                axes.append((base, base - 1))
            elif frac > 1.0 - _FuzzyIndex._EDGE:
                axes.append((base, base + 1))
            else:
                axes.append((base,))
        out = [()]
        for options in axes:
            out = [key + (o,) for key in out for o in options]
        return out

    def get(self, g, default=None):
        for key in self._probes(g):
            if key in self._cells:
                return self._cells[key]
        return default

    def __contains__(self, g):
        return self.get(g) is not None

    def add(self, g, value):
        """Store value under g's primary cell; no-op if already present."""
        probes = self._probes(g)
        for key in probes:
            if key in self._cells:
                return False
        self._cells[probes[0]] = value
        return True

    def pop(self, g):
        for key in self._probes(g):
            if key in self._cells:
                return self._cells.pop(key)
        return None

    def __len__(self):
        return len(self._cells)


class SurfaceGroup:
    """Cocompact Fuchsian group given by generators and one relator word.

    Words use one letter per generator: 'a' is generators[0], 'A' its
    inverse, and so on.  domain_radius bounds the distance from the base
    point i to the farthest point of a fundamental domain centred there;
    it controls enumeration margins and defaults to the largest generator
    displacement, which is safe for the shipped presets.
    """

    __slots__ = ("generators", "relator", "genus", "label", "domain_radius",
                 "_ball_cache")

    def __init__(self, generators, relator, genus, label,
                 domain_radius=None):
        self._ball_cache = {}
        generators = tuple(generators)
        if not generators:
            raise BadParameters("need at least one generator")
        if len(generators) > 26:
            raise BadParameters("word alphabet supports at most 26 generators")
        for g in generators:
            if not g.is_real():
                raise BadParameters("generators must have real entries")
            if g.classify() != "hyperbolic":
                raise BadParameters("generators must be hyperbolic")
        self.generators = generators
        self.relator = relator
        self.genus = genus
        self.label = label
        if domain_radius is None:
            domain_radius = max(float(g.displacement().real)
                                for g in generators)
        self.domain_radius = float(domain_radius)
        res = self.relator_residual()
        if res > RELATOR_TOL:
            raise BadParameters(
                "relator residual %.3e exceeds %.1e" % (res, RELATOR_TOL))

    def evaluate_word(self, word):
        out = moebius.identity()
        for ch in word:
            idx = ord(ch.lower()) - ord("a")
            if not 0 <= idx < len(self.generators):
                raise BadParameters("letter %r outside alphabet" % ch)
            g = self.generators[idx]
            out = out @ (g.inverse() if ch.isupper() else g)
        return out

    def relator_residual(self):
        return self.evaluate_word(self.relator).distance(moebius.identity())

    def symmetric_generators(self):
        """Generators followed by their inverses, in index order."""
        return tuple(self.generators) + tuple(
            g.inverse() for g in self.generators)

    def step(self):
        """Largest base point displacement among the generators."""
        return max(base_displacement(g) for g in self.generators)

    def __repr__(self):
        return "SurfaceGroup(%r, genus=%d, %d generators)" % (
            self.label, self.genus, len(self.generators))


def bolza():
    """Genus-2 group of the regular octagon with opposite-side pairings.

    The four generators translate by 2*acosh(1+sqrt(2)) along axes through
    i at angles k*pi/4.  The relator was found by exhausting length-8
    side-pairing words (each generator once with each sign) and keeping the
    lexicographically least word evaluating to the identity.  The domain
    radius is the octagon circumradius acosh(3+2*sqrt(2)).
    """
    length = 2.0 * math.acosh(1.0 + math.sqrt(2.0))
    t = moebius.translation(length)
    gens = []
    for k in range(4):
        r = moebius.rotation(k * math.pi / 4.0)
        gens.append(r @ t @ r.inverse())
    return SurfaceGroup(gens, _BOLZA_RELATOR, 2, "bolza",
                        domain_radius=math.acosh(3.0 + 2.0 * math.sqrt(2.0)))


def save_preset(group, path):
    """Write a surface group to a text preset (17 significant digits)."""
    lines = ["label %s" % group.label,
             "genus %d" % group.genus,
             "domain_radius %.17g" % group.domain_radius]
    for g in group.generators:
        a, b, c, d = g.real_entries()
        lines.append("generator %.17g %.17g %.17g %.17g" % (a, b, c, d))
    lines.append("relator %s" % group.relator)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_preset(path):
    """Read a surface group written by save_preset."""
    label, genus, radius, relator = None, None, None, None
    gens = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            kind, _, rest = line.partition(" ")
            if kind == "label":
                label = rest.strip()
            elif kind == "genus":
                genus = int(rest)
            elif kind == "domain_radius":
                radius = float(rest)
            elif kind == "generator":
                a, b, c, d = (float(x) for x in rest.split())
                gens.append(moebius.from_entries(a, b, c, d))
            elif kind == "relator":
                relator = rest.strip()
            else:
                raise BadParameters("unknown preset line %r" % line)
    if label is None or genus is None or relator is None or not gens:
        raise BadParameters("preset file incomplete")
    return SurfaceGroup(gens, relator, genus, label, domain_radius=radius)


def preset_path(name):
    """Path of a preset shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", name + ".txt")


# --- ball enumeration ---

def _ball_index(group, radius, prune_pad=None):
    """BFS over products of generators; returns (elements, fuzzy index).

    Keeps every element with base displacement at most radius; expands
    only through elements within radius + prune_pad.  The default pad is
    the domain radius plus slack: when the generators pair the faces of
    the Dirichlet domain about the base point (true for the shipped
    presets), every target element is reached through a face-adjacent
    chain of domains whose centres stay within the domain radius of the
    geodesic to it, so no element of the ball is cut off.

    Results are cached on the group with the radius rounded up to the
    next quarter, so repeated searches at nearby radii share one ball.
    The cached pair is shared; callers must not mutate it.
    """
    syms = group.symmetric_generators()
    if prune_pad is None:
        prune_pad = group.domain_radius + 0.2
    radius = math.ceil(radius * 4.0) / 4.0
    key = (radius, round(prune_pad, 12))
    cached = group._ball_cache.get(key)
    if cached is not None:
        return cached
    limit = radius + prune_pad
    start = moebius.identity()
    seen = _FuzzyIndex()
    seen.add(start, start)
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for s in syms:
                h = g @ s
                if base_displacement(h) > limit:
                    continue
                if seen.add(h, h):
                    nxt.append(h)
        frontier = nxt
    inside = [g for g in seen._cells.values()
              if base_displacement(g) <= radius + 1e-12]
    inside.sort(key=_exact_key)
    index = _FuzzyIndex()
    for g in inside:
        index.add(g, g)
    group._ball_cache[key] = (inside, index)
    return inside, index


def ball(group, radius, cap=BALL_CAP):
    """All group elements moving the base point at most radius.

    Deterministic: the result is sorted by entry tuple.  Raises
    CapExceeded when radius is beyond cap.
    """
    if radius > cap:
        raise CapExceeded("radius %.3f exceeds cap %.3f" % (radius, cap))
    if radius < 0:
        raise BadParameters("radius must be nonnegative")
    elements, _ = _ball_index(group, radius)
    return [g for g in elements if base_displacement(g) <= radius + 1e-12]


# --- conjugacy machinery ---

def _reduce(group, g):
    """Greedy conjugation descent of the axis distance to the base point."""
    syms = group.symmetric_generators()
    current = g
    rho = axis_distance(g)
    for _ in range(200):
        best, best_rho = None, rho
        for s in syms:
            cand = s @ current @ s.inverse()
            r = axis_distance(cand)
            if r < best_rho - 1e-12:
                best, best_rho = cand, r
        if best is None:
            break
        current, rho = best, best_rho
    return current


def _closure(group, reduced, cut):
    """All conjugates reachable via generator moves with axis distance <= cut."""
    syms = group.symmetric_generators()
    seen = _FuzzyIndex()
    seen.add(reduced, reduced)
    frontier = [reduced]
    while frontier:
        nxt = []
        for g in frontier:
            for s in syms:
                h = s @ g @ s.inverse()
                if axis_distance(h) > cut:
                    continue
                if seen.add(h, h):
                    nxt.append(h)
        frontier = nxt
    return sorted(seen._cells.values(), key=_exact_key)


def _class_closure(group, g):
    cut = 2.0 * group.domain_radius + 1.0
    return _closure(group, _reduce(group, g), cut)


def _select_rep(closure):
    """Least closure member by (axis distance, entry order).

    Low axis distance keeps downstream search balls small; the entry
    tiebreak makes the choice deterministic for a fixed input.
    """
    return min(closure, key=lambda w: (axis_distance(w), _exact_key(w)))


def class_representative(group, g):
    """Conjugacy representative: closure member nearest the base point.

    Deterministic for a fixed input, and conjugate inputs agree on the
    class.  The selected member can differ between conjugate inputs when
    the closure holds twins whose sort keys agree to float noise, so
    class identity is tested by closure membership, not by comparing
    two representatives picked from different starting points.
    """
    return _select_rep(_class_closure(group, g))


class GeodesicClass:
    """One conjugacy class of a census window.

    representative is the closure member nearest the base point (entry
    order breaks ties); orientation is True on the member of each
    inverse pair whose representative does not exceed its partner's in
    entry order.
    """

    __slots__ = ("representative", "length", "primitive_length",
                 "multiplicity", "orientation")

    def __init__(self, representative, length, primitive_length,
                 multiplicity, orientation):
        self.representative = representative
        self.length = length
        self.primitive_length = primitive_length
        self.multiplicity = multiplicity
        self.orientation = orientation

    def key(self):
        return _exact_key(self.representative)

    def __repr__(self):
        return ("GeodesicClass(length=%.12g, primitive=%.12g, mult=%d, "
                "forward=%s)" % (self.length, self.primitive_length,
                                 self.multiplicity, self.orientation))


def _enum_margin(group):
    return 2.0 * math.log(math.cosh(group.domain_radius + 0.3)) + 0.3


def _axis_flow(g, length):
    """The element translating by length along the oriented axis of g."""
    chart = axis_chart(axis(g)).inverse()
    return chart @ moebius.translation(length) @ chart.inverse()


def _primitive_split(group, rep, length, index):
    """Return (multiplicity, primitive_length, root at the representative).

    The unique PSL2R element with the representative's oriented axis and
    displacement length/m is looked up in the ball index and accepted
    when its m-th power matches the representative.  Assumes no group
    element is shorter than the smallest generator displacement, which
    holds for the shipped presets.
    """
    sys_bound = min(float(g.displacement().real) for g in group.generators)
    m = int((length + 1e-9) / max(sys_bound - 1e-9, 1e-6))
    while m >= 2:
        root = _axis_flow(rep, length / m)
        hit = index.get(root)
        if hit is not None:
            power = hit
            for _ in range(m - 1):
                power = power @ hit
            if power.distance(rep) <= CONJ_TOL:
                return m, length / m, root
        m -= 1
    return 1, length, rep


def _class_table(group, big_l, window, cap):
    """Enumerate window classes; return (classes, member index).

    The member index maps every stored closure member to the position of
    its class in the returned tuple.  All class identity questions are
    answered by membership in the stored closures, never by comparing
    two independently selected representatives: closures of the shipped
    groups contain twin members whose leading entries agree to float
    noise, so a lexicographic pick is only stable for one fixed input.
    """
    w1, w2 = window
    if not w1 < w2:
        raise BadParameters("window must be an increasing pair")
    lo, hi = big_l + w1, big_l + w2
    if hi > cap:
        raise CapExceeded("window top %.3f exceeds cap %.3f" % (hi, cap))
    if lo < 0:
        lo = 0.0
    radius = min(cap, hi + _enum_margin(group))
    elements, index = _ball_index(group, radius)
    pending = _FuzzyIndex()
    order = []
    for g in elements:
        if g.classify() != "hyperbolic":
            continue
        length = float(g.displacement().real)
        if lo < length < hi:
            if pending.add(g, g):
                order.append(g)
    done = _FuzzyIndex()
    raw = []
    for g in order:
        if done.get(g) is not None:
            continue
        closure = _class_closure(group, g)
        for member in closure:
            done.add(member, True)
        raw.append(closure)
    pairing = _FuzzyIndex()
    for pos, closure in enumerate(raw):
        for member in closure:
            pairing.add(member, pos)
    reps = [_select_rep(closure) for closure in raw]
    built = []
    for pos, closure in enumerate(raw):
        partner = None
        for member in closure:
            partner = pairing.get(member.inverse())
            if partner is not None:
                break
        if partner is None:
            raise GeometryError("census inverse pairing failed")
        rep = reps[pos]
        length = float(rep.displacement().real)
        mult, prim, _ = _primitive_split(group, rep, length, index)
        forward = pos == partner \
            or _exact_key(rep) <= _exact_key(reps[partner])
        built.append(GeodesicClass(rep, length, prim, mult, forward))
    final = sorted(range(len(built)),
                   key=lambda i: (built[i].length, built[i].key()))
    classes = tuple(built[i] for i in final)
    closures = tuple(raw[i] for i in final)
    member_index = _FuzzyIndex()
    for out_pos, closure in enumerate(closures):
        for member in closure:
            member_index.add(member, out_pos)
    return classes, member_index, closures


def _locate_class(group, member_index, g):
    """Class position of g in a member index, or None if outside it."""
    reduced = _reduce(group, g)
    hit = member_index.get(reduced)
    if hit is not None:
        return hit
    for member in _class_closure(group, reduced):
        hit = member_index.get(member)
        if hit is not None:
            return hit
    return None


def census(group, big_l, window, cap=BALL_CAP):
    """Conjugacy classes with displacement in the open window around big_l.

    window is a pair (w1, w2); the census covers lengths in
    (big_l + w1, big_l + w2).  Enumeration runs inside a ball of radius
    min(cap, upper length + margin); the margin covers every lift whose
    axis passes within the domain radius of the base point, so counts are
    complete whenever the cap does not clip that radius.  Output is a
    tuple sorted by (length, entry tuple), deterministic across runs.
    """
    classes, _, _ = _class_table(group, big_l, window, cap)
    return classes


# --- frame search ---

def g_search(group, frame, big_l, eps, t_max=None, t_step=None,
             cap=BALL_CAP, unique_threshold=UNIQUE_EPS):
    """Slide a frame and report elements hitting the eps-box in normal form.

    For each sampled slide t the frame moves distance t to the right along
    its own geodesic; an element g hits when the combination
    (frame_t forward half-length)^-1 g (frame_t backward half-length) has
    normal-form coordinates inside the cube of side 2*eps.  Hits are
    returned as (t, g, (a, b, c, d)) with the a > 0 sign choice, ordered
    by t then by entry tuple.  When eps is at or below unique_threshold
    two distinct hits at one t raise AmbiguousHit.  The internal search
    ball must fit under the cap, so frames far from the base point raise
    CapExceeded rather than returning an incomplete scan.
    """
    if eps <= 0:
        raise BadParameters("eps must be positive")
    if big_l + eps > cap:
        raise CapExceeded("length %.3f exceeds cap %.3f" % (big_l + eps, cap))
    if t_max is None:
        t_max = T_SCALE * math.exp(-big_l / 2.0)
    if t_step is None:
        t_step = t_max / 1000.0
    if t_max < 0 or t_step <= 0:
        raise BadParameters("need t_max >= 0 and t_step > 0")
    offset = 2.0 * point_distance(1j, frame.point())
    radius = big_l + offset + 2.0 * eps + 2.0 * t_max + 1.0
    if radius > cap + 2.0:
        raise CapExceeded(
            "search radius %.3f exceeds cap; move the frame nearer the "
            "base point or raise the cap" % radius)
    elements, _ = _ball_index(group, radius)
    candidates = [g for g in elements if not g.is_identity()]
    box = BoxX.cube(eps)
    forward = moebius.translation(big_l / 2.0)
    half_back = moebius.translation(-big_l / 2.0)
    hits = []
    steps = int(math.floor(t_max / t_step + 1e-9))
    for k in range(steps + 1):
        t = k * t_step
        base = frame.push_right(t).element
        lead = (base @ forward).inverse()
        trail = base @ half_back
        at_t = []
        for g in candidates:
            m = lead @ (g @ trail)
            if not m.is_real():
                continue
            if b_membership(m, box):
                a, b, c, d = m.real_entries()
                if a < 0:
                    a, b, c, d = -a, -b, -c, -d
                at_t.append((_exact_key(g), g, (a, b, c, d)))
        if len(at_t) > 1 and eps <= unique_threshold:
            raise AmbiguousHit("%d elements hit at t=%.6g" % (len(at_t), t))
        for _, g, coords in sorted(at_t):
            hits.append((t, g, coords))
    return hits


# --- pants enumeration ---

def _centralizer_orbit_min(h, root, step):
    """Canonical member of the centralizer orbit of h.

    Walks the orbit h -> root h root^-1 both ways through its base point
    displacement valley and returns the entry-least member of the valley
    floor (displacements within 1e-6 of the minimum).  Valley members
    have small entries, so float copies of one orbit agree on the pick;
    entry-least over a whole displacement-bounded segment would compare
    members deep in the orbit, where noise grows with the entries.  step
    is the orbit translation length, used to decide when a walk has
    passed the valley.
    """
    members = [h]
    best = base_displacement(h)
    for direction in (root, root.inverse()):
        current = h
        while True:
            current = direction @ current @ direction.inverse()
            d = base_displacement(current)
            members.append(current)
            if d < best:
                best = d
            if d > best + 2.0 * step + 2.0:
                break
    floor = [w for w in members if base_displacement(w) <= best + 1e-6]
    return min(floor, key=_exact_key)


def pants_census(group, gamma, r1, r2, r3, big_l, eps, cap=BALL_CAP):
    """Ordered pants with first boundary gamma and the other two in window.

    gamma is a GeodesicClass whose length lies within eps of r1*big_l.
    Returns PantsPair objects (first generator = gamma's representative),
    one per orbit of the second generator under conjugation by the
    centralizer of gamma, sorted by (second length, third length, entry
    tuple).

    Candidate second generators are the stored closure members of every
    class in the second length window: any valid pants has a centralizer
    shift of its second boundary whose axis passes within
    rho(gamma) + primitive/2 + worst-gap of the base point, so the
    closures cover at least one member of every orbit provided that
    reach stays below the closure cut.  When it does not, the search
    would be incomplete and CapExceeded is raised instead.
    """
    for r in (r1, r2, r3):
        if r <= 0:
            raise BadParameters("rates must be positive")
        if r * big_l + eps > cap:
            raise CapExceeded("window %.3f exceeds cap %.3f"
                              % (r * big_l + eps, cap))
    g = gamma.representative
    if abs(gamma.length - r1 * big_l) > eps:
        raise BadParameters("gamma length %.6f outside r1*L window"
                            % gamma.length)
    if not g.is_real() or g.classify() != "hyperbolic":
        raise BadParameters("gamma representative must be real hyperbolic")
    if abs(float(g.displacement().real) - gamma.length) > 1e-6 \
            or gamma.multiplicity < 1 \
            or abs(gamma.multiplicity * gamma.primitive_length
                   - gamma.length) > 1e-6:
        raise BadParameters("gamma fields do not describe its representative")
    rho_g = axis_distance(g)
    l1m = max(r1 * big_l - eps, 1e-6)
    l2m = max(r2 * big_l - eps, 1e-6)
    l3t = r3 * big_l + eps
    gap_top = (math.cosh(l3t / 2.0)
               + math.cosh(l1m / 2.0) * math.cosh(l2m / 2.0)) \
        / (math.sinh(l1m / 2.0) * math.sinh(l2m / 2.0))
    gap_max = math.acosh(max(gap_top, 1.0))
    cut = 2.0 * group.domain_radius + 1.0
    reach = rho_g + gamma.primitive_length / 2.0 + gap_max + 0.1
    if reach > cut:
        raise CapExceeded(
            "orbit reach %.3f exceeds the closure cut %.3f; the window "
            "is too long for a complete desk-scale search" % (reach, cut))
    if gamma.multiplicity == 1:
        root = g
    else:
        root = _axis_flow(g, gamma.primitive_length)
    _, _, closures = _class_table(group, r2 * big_l, (-eps, eps), cap)
    found = _FuzzyIndex()
    pairs = []
    for closure in closures:
        for h in closure:
            l2 = float(h.displacement().real)
            if abs(l2 - r2 * big_l) > eps:
                continue
            try:
                pair = pants_from_pair(g, h)
            except GeometryError:
                continue
            if abs(pair.l3 - r3 * big_l) > eps:
                continue
            anchor = _centralizer_orbit_min(h, root,
                                            gamma.primitive_length)
            if found.add(anchor, pair):
                pairs.append(pair)
    pairs.sort(key=lambda p: (p.l2, p.l3, _exact_key(p.g2)))
    return pairs


def clothesline_search(group, first, last, big_l, eps, n_max=3,
                       cap=BALL_CAP):
    """Chain of unit-rate pants connecting two census classes.

    first and last are GeodesicClass objects with lengths within eps of
    big_l.  Returns a tuple alternating classes and PantsPair edges,
    (c1, P1, c2, ..., cn); consecutive classes are joined by a pants whose
    other boundaries include the inverse of the next class.  Raises
    NotFound when no chain with at most n_max classes exists.
    """
    if not 1 <= n_max <= 3:
        raise BadParameters("n_max must be between 1 and 3")
    classes, member_index, _ = _class_table(group, big_l,
                                            (-eps, eps), cap)
    start = _locate_class(group, member_index, first.representative)
    goal = _locate_class(group, member_index, last.representative)
    if start is None or goal is None:
        raise BadParameters("classes must lie in the length window")
    if start == goal:
        return (first,)
    if n_max == 1:
        raise NotFound("classes differ and n_max is 1")
    paths = {start: (first,)}
    frontier = [start]
    for _ in range(n_max - 1):
        nxt = []
        for here in frontier:
            here_path = paths[here]
            edges = pants_census(group, classes[here], 1, 1, 1,
                                 big_l, eps, cap)
            for pair in edges:
                # cuffs are g1, h, word^-1 with h the generator the word
                # match selected; the recorded g2 may be its inverse
                second = pair.g1.inverse() @ pair.word
                for boundary in (second.inverse(), pair.word):
                    nabe = _locate_class(group, member_index, boundary)
                    if nabe is None or nabe in paths:
                        continue
                    tail = last if nabe == goal else classes[nabe]
                    path = here_path + (pair, tail)
                    paths[nabe] = path
                    if nabe == goal:
                        return path
                    nxt.append(nabe)
        frontier = nxt
        if not frontier:
            break
    raise NotFound("no clothesline within %d classes" % n_max)
