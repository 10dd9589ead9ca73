"""Satellite assembly onto the two-handle torus template.

The base diagram is the Gompf standard form picture of D*T^2: two
1-handles (A and B) and one 2-handle component, the core curve, whose
attaching circle reads a commutator in the handle generators.  The
companion circle of the core threads the four attaching balls

    lA, lB on the left edge and rA, rB on the right edge

through four corridor ribbons, each with a fixed drawn shape:

    alpha   rB -> lA   plain diagonal across the strip
    beta    lA -> lB   hairpin folding at the far right
    gamma   lB -> rA   zigzag running over the top of the strip
    delta   rA -> rB   hairpin folding mid strip

Satellite curves are drawn as exact vertical translates of the ribbon
paths, one corridor layer per nesting depth, deeper curves pushed
higher.  At a ball a curve either dives through the 1-handle, slanting
into a boundary slot stacked above the companion's, or folds over the
top of the ball and comes back down into the next ribbon.  Within one
layer the diving legs hug the far side of their band, away from the
gap between the ball's two bands, so a strand that dives at one end
and folds at the other crosses its neighbours exactly where the
ordering forces it to.  All coordinates are rational and the event
word is read off by an exact sweep, so equal inputs give equal
diagrams.
"""

import fractions

from .front_diagram import (FrontDiagram, Cross, LeftCusp, RightCusp,
                            components, validate_front)
from . import polytope as pt

_F = fractions.Fraction

# Ball stations in companion order and the ribbon wiring between them.
_DEPART = {"lA": "beta", "lB": "gamma", "rA": "delta", "rB": "alpha"}
_START = {"alpha": "rB", "beta": "lA", "gamma": "lB", "delta": "rA"}
_END = {"alpha": "lA", "beta": "lB", "gamma": "rA", "delta": "rB"}
_MIRROR = {"lA": "rA", "rA": "lA", "lB": "rB", "rB": "lB"}
_HANDLE = {"lA": 0, "rA": 0, "lB": 1, "rB": 1}

# Entry ball of a handle pass by handle letter and slope sign: a curve
# moving in +x crosses the right vertical wall of the torus square, one
# moving in +y crosses the top wall.
_ENTRY = {("A", 1): "rA", ("A", -1): "lA", ("B", 1): "lB", ("B", -1): "rB"}

# Per ball: the ribbons forming its upper and lower strand bands.
_BALL_SIDES = {
    "lA": ("alpha", "beta"),
    "lB": ("gamma", "beta"),
    "rA": ("delta", "gamma"),
    "rB": ("delta", "alpha"),
}

# Drawn companion ribbons, in traversal order, z = -strand level.  The
# interior x-extremum vertices are the companion's four cusps.
_STRIP_W = 8

def _path(*pts):
    return tuple((_F(int(x * 2), 2), _F(int(z * 2), 2)) for x, z in pts)

_RIBBON_PATH = {
    "alpha": _path((8, -4), (7.5, -4), (6.5, -4), (5.5, -4), (4.5, -2),
                   (3.5, -2), (2.5, -3), (1.5, -1), (0.5, -1), (0, -1)),
    "beta": _path((0, -2), (0.5, -2), (1.5, -3), (2.5, -5), (3.5, -5),
                  (4.5, -3), (5.5, -5), (6.5, -5), (7, -5.5), (6.5, -6),
                  (5.5, -6), (4.5, -4), (3.5, -6), (2.5, -6), (1.5, -4),
                  (0.5, -4), (0, -4)),
    "gamma": _path((0, -3), (0.5, -3), (1.5, -2), (2.5, -4), (3.5, -4),
                   (4, -3.5), (3.5, -3), (2.5, -2), (2, -1.5), (2.5, -1),
                   (3.5, -1), (4.5, -1), (5.5, -3), (6.5, -2), (7.5, -2),
                   (8, -2)),
    "delta": _path((8, -1), (7.5, -1), (6.5, -1), (5.5, -1), (5, -1.5),
                   (5.5, -2), (6.5, -3), (7.5, -3), (8, -3)),
}
_RIBBON_CORNERS = {"alpha": (), "beta": (8,), "gamma": (5, 8), "delta": (4,)}

# Vertical spacings: depth layers, same-layer end ordering, edge slots.
_ETA = _F(1, 16)
_MU = _F(1, 1024)
_NU = _F(1, 8192)

# Ball fold shape: corridor cut, apex, and landing x offsets from the
# edge, staggered per rider so deeper folds enclose shallower ones.
_FOLD_CUT = _F(3, 4)
_FOLD_APEX = _F(7, 16)
_FOLD_X_STEP = _F(1, 1024)
_FOLD_LAND = _F(1, 512)
_FOLD_RISE = _F(5, 8)
_FOLD_Z_STEP = _F(1, 40)
# B-station folds shift outward so no two fold vertices share an x.
_FOLD_SKEW = {"lA": 0, "rA": 0, "lB": _F(1, 64), "rB": _F(1, 64)}
_FOLD_DIR = {"lA": 1, "rA": 1, "lB": -1, "rB": -1}
_CORNER_JITTER = _F(1, 64)
_SERIAL_STEP = _F(1, 1 << 21)
_INTERIOR_BIAS = _F(1, 1 << 26)


class SatelliteError(ValueError):
    pass


def _itinerary(slope):
    """Canonical forward ribbon itinerary of a primitive slope curve.

    Handle passes are clustered (all x passes, then all y passes) and the
    connecting arcs ride the companion forward, folding over every ball
    they pass without entering.
    """
    a, b = slope
    passes = [("A", 1 if a > 0 else -1)] * abs(a)
    passes += [("B", 1 if b > 0 else -1)] * abs(b)
    transits = []
    for i, p in enumerate(passes):
        target = _ENTRY[passes[(i + 1) % len(passes)]]
        ribbon = _DEPART[_MIRROR[_ENTRY[p]]]
        transits.append(ribbon)
        while _END[ribbon] != target:
            ribbon = _DEPART[_END[ribbon]]
            transits.append(ribbon)
    return transits


def _curve_data(slopes):
    """Curves (name, depth, transits) and their joins.

    Join i sits between transit i and transit i+1: a ride folds over the
    shared ball, a dive crosses to the mirror ball through the handle.
    """
    curves = [("core", 0, ["alpha", "delta", "gamma", "beta"])]
    for depth, slope in enumerate(slopes, start=1):
        a, b = slope
        if (a, b) == (0, 0):
            raise SatelliteError("slope (0,0) has no conormal curve")
        curves.append(("(%d,%d)" % (a, b), depth, _itinerary(slope)))
    joined = []
    for name, depth, transits in curves:
        joins = []
        for i, rib in enumerate(transits):
            nxt = transits[(i + 1) % len(transits)]
            s_end, s_start = _END[rib], _START[nxt]
            if s_start == s_end:
                joins.append(("ride", s_end))
            elif s_start == _MIRROR[s_end]:
                joins.append(("dive", s_end, s_start))
            else:
                raise SatelliteError("itinerary breaks the companion order")
        joined.append((name, depth, transits, joins))
    return joined


def _band_of(station, ribbon):
    up, lo = _BALL_SIDES[station]
    if ribbon == up:
        return True
    if ribbon == lo:
        return False
    raise SatelliteError("ribbon %s does not meet ball %s"
                         % (ribbon, station))


def _port_z(station, ribbon):
    path = _RIBBON_PATH[ribbon]
    if _START[ribbon] == station:
        return path[0][1]
    return path[-1][1]


def _end_rank(kind, station, ribbon, jidx, length):
    """Micro offset rank of an arc end inside its depth layer.

    Diving legs keep to the far side of the band, away from the gap
    between the ball's two bands; folding legs keep to the near side.
    """
    t = _F(jidx + 1, length + 2)
    upper = _band_of(station, ribbon)
    if kind == "dive":
        return 1 + t if upper else t
    return t if upper else 1 + t


class _Tables:
    """Slot and rider bookkeeping shared by every curve."""

    def __init__(self, curves):
        self.slots = {(s, r): [] for s in _MIRROR for r in _BALL_SIDES[s]}
        self.riders = {s: [] for s in _MIRROR}
        for ci, (_, depth, transits, joins) in enumerate(curves):
            for i, join in enumerate(joins):
                key = (depth, i)
                if join[0] == "dive":
                    _, s_arr, s_dep = join
                    arr_rib = transits[i]
                    dep_rib = transits[(i + 1) % len(transits)]
                    self.slots[(s_arr, arr_rib)].append(key)
                    self.slots[(s_dep, dep_rib)].append(key)
                else:
                    self.riders[join[1]].append(key)
        for band in self.slots.values():
            band.sort()
        for lst in self.riders.values():
            lst.sort()

    def slot_z(self, station, ribbon, key):
        band = self.slots[(station, ribbon)]
        return _port_z(station, ribbon) + band.index(key) * _NU

    def rider_rank(self, station, key):
        return self.riders[station].index(key)

    def ball_stack(self, station):
        """Slot keys top to bottom: upper band then lower, deepest first."""
        up, lo = _BALL_SIDES[station]
        return (list(reversed(self.slots[(station, up)]))
                + list(reversed(self.slots[(station, lo)])))


def _trim_tail(verts, x_cut, left):
    """Cut a polyline back from its port end to the line x = x_cut."""
    beyond = (lambda x: x < x_cut) if left else (lambda x: x > x_cut)
    out = list(verts)
    last = None
    while beyond(out[-1][0]):
        last = out.pop()
    if last is not None:
        a, b = out[-1], last
        if a[0] == b[0]:
            raise SatelliteError("degenerate segment at a fold cut")
        t = (x_cut - a[0]) / (b[0] - a[0])
        out.append((x_cut, a[1] + (b[1] - a[1]) * t))
    return out


def _trim_head(verts, x_cut, left):
    return list(reversed(_trim_tail(list(reversed(verts)), x_cut, left)))


def _transit_verts(ribbon, depth, r_start, r_end, serial):
    """Translate copy of a ribbon path with lerped micro offset.

    Corner vertices take a per copy x jitter so no two copies cusp at
    the same sweep column; the companion itself stays exact.
    """
    path = _RIBBON_PATH[ribbon]
    corners = set(_RIBBON_CORNERS[ribbon])
    n = len(path) - 1
    out = []
    for j, (x, z) in enumerate(path):
        r = r_start + (r_end - r_start) * _F(j, n)
        off = depth * _ETA + r * _MU
        if depth > 0 and 0 < j < n:
            # keeps parallel translate copies from meeting exactly on
            # a shared vertex column
            off += serial * _INTERIOR_BIAS
        if j in corners and depth > 0:
            x = x + off * _CORNER_JITTER + serial * _SERIAL_STEP
        out.append((x, z + off))
    return out


def _fold_geometry(tables, station, key):
    """Cut, apex and landing coordinates of one around-ball fold.

    Folds point away from the gap between the bands: top band balls fold
    toward the strip top, bottom band balls toward the strip bottom.
    Deeper riders at the same ball fold wider on both axes.
    """
    k = tables.rider_rank(station, key)
    skew = _FOLD_SKEW[station]
    upper, lower = _BALL_SIDES[station]
    if _FOLD_DIR[station] > 0:
        apex_z = _port_z(station, upper) + _FOLD_RISE + k * _FOLD_Z_STEP
    else:
        apex_z = _port_z(station, lower) - _FOLD_RISE - k * _FOLD_Z_STEP
    left = station in ("lA", "lB")
    cut = _FOLD_CUT + skew + k * _FOLD_X_STEP
    apex = _FOLD_APEX - skew - k * _FOLD_X_STEP
    if not left:
        cut, apex = _STRIP_W - cut, _STRIP_W - apex
    land = cut - _FOLD_LAND if left else cut + _FOLD_LAND
    return left, cut, apex, land, apex_z


def _curve_chains(tables, curve, serials):
    """Draw one curve: a list of open polylines, one per handle dive."""
    name, depth, transits, joins = curve
    L = len(transits)

    def rank(end_kind, jidx, station, ribbon):
        if depth == 0:
            return _F(0)
        return _end_rank(end_kind, station, ribbon, jidx, L)

    verts = []
    for i, rib in enumerate(transits):
        j_in, j_out = (i - 1) % L, i
        r0 = rank(joins[j_in][0], j_in, _START[rib], rib)
        r1 = rank(joins[j_out][0], j_out, _END[rib], rib)
        verts.append(_transit_verts(rib, depth, r0, r1, serials[i]))

    chains = []
    for d_i in (i for i in range(L) if joins[i][0] == "dive"):
        seq = [(d_i + 1) % L]
        while joins[seq[-1]][0] == "ride":
            seq.append((seq[-1] + 1) % L)

        first = seq[0]
        rib = transits[first]
        station = _START[rib]
        cv = list(verts[first])
        x0, _ = cv[0]
        cv[0] = (x0, tables.slot_z(station, rib,
                                   (depth, (first - 1) % L)))
        for prev, cur in zip(seq, seq[1:]):
            _, station = joins[prev]
            left, cut, apex, land, z_top = \
                _fold_geometry(tables, station, (depth, prev))
            cv = _trim_tail(cv, cut, left)
            nxt = _trim_head(verts[cur], land, left)
            cv += [(apex, z_top)] + nxt
        last = seq[-1]
        rib = transits[last]
        station = _END[rib]
        xn, _ = cv[-1]
        cv[-1] = (xn, tables.slot_z(station, rib, (depth, last)))
        chains.append(cv)
    return chains


def _seg_z(seg, x):
    x1, z1, x2, z2 = seg[:4]
    return z1 + (z2 - z1) * (x - x1) / (x2 - x1)


def _sweep(chain_list):
    """Crossings and cusps of a drawn chain family, in sweep order.

    Raises if the picture is degenerate: vertical segments, tangencies,
    events sharing a column with each other or with a vertex.
    """
    segs = []
    for cid, cv in enumerate(chain_list):
        for i, (a, b) in enumerate(zip(cv, cv[1:])):
            if a[0] == b[0]:
                raise SatelliteError("vertical segment in drawn curve")
            (x1, z1), (x2, z2) = (a, b) if a[0] < b[0] else (b, a)
            segs.append((x1, z1, x2, z2, cid, i))

    raw = []
    for cid, cv in enumerate(chain_list):
        for i in range(1, len(cv) - 1):
            xp, x, xn = cv[i - 1][0], cv[i][0], cv[i + 1][0]
            if xp > x and xn > x:
                raw.append((x, cv[i][1], "leftCusp"))
            elif xp < x and xn < x:
                raw.append((x, cv[i][1], "rightCusp"))

    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            a, b = segs[i], segs[j]
            if a[4] == b[4] and abs(a[5] - b[5]) == 1:
                continue
            xl, xr = max(a[0], b[0]), min(a[2], b[2])
            if xl >= xr:
                continue
            d1 = _seg_z(a, xl) - _seg_z(b, xl)
            d2 = _seg_z(a, xr) - _seg_z(b, xr)
            if d1 == 0 or d2 == 0:
                raise SatelliteError("tangent strands in drawn curve")
            if (d1 > 0) != (d2 > 0):
                x = xl + (xr - xl) * d1 / (d1 - d2)
                raw.append((x, _seg_z(a, x), "cross"))

    raw.sort(key=lambda e: e[0])
    for (xa, _, _), (xb, _, _) in zip(raw, raw[1:]):
        if xa == xb:
            raise SatelliteError("two events share a sweep column")

    events = []
    for x, z, kind in raw:
        above = 0
        at = 0
        touch = 0
        for s in segs:
            if s[0] == x or s[2] == x:
                touch += 1
            elif s[0] < x < s[2]:
                sz = _seg_z(s, x)
                if sz > z:
                    above += 1
                elif sz == z:
                    at += 1
        # a cusp owns the only two segments allowed to end on its column
        if touch != (0 if kind == "cross" else 2) or at != \
                (2 if kind == "cross" else 0):
            raise SatelliteError("event column hits a bystander strand")
        pos = above + 1
        events.append(Cross(pos) if kind == "cross" else
                      LeftCusp(pos) if kind == "leftCusp" else
                      RightCusp(pos))
    return events


def _assemble(slopes, depths=None):
    curves = _curve_data(slopes)
    if depths is not None:
        if sorted(depths) != list(range(1, len(slopes) + 1)):
            raise SatelliteError("satellite depths must be 1..n")
        curves = [curves[0]] + [
            (name, depths[i], transits, joins)
            for i, (name, _, transits, joins) in enumerate(curves[1:])]
    tables = _Tables(curves)

    for h, (lb, rb) in enumerate((("lA", "rA"), ("lB", "rB"))):
        if tables.ball_stack(lb) != tables.ball_stack(rb):
            raise SatelliteError("handle %d slot pairing broken" % h)

    chain_list = []
    chain_curve = []
    serial = 0
    for curve in curves:
        serials = list(range(serial, serial + len(curve[2])))
        serial += len(curve[2])
        for cv in _curve_chains(tables, curve, serials):
            chain_list.append(cv)
            chain_curve.append(curve[0])

    left_ends = []
    for cid, cv in enumerate(chain_list):
        if cv[0][0] == 0:
            left_ends.append((cv[0][1], chain_curve[cid], 1))
        if cv[-1][0] == 0:
            left_ends.append((cv[-1][1], chain_curve[cid], -1))
    left_ends.sort(key=lambda e: -e[0])
    by_level = {i + 1: (name, hdir)
                for i, (_, name, hdir) in enumerate(left_ends)}

    k_a = len(tables.ball_stack("lA"))
    k_b = len(tables.ball_stack("lB"))
    if len(left_ends) != k_a + k_b:
        raise SatelliteError("left edge strand count disagrees with slots")

    d = FrontDiagram(one_handles=(k_a, k_b), events=_sweep(chain_list))
    report = validate_front(d)
    if not report.ok:
        raise SatelliteError("assembled diagram invalid: %s"
                             % report.errors[0])

    names = [None] * len(curves)
    labels, signs = [], []
    for comp in components(d):
        seen = {(by_level[l][0], dr == by_level[l][1])
                for g, l, dr in comp.cells if g == 0}
        if len(seen) != 1:
            raise SatelliteError("satellite produced a split curve")
        name, forward = seen.pop()
        labels.append(name)
        signs.append(1 if forward else -1)
    if sorted(labels) != sorted(c[0] for c in curves):
        raise SatelliteError("component count disagrees with curve count")
    return d.replace(labels=labels, orientation_signs=signs)


class GompfTemplate:
    """The base D*T^2 diagram plus satellite bookkeeping: handle entry
    gates and the companion's ribbon circuit; push-off corridor levels
    are generated on demand, one per satellite depth."""

    def __init__(self, diagram, gates, circuit):
        self.diagram = diagram
        self.gates = gates
        self.circuit = circuit

    def to_json(self):
        from . import front_diagram as fd
        return {"diagram": fd.to_json(self.diagram), "gates": self.gates,
                "circuit": [list(leg) for leg in self.circuit]}


def gompf_template():
    """Fixed two-1-handle diagram of D*T^2 with tb(core) = 1."""
    gates = {"A": {"positive": "rA", "negative": "lA"},
             "B": {"positive": "lB", "negative": "rB"}}
    circuit = (("alpha", "rB", "lA"), ("beta", "lA", "lB"),
               ("gamma", "lB", "rA"), ("delta", "rA", "rB"))
    return GompfTemplate(_assemble([]), gates, circuit)


def _annulus_slopes(ann):
    curves = {}
    for e in ann.events:
        if e[0] == "passage":
            _, zone, idx, sign = e
            curves.setdefault(idx, [0, 0])
            if zone == "A":
                curves[idx][0] += sign
            else:
                curves[idx][1] += sign
    depths = {s.curve_idx: s.height for s in ann.strands}
    out = []
    for idx in sorted(curves, key=lambda i: depths[i]):
        if depths[idx] == 0:
            raise SatelliteError("boundary circle cannot carry passages")
        out.append((depths[idx], tuple(curves[idx])))
    if [d for d, _ in out] != list(range(1, len(out) + 1)):
        raise SatelliteError("annulus depths must be 1..n")
    return [s for _, s in out]


def satellite_annulus(template, ann):
    """Satellite an annular front onto the template's companion circuit."""
    slopes = _annulus_slopes(ann)
    if not slopes:
        return template.diagram
    return _assemble(slopes)


def generate_complement(poly, smooth):
    """Full pipeline: smoothing slopes -> arrangement -> annulus ->
    satellite diagram.  Requires the smoothing set to be centered."""
    from . import torus_curves as tc
    smooth = list(smooth)
    if pt.centered_point(poly, smooth) is None:
        raise pt.PolytopeError("smoothing set is not centered")
    slopes = pt.smoothing_slopes(poly, smooth)
    arr = tc.layout_arrangement(slopes)
    ann = tc.cut_to_annulus(arr)
    return satellite_annulus(gompf_template(), ann)
