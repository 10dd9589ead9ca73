"""Concentric arrangements of co-oriented slope curves on the torus.

A smoothing slope (a, b) becomes a curve isotoped to run parallel to the
0-handle boundary except for signed excursions through the two torus
1-handles: handle A is the one a (1, 0) curve traverses, handle B the
(0, 1) one.  Curves are nested by input order; curve k sits at depth k,
one Reeb push-off level per step inward.  Depth 0 is reserved for the
distinguished boundary circle, the companion the whole arrangement is
later satellited around.

Cutting the torus at the bottom-left corner unrolls the arrangement to an
annular front: one closed strand per curve at height equal to its depth,
with the two handle zones met in A-then-B circle order and all crossings
collected in the corner zone.
"""

from math import gcd


class ArrangementError(ValueError):
    pass


def ThroughA(sign):
    return ("A", sign)


def ThroughB(sign):
    return ("B", sign)


Around = ("around",)


def signed_intersection(s1, s2):
    """Homological intersection number a1*b2 - a2*b1 of two slopes."""
    return s1[0] * s2[1] - s1[1] * s2[0]


class TorusCurve:
    """One co-oriented curve: slope, nesting depth, cyclic passage word."""

    def __init__(self, slope, depth, passage_word):
        slope = (int(slope[0]), int(slope[1]))
        net_a = sum(t[1] for t in passage_word if t[0] == "A")
        net_b = sum(t[1] for t in passage_word if t[0] == "B")
        if (net_a, net_b) != slope:
            raise ArrangementError(
                "passage word nets (%d, %d) but slope is %r"
                % (net_a, net_b, slope))
        if depth == 0:
            if slope != (0, 0):
                raise ArrangementError("depth 0 is reserved for the "
                                       "boundary circle")
        elif depth < 1 or gcd(*slope) != 1:
            raise ArrangementError("curve at depth %d needs a primitive "
                                   "slope, got %r" % (depth, slope))
        self.slope = slope
        self.depth = depth
        self.passage_word = tuple(passage_word)

    def to_json(self):
        return {"slope": list(self.slope), "depth": self.depth,
                "passageWord": [list(t) for t in self.passage_word]}

    def __repr__(self):
        return "TorusCurve(%r, depth=%d)" % (self.slope, self.depth)


class TorusArrangement:
    """Ordered curves (boundary circle first) plus corner-zone crossings."""

    def __init__(self, curves, crossings):
        if not curves or curves[0].depth != 0:
            raise ArrangementError("arrangement must start with the "
                                   "depth-0 boundary circle")
        depths = [c.depth for c in curves[1:]]
        if len(set(depths)) != len(depths) or any(d < 1 for d in depths):
            raise ArrangementError("smoothing depths must be distinct "
                                   "positive integers")
        for i, j, sign, zone in crossings:
            if not (0 < i < j < len(curves)):
                raise ArrangementError("crossing (%d, %d) out of range"
                                       % (i, j))
        self.curves = tuple(curves)
        self.crossings = tuple(tuple(x) for x in crossings)

    def to_json(self):
        return {"curves": [c.to_json() for c in self.curves],
                "crossings": [list(x) for x in self.crossings]}


def layout_arrangement(slopes):
    """Deterministic concentric layout of primitive slopes.

    Curve k (1-based input order) gets depth k and a passage word of |a|
    uniform-sign A-tokens then |b| B-tokens then one boundary-parallel
    segment.  Crossings between distinct curves land in the corner zone,
    |a_i b_j - a_j b_i| of them with the sign of that determinant; parallel
    nested curves never cross.
    """
    curves = [TorusCurve((0, 0), 0, (Around,))]
    for k, (a, b) in enumerate(slopes, start=1):
        if gcd(a, b) != 1:
            raise ArrangementError("slope %r at position %d is not primitive"
                                   % ((a, b), k - 1))
        word = []
        word.extend(ThroughA(1 if a > 0 else -1) for _ in range(abs(a)))
        word.extend(ThroughB(1 if b > 0 else -1) for _ in range(abs(b)))
        word.append(Around)
        curves.append(TorusCurve((a, b), k, word))
    crossings = []
    for i in range(1, len(curves)):
        for j in range(i + 1, len(curves)):
            d = signed_intersection(curves[i].slope, curves[j].slope)
            sign = 1 if d > 0 else -1
            crossings.extend((i, j, sign, "corner") for _ in range(abs(d)))
    return TorusArrangement(curves, crossings)


class AnnulusStrand:
    def __init__(self, curve_idx, height, label):
        self.curve_idx = curve_idx
        self.height = height
        self.label = label

    def to_json(self):
        return {"curve": self.curve_idx, "height": self.height,
                "label": self.label}


class AnnulusDiagram:
    """Cyclic front over a cut circle: strands at integer Reeb heights,
    passage and crossing events in circle order, equal boundary lists."""

    def __init__(self, strands, events, boundary_left, boundary_right):
        if list(boundary_left) != list(boundary_right):
            raise ArrangementError("annulus boundaries must close up")
        self.strands = tuple(strands)
        self.events = tuple(events)
        self.boundary_left = tuple(boundary_left)
        self.boundary_right = tuple(boundary_right)

    def to_json(self):
        return {"strands": [s.to_json() for s in self.strands],
                "events": [list(e) for e in self.events],
                "boundary": list(self.boundary_left)}


def cut_to_annulus(arr):
    """Unroll an arrangement at the bottom-left corner.

    Strand heights repeat the curve depths, so relative Reeb order is
    preserved.  Events appear in circle order: zone A passages, zone B
    passages (each by nesting order, then word order), then the corner
    crossings.
    """
    strands = []
    for idx, c in enumerate(arr.curves):
        label = "boundary" if c.depth == 0 else "(%d,%d)" % c.slope
        strands.append(AnnulusStrand(idx, c.depth, label))
    events = []
    for zone in ("A", "B"):
        for idx, c in enumerate(arr.curves):
            events.extend(("passage", zone, idx, t[1])
                          for t in c.passage_word if t[0] == zone)
    events.extend(("cross", i, j, sign) for i, j, sign, _ in arr.crossings)
    boundary = tuple(range(len(arr.curves)))
    return AnnulusDiagram(strands, events, boundary, boundary)
