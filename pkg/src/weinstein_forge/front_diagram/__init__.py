"""Legendrian front diagrams in Gompf standard form, as event words.

A diagram is a strip read left to right: strands enter from the left edge,
events (crossings and cusps) happen at stations, strands exit right.  The
left and right edges carry the attaching balls of the 1-handles, identified
slot-by-slot, plus optional wrap arcs running behind a ball.  Positions are
1-based from the top; crossing resolution is implicit (the strand of more
negative slope is in front), so no over/under flag is stored.
"""

from fractions import Fraction
import json

CROSS = "cross"
LEFT_CUSP = "leftCusp"
RIGHT_CUSP = "rightCusp"


def Cross(pos):
    return (CROSS, pos)


def LeftCusp(pos):
    return (LEFT_CUSP, pos)


def RightCusp(pos):
    return (RIGHT_CUSP, pos)


class DiagramError(ValueError):
    pass


class ValidationReport:
    def __init__(self, errors):
        self.errors = list(errors)
        self.ok = not self.errors

    def __repr__(self):
        return "ValidationReport(ok=%r, errors=%r)" % (self.ok, self.errors)


def _entry(e):
    if isinstance(e, (tuple, list)):
        if len(e) == 3 and e[0] == "slot":
            return ("slot", int(e[1]), int(e[2]))
        if len(e) == 2 and e[0] == "wrap":
            return ("wrap", int(e[1]))
    raise DiagramError("bad boundary entry %r" % (e,))


class FrontDiagram:
    """Immutable value; all operations return new diagrams."""

    def __init__(self, one_handles=(), left_boundary=None, right_boundary=None,
                 events=(), labels=None, orientation_signs=None,
                 marked_points=()):
        self.one_handles = tuple(int(k) for k in one_handles)
        if left_boundary is None:
            left_boundary = [("slot", h, s)
                             for h, k in enumerate(self.one_handles)
                             for s in range(k)]
        if right_boundary is None:
            right_boundary = [("slot", h, s)
                              for h, k in enumerate(self.one_handles)
                              for s in range(k)]
        self.left_boundary = tuple(_entry(e) for e in left_boundary)
        self.right_boundary = tuple(_entry(e) for e in right_boundary)
        evs = []
        for e in events:
            kind, pos = e
            if kind not in (CROSS, LEFT_CUSP, RIGHT_CUSP):
                raise DiagramError("unknown event type %r" % (kind,))
            evs.append((kind, int(pos)))
        self.events = tuple(evs)
        self.labels = None if labels is None else tuple(str(x) for x in labels)
        self.orientation_signs = None if orientation_signs is None else \
            tuple(int(s) for s in orientation_signs)
        self.marked_points = tuple((int(g), int(l)) for g, l in marked_points)
        self._cache = {}

    def _raw_key(self):
        return (self.one_handles, self.left_boundary, self.right_boundary,
                self.events, self.labels, self.orientation_signs,
                self.marked_points)

    def __eq__(self, other):
        if not isinstance(other, FrontDiagram):
            return NotImplemented
        if self._raw_key() == other._raw_key():
            return True
        try:
            return to_json(self) == to_json(other)
        except (DiagramError, ValueError):
            return False

    __hash__ = None

    def __repr__(self):
        return "FrontDiagram(%d one-handles, %d events)" % (
            len(self.one_handles), len(self.events))

    def replace(self, **kw):
        fields = dict(one_handles=self.one_handles,
                      left_boundary=self.left_boundary,
                      right_boundary=self.right_boundary,
                      events=self.events, labels=self.labels,
                      orientation_signs=self.orientation_signs,
                      marked_points=self.marked_points)
        fields.update(kw)
        return FrontDiagram(**fields)

    def gap_widths(self):
        n = len(self.left_boundary)
        widths = [n]
        for kind, pos in self.events:
            if kind == LEFT_CUSP:
                n += 2
            elif kind == RIGHT_CUSP:
                n -= 2
            widths.append(n)
        return widths


class Component:
    def __init__(self, cid, label, cells, features, orientation):
        self.id = cid
        self.label = label
        self.cells = cells
        self.features = features
        self.orientation = orientation

    def __repr__(self):
        return "Component(%d, %r, %d cells)" % (self.id, self.label, len(self.cells))


class ClassicalInvariants:
    def __init__(self, writhe, cusps, tb, rot, linking_doubled):
        self.writhe = writhe
        self.cusps = cusps
        self.tb = tb
        self.rot = rot
        self.linking_doubled = linking_doubled
        self.linking = [[Fraction(x, 2) for x in row] for row in linking_doubled]

    def to_json(self):
        return {"writhe": self.writhe, "cusps": self.cusps, "tb": self.tb,
                "rotation": self.rot,
                "linkingDoubled": self.linking_doubled}


def _structural_errors(d):
    errors = []
    for h, k in enumerate(d.one_handles):
        if k < 0:
            errors.append("one-handle %d has negative slot count" % h)

    def check_side(entries, side):
        blocks = {}
        wrap_spans = []
        seen_slots = {}
        for i, e in enumerate(entries):
            if e[0] == "slot":
                _, h, s = e
                if not (0 <= h < len(d.one_handles)):
                    errors.append("%s boundary entry %d: no one-handle %d" % (side, i, h))
                    continue
                if not (0 <= s < d.one_handles[h]):
                    errors.append("%s boundary entry %d: handle %d has no slot %d"
                                  % (side, i, h, s))
                    continue
                if (h, s) in seen_slots:
                    errors.append("%s boundary: handle %d slot %d repeated" % (side, h, s))
                seen_slots[(h, s)] = i
                blocks.setdefault(h, []).append((i, s))
            else:
                p = e[1]
                if not (0 <= p < len(entries)) or entries[p] != ("wrap", i) or p == i:
                    errors.append("%s boundary entry %d: wrap partner %d not mutual"
                                  % (side, i, p))
                elif i < p:
                    wrap_spans.append((i, p))
        if errors:
            return
        prev_end = -1
        for h, k in enumerate(d.one_handles):
            got = blocks.get(h, [])
            if [s for _, s in got] != list(range(k)):
                errors.append("%s boundary: handle %d slots not in order 0..%d"
                              % (side, h, k - 1))
                return
            if got:
                lo, hi = got[0][0], got[-1][0]
                if hi - lo != k - 1:
                    errors.append("%s boundary: handle %d ball block not contiguous"
                                  % (side, h))
                    return
                if lo <= prev_end:
                    errors.append("%s boundary: handle %d ball block out of order" % (side, h))
                    return
                prev_end = hi
        spans = []
        for h, k in enumerate(d.one_handles):
            got = blocks.get(h, [])
            if got:
                spans.append((got[0][0], got[-1][0]))
        for (i, p) in wrap_spans:
            for lo, hi in spans:
                if lo < i < hi or lo < p < hi:
                    errors.append("%s boundary: wrap end inside a ball block" % side)
            if not any(i < lo and hi < p for lo, hi in spans):
                errors.append("%s boundary: wrap at %d..%d encloses no ball" % (side, i, p))
        for a in wrap_spans:
            for b in wrap_spans:
                if a < b and a[0] < b[0] < a[1] < b[1]:
                    errors.append("%s boundary: wrap arcs cross" % side)

    check_side(d.left_boundary, "left")
    check_side(d.right_boundary, "right")
    if errors:
        return errors

    n = len(d.left_boundary)
    for i, (kind, pos) in enumerate(d.events):
        if kind == CROSS or kind == RIGHT_CUSP:
            if not (1 <= pos <= n - 1):
                errors.append("event %d: %s at position %d with %d strands"
                              % (i + 1, kind, pos, n))
                return errors
            if kind == RIGHT_CUSP:
                n -= 2
        else:
            if not (1 <= pos <= n + 1):
                errors.append("event %d: %s at position %d with %d strands"
                              % (i + 1, kind, pos, n))
                return errors
            n += 2
    if n != len(d.right_boundary):
        errors.append("final strand count %d does not match right boundary size %d"
                      % (n, len(d.right_boundary)))

    widths = d.gap_widths()
    for g, l in d.marked_points:
        if not (0 <= g <= len(d.events)) or not (1 <= l <= widths[g]):
            errors.append("marked point (%d, %d) outside the diagram" % (g, l))
    return errors


def _step(d, maps, g, l, direction):
    """One traversal step; returns (g, l, direction, feature or None)."""
    E = len(d.events)
    if direction > 0:
        if g == E:
            entry = d.right_boundary[l - 1]
            if entry[0] == "slot":
                li = maps["left"][(entry[1], entry[2])]
                return 0, li + 1, 1, ("handle", entry[1], 1)
            p = entry[1] + 1
            return E, p, -1, ("wrapcusp", "right", min(l, p), "D" if p > l else "U")
        kind, p = d.events[g]
        if kind == CROSS:
            if l == p:
                return g + 1, p + 1, 1, ("cross", g, "right", "over")
            if l == p + 1:
                return g + 1, p, 1, ("cross", g, "right", "under")
            return g + 1, l, 1, None
        if kind == LEFT_CUSP:
            return g + 1, (l + 2 if l >= p else l), 1, None
        if l == p:
            return g, p + 1, -1, ("cusp", g, "D")
        if l == p + 1:
            return g, p, -1, ("cusp", g, "U")
        return g + 1, (l - 2 if l > p + 1 else l), 1, None
    else:
        if g == 0:
            entry = d.left_boundary[l - 1]
            if entry[0] == "slot":
                ri = maps["right"][(entry[1], entry[2])]
                return E, ri + 1, -1, ("handle", entry[1], -1)
            p = entry[1] + 1
            return 0, p, 1, ("wrapcusp", "left", min(l, p), "D" if p > l else "U")
        kind, p = d.events[g - 1]
        ei = g - 1
        if kind == CROSS:
            if l == p:
                return g - 1, p + 1, -1, ("cross", ei, "left", "under")
            if l == p + 1:
                return g - 1, p, -1, ("cross", ei, "left", "over")
            return g - 1, l, -1, None
        if kind == LEFT_CUSP:
            if l == p:
                return g, p + 1, 1, ("cusp", ei, "D")
            if l == p + 1:
                return g, p, 1, ("cusp", ei, "U")
            return g - 1, (l - 2 if l > p + 1 else l), -1, None
        return g - 1, (l + 2 if l >= p else l), -1, None


def _analysis(d):
    if "analysis" in d._cache:
        return d._cache["analysis"]
    errors = _structural_errors(d)
    if errors:
        raise DiagramError(errors[0])
    maps = {
        "left": {(e[1], e[2]): i for i, e in enumerate(d.left_boundary)
                 if e[0] == "slot"},
        "right": {(e[1], e[2]): i for i, e in enumerate(d.right_boundary)
                  if e[0] == "slot"},
    }
    widths = d.gap_widths()
    E = len(d.events)
    visited = set()
    raw_comps = []
    for g in range(E + 1):
        for l in range(1, widths[g] + 1):
            if (g, l) in visited:
                continue
            cells = []
            features = []
            state = (g, l, -1)
            while True:
                cg, cl, cdir = state
                if (cg, cl) in visited:
                    raise DiagramError("traversal revisited a strand segment")
                visited.add((cg, cl))
                cells.append((cg, cl, cdir))
                ng, nl, ndir, feat = _step(d, maps, cg, cl, cdir)
                if feat is not None:
                    features.append(feat)
                state = (ng, nl, ndir)
                if state == (g, l, -1):
                    break
            raw_comps.append({"cells": cells, "features": features})

    n = len(raw_comps)
    if d.labels is not None and len(d.labels) != n:
        raise DiagramError("expected %d component labels, got %d"
                           % (n, len(d.labels)))
    if d.orientation_signs is not None and len(d.orientation_signs) != n:
        raise DiagramError("expected %d orientation signs, got %d"
                           % (n, len(d.orientation_signs)))
    labels = d.labels or tuple("C%d" % i for i in range(n))
    signs = d.orientation_signs or tuple(1 for _ in range(n))

    cell_owner = {}
    for ci, rc in enumerate(raw_comps):
        for (cg, cl, cdir) in rc["cells"]:
            cell_owner[(cg, cl)] = (ci, cdir)

    result = {
        "raw": raw_comps,
        "labels": labels,
        "signs": signs,
        "cell_owner": cell_owner,
        "widths": widths,
    }
    d._cache["analysis"] = result
    return result


def _oriented_features(raw, sign):
    feats = raw["features"]
    if sign > 0:
        return list(feats)
    flipped = []
    for f in reversed(feats):
        if f[0] == "cross":
            flipped.append(("cross", f[1],
                            "left" if f[2] == "right" else "right", f[3]))
        elif f[0] == "cusp":
            flipped.append(("cusp", f[1], "U" if f[2] == "D" else "D"))
        elif f[0] == "wrapcusp":
            flipped.append(("wrapcusp", f[1], f[2], "U" if f[3] == "D" else "D"))
        else:
            flipped.append(("handle", f[1], -f[2]))
    return flipped


def validate_front(d):
    errors = _structural_errors(d)
    if not errors:
        try:
            _analysis(d)
        except DiagramError as e:
            errors = [str(e)]
    return ValidationReport(errors)


def require_valid(d):
    report = validate_front(d)
    if not report.ok:
        raise DiagramError(report.errors[0])


def components(d):
    a = _analysis(d)
    out = []
    for ci, raw in enumerate(a["raw"]):
        sign = a["signs"][ci]
        cells = raw["cells"] if sign > 0 else \
            [(g, l, -dr) for (g, l, dr) in reversed(raw["cells"])]
        out.append(Component(ci, a["labels"][ci], cells,
                             _oriented_features(raw, sign), sign))
    return out


def classical_invariants(d):
    a = _analysis(d)
    n = len(a["raw"])
    signs = a["signs"]
    crossings = {}
    cusp_counts = [0] * n
    downs = [0] * n
    ups = [0] * n
    for ci, raw in enumerate(a["raw"]):
        for f in _oriented_features(raw, signs[ci]):
            if f[0] == "cross":
                crossings.setdefault(f[1], []).append((ci, f[2]))
            elif f[0] == "cusp" or f[0] == "wrapcusp":
                cusp_counts[ci] += 1
                du = f[2] if f[0] == "cusp" else f[3]
                if du == "D":
                    downs[ci] += 1
                else:
                    ups[ci] += 1
    writhe = [0] * n
    linking_doubled = [[0] * n for _ in range(n)]
    for ei, passes in crossings.items():
        if len(passes) != 2:
            raise DiagramError("crossing %d traversed %d times" % (ei, len(passes)))
        (c1, d1), (c2, d2) = passes
        # in a front the over strand always descends, so the tangent
        # determinant reduces to comparing horizontal traversal directions
        sign = 1 if d1 == d2 else -1
        if c1 == c2:
            writhe[c1] += sign
        else:
            linking_doubled[c1][c2] += sign
            linking_doubled[c2][c1] += sign
    tb = []
    rot = []
    for ci in range(n):
        if cusp_counts[ci] % 2 != 0:
            raise DiagramError("component %d has odd cusp count" % ci)
        if (downs[ci] - ups[ci]) % 2 != 0:
            raise DiagramError("component %d has odd cusp imbalance" % ci)
        tb.append(writhe[ci] - cusp_counts[ci] // 2)
        rot.append((downs[ci] - ups[ci]) // 2)
    return ClassicalInvariants(writhe, cusp_counts, tb, rot, linking_doubled)


def handle_words(d):
    a = _analysis(d)
    out = []
    for ci, raw in enumerate(a["raw"]):
        word = [f[2] * (f[1] + 1) for f in _oriented_features(raw, a["signs"][ci])
                if f[0] == "handle"]
        out.append(word)
    return out


def one_handle_count(d):
    return len(d.one_handles)


def mirror_front(d):
    """Left-right mirror: reverses the event word, swaps cusp kinds and the
    two boundary edges.  Components keep their labels and carry the reverse
    of the image orientation, so tb is preserved and rotation negates."""
    swapped = []
    for kind, pos in reversed(d.events):
        if kind == LEFT_CUSP:
            swapped.append((RIGHT_CUSP, pos))
        elif kind == RIGHT_CUSP:
            swapped.append((LEFT_CUSP, pos))
        else:
            swapped.append((CROSS, pos))
    E = len(d.events)
    m = FrontDiagram(one_handles=d.one_handles,
                     left_boundary=d.right_boundary,
                     right_boundary=d.left_boundary,
                     events=swapped,
                     marked_points=[(E - g, l) for g, l in d.marked_points])
    orig = {}
    for comp in components(d):
        for g, l, dr in comp.cells:
            orig[(g, l)] = (comp.label, dr)
    labels = []
    signs = []
    for comp in components(m):
        g0, l0, _ = comp.cells[0]
        label, dr = orig[(E - g0, l0)]
        labels.append(label)
        signs.append(-dr)
    return m.replace(labels=tuple(labels), orientation_signs=tuple(signs))


def to_json(d):
    a = _analysis(d)

    def entry_json(e):
        if e[0] == "slot":
            return {"handle": e[1], "slot": e[2]}
        return {"wrap": e[1]}

    return {
        "oneHandles": [{"slots": k} for k in d.one_handles],
        "leftBoundary": [entry_json(e) for e in d.left_boundary],
        "rightBoundary": [entry_json(e) for e in d.right_boundary],
        "events": [{"type": kind, "pos": pos} for kind, pos in d.events],
        "twoHandles": [{"label": lbl} for lbl in a["labels"]],
        "orientations": list(a["signs"]),
        "markedPoints": [{"gap": g, "level": l} for g, l in d.marked_points],
    }


def from_json(data):
    if not isinstance(data, dict):
        raise DiagramError("diagram document must be a JSON object")

    def entry(e):
        if not isinstance(e, dict):
            raise DiagramError("bad boundary entry %r" % (e,))
        if "wrap" in e:
            return ("wrap", e["wrap"])
        return ("slot", e.get("handle", -1), e.get("slot", -1))

    try:
        events = [(e["type"], e["pos"]) for e in data.get("events", [])]
        d = FrontDiagram(
            one_handles=[h["slots"] for h in data.get("oneHandles", [])],
            left_boundary=[entry(e) for e in data.get("leftBoundary", [])]
            if "leftBoundary" in data else None,
            right_boundary=[entry(e) for e in data.get("rightBoundary", [])]
            if "rightBoundary" in data else None,
            events=events,
            labels=[t["label"] for t in data["twoHandles"]]
            if data.get("twoHandles") else None,
            orientation_signs=data.get("orientations") or None,
            marked_points=[(m["gap"], m["level"])
                           for m in data.get("markedPoints", [])],
        )
    except (KeyError, TypeError) as e:
        raise DiagramError("malformed diagram document: %s" % e)
    return d


def parse_diagram(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise DiagramError("diagram file is not valid JSON: %s" % e)
    d = from_json(data)
    require_valid(d)
    return d


def canonical_bytes(d):
    return json.dumps(to_json(d), sort_keys=True,
                      separators=(",", ":")).encode("utf-8")


from .render import render_front  # noqa: E402
