"""Deterministic SVG rendering of front diagrams.

Events sit at integer x-stations and strands at integer y-levels, so the
same diagram always renders to the same bytes.  The canonical diagram JSON
is embedded in a <desc> element for debug round-trips, and every event and
ball carries a data-site attribute for interactive overlays.
"""

from xml.sax.saxutils import escape

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#17becf", "#e377c2", "#7f7f7f", "#bcbd22"]

STEP = 36
YS = 22
MARGIN = 40


def _y(level):
    return MARGIN + level * YS


def render_front(d, width=None, show_labels=True):
    from . import _analysis, to_json, canonical_bytes

    a = _analysis(d)
    widths = a["widths"]
    owner = a["cell_owner"]
    E = len(d.events)
    x0 = MARGIN + STEP
    x_of_gap = lambda g: x0 + g * STEP
    max_width = max(widths) if widths else 0
    total_w = x_of_gap(E) + STEP + MARGIN
    total_h = _y(max_width + 1) + MARGIN

    def color(g, l):
        ci = owner[(g, l)][0]
        return PALETTE[ci % len(PALETTE)]

    parts = []
    parts.append('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
                 'viewBox="0 0 %d %d">' % (total_w, total_h, total_w, total_h))
    parts.append('<desc id="diagram-json">%s</desc>'
                 % escape(canonical_bytes(d).decode("utf-8")))
    parts.append('<rect width="%d" height="%d" fill="white"/>' % (total_w, total_h))

    def line(x1, y1, x2, y2, col, extra=""):
        parts.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="%s" '
                     'stroke-width="2" fill="none"%s/>' % (x1, y1, x2, y2, col, extra))

    def path(dstr, col, extra=""):
        parts.append('<path d="%s" stroke="%s" stroke-width="2" fill="none"%s/>'
                     % (dstr, col, extra))

    # strand runs inside each gap
    for g in range(E + 1):
        xa, xb = x_of_gap(g), x_of_gap(g) + STEP
        if g == 0:
            xa = x0
        for l in range(1, widths[g] + 1):
            line(xa, _y(l), xb, _y(l), color(g, l))

    # event connectors
    for i, (kind, p) in enumerate(d.events):
        xa = x_of_gap(i) + STEP
        xb = xa + STEP
        xm = (xa + xb) / 2.0
        w_before = widths[i]
        grp = '<g data-site="event:%d" data-kind="%s" data-pos="%d">' % (i, kind, p)
        parts.append(grp)
        if kind == "cross":
            over = color(i, p)
            under = color(i, p + 1)
            line(xa, _y(p), xb, _y(p + 1), over)
            # under-strand drawn broken around the middle
            line(xa, _y(p + 1), xm - 6, _y(p + 1) - 6 * (1.0 / 1.0), under)
            line(xm + 6, _y(p) + 6, xb, _y(p), under)
            for l in range(1, w_before + 1):
                if l != p and l != p + 1:
                    line(xa, _y(l), xb, _y(l), color(i, l))
        elif kind == "leftCusp":
            col = color(i + 1, p)
            path("M %g %g Q %g %g %g %g" %
                 (xb, _y(p), xa, _y(p) + YS / 2.0, xb, _y(p + 1)), col)
            for l in range(1, w_before + 1):
                nl = l + 2 if l >= p else l
                line(xa, _y(l), xb, _y(nl), color(i, l))
        else:
            col = color(i, p)
            path("M %g %g Q %g %g %g %g" %
                 (xa, _y(p), xb, _y(p) + YS / 2.0, xa, _y(p + 1)), col)
            for l in range(1, w_before + 1):
                if l == p or l == p + 1:
                    continue
                nl = l - 2 if l > p + 1 else l
                line(xa, _y(l), xb, _y(nl), color(i, l))
        parts.append("</g>")

    # attaching balls and wraps on both edges
    def draw_edge(entries, side):
        x_edge = x0 if side == "left" else x_of_gap(E)
        blocks = {}
        for idx, e in enumerate(entries):
            if e[0] == "slot":
                blocks.setdefault(e[1], []).append(idx)
        for h, idxs in sorted(blocks.items()):
            top, bot = _y(idxs[0] + 1), _y(idxs[-1] + 1)
            cy = (top + bot) / 2.0
            r = max((bot - top) / 2.0 + YS * 0.4, YS * 0.5)
            parts.append('<circle cx="%g" cy="%g" r="%g" stroke="#444" '
                         'fill="#eee" fill-opacity="0.8" data-site="ball:%s:%d"/>'
                         % (x_edge, cy, r, side, h))
            if show_labels:
                parts.append('<text x="%g" y="%g" font-size="11" fill="#444" '
                             'text-anchor="middle">h%d</text>'
                             % (x_edge + (-r - 8 if side == "left" else r + 8), cy + 4, h))
        for idx, e in enumerate(entries):
            if e[0] == "slot":
                continue
            p = e[1]
            if p < idx:
                continue
            ya, yb = _y(idx + 1), _y(p + 1)
            bulge = STEP * 0.9 if side == "left" else -STEP * 0.9
            gap_idx = 0 if side == "left" else E
            col = color(gap_idx, idx + 1)
            path("M %g %g C %g %g %g %g %g %g" %
                 (x_edge, ya, x_edge - bulge, ya, x_edge - bulge, yb, x_edge, yb),
                 col, ' data-site="wrap:%s:%d"' % (side, idx))

    draw_edge(d.left_boundary, "left")
    draw_edge(d.right_boundary, "right")

    # marked points
    for g, l in d.marked_points:
        parts.append('<circle cx="%g" cy="%g" r="3.5" fill="black" '
                     'data-site="mark:%d:%d"/>' % (x_of_gap(g) + STEP / 2.0, _y(l), g, l))

    if show_labels:
        for ci, lbl in enumerate(a["labels"]):
            parts.append('<text x="%g" y="%g" font-size="12" fill="%s">%s</text>'
                         % (MARGIN, MARGIN - 8 + 0 * ci + 14 * ci,
                            PALETTE[ci % len(PALETTE)], escape(lbl)))

    parts.append("</svg>")
    return "\n".join(parts)


def extract_embedded_json(svg_text):
    """Recover the canonical diagram JSON embedded by render_front."""
    start = svg_text.index('<desc id="diagram-json">') + len('<desc id="diagram-json">')
    end = svg_text.index("</desc>", start)
    blob = svg_text[start:end]
    for a, b in (("&lt;", "<"), ("&gt;", ">"), ("&amp;", "&")):
        blob = blob.replace(a, b)
    return blob
