"""Trace and render candidate template words to inspect their arc structure."""

import sys, os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from weinstein_forge.front_diagram import (
    FrontDiagram, validate_front, components, classical_invariants,
)

BOUNDARY = [("slot", 0, 0), ("slot", 0, 1), ("slot", 1, 0), ("slot", 1, 1)]


def build(events):
    return FrontDiagram(one_handles=(2, 2), left_boundary=BOUNDARY,
                        right_boundary=BOUNDARY, events=events)


def render(d):
    """ASCII front: one text column per gap, strand levels as rows."""
    widths = d.gap_widths()
    E = len(d.events)
    rows = max(widths) * 2
    cols = []
    for g in range(E + 1):
        col = [" "] * rows
        for l in range(1, widths[g] + 1):
            col[2 * l - 1] = "-"
        cols.append(("".join(col), None))
        if g < E:
            kind, p = d.events[g]
            col = [" "] * rows
            for l in range(1, widths[g] + 1):
                col[2 * l - 1] = "-"
            if kind == "cross":
                col[2 * p - 1] = "\\"
                col[2 * p] = "X"
                col[2 * p + 1] = "/"
            elif kind == "leftCusp":
                col[2 * p - 1] = "<"
                col[2 * p] = "<"
                for l in range(p, widths[g] + 1):
                    col[2 * l - 1] = " "
                    if 2 * l + 2 < rows:
                        pass
                # redraw shifted strands
                col2 = [" "] * rows
                for l in range(1, widths[g + 1] + 1):
                    col2[2 * l - 1] = "-"
                col2[2 * p - 1] = "<"
                col2[2 * p] = "("
                col2[2 * p + 1] = "<"
                col = col2
            else:
                col[2 * p - 1] = ">"
                col[2 * p] = ")"
                col[2 * p + 1] = ">"
            cols.append(("".join(col), (kind, p)))
    lines = []
    for r in range(rows):
        lines.append("".join(c[0][r] if r < len(c[0]) else " " for c in cols))
    return "\n".join(l.rstrip() for l in lines if l.strip())


def describe(events):
    d = build(events)
    print("events:", events)
    comps = components(d)
    inv = classical_invariants(d)
    for c in comps:
        feats = [f for f in c.features]
        print("  features:", feats)
    print("  writhe", inv.writhe, "cusps", inv.cusps, "tb", inv.tb, "rot", inv.rot)
    print(render(d))
    print()


CANDS = [
    [('cross', 2), ('leftCusp', 1), ('cross', 2), ('leftCusp', 1), ('cross', 2),
     ('rightCusp', 5), ('rightCusp', 5)],
    [('cross', 2), ('leftCusp', 1), ('cross', 2), ('rightCusp', 3),
     ('leftCusp', 1), ('cross', 2), ('rightCusp', 5)],
]

if __name__ == "__main__":
    for c in CANDS:
        describe(c)
