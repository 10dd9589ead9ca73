"""Diagnostics for the satellite assembler: classical invariants, pair
linking vs torus determinants, homology and form invariants for the four
worked examples."""

import sys
sys.path.insert(0, "src")

from weinstein_forge import satellite as sat
from weinstein_forge.front_diagram import classical_invariants, validate_front
from weinstein_forge import invariants as inv

HEX = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
THREE = [(1, 0), (0, 1), (-1, -1)]


def det(s, t):
    return s[0] * t[1] - s[1] * t[0]


def show(name, slopes):
    print("=" * 60)
    print(name, slopes)
    try:
        d = sat._assemble(slopes)
    except Exception as e:
        print("  FAILED:", type(e).__name__, e)
        return
    ci = classical_invariants(d)
    print("  labels:", d.labels)
    print("  tb:", ci.tb, " rot:", ci.rot, " writhe:", ci.writhe,
          " cusps:", ci.cusps)
    n = len(ci.tb)
    if n > 1:
        print("  2lk matrix vs det(s_i,s_j):")
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append("  . ")
                else:
                    row.append("%3d " % ci.linking_doubled[i][j])
            print("   ", "".join(row))
        labs = list(d.labels)
        order = []
        for lab in labs:
            if lab == "core":
                order.append(None)
            else:
                order.append(slopes.index(tuple(
                    int(x) for x in lab.strip("()").split(","))))
        print("  target det (satellite pairs):")
        for i in range(n):
            row = []
            for j in range(n):
                if i == j or order[i] is None or order[j] is None:
                    row.append("  . ")
                else:
                    row.append("%3d " % det(slopes[order[i]],
                                            slopes[order[j]]))
            print("   ", "".join(row))
    c = inv.chain_data(d)
    h = inv.homology(c)
    print("  homology:", h.groups, "euler:", h.euler)
    f = inv.intersection_form(c)
    fi = inv.form_invariants(f.gram)
    print("  gram:", f.gram)
    print("  form invariants:", fi)
    g = inv.pi1_presentation(d)
    sg = inv.simplify_presentation(g)
    print("  pi1: gens=%d rels=%r" % (len(sg.generators), sg.relators))


if __name__ == "__main__":
    show("template", [])
    show("one-node (1,0)", [(1, 0)])
    show("three-node", THREE)
    show("hexagon", HEX)
