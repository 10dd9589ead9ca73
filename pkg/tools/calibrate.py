"""Staged search over layout conventions for the satellite assembler.

Stage 1 pins the conventions visible in the bare template (tb = 1 and
rot = 0 for the companion).  Stage 2 adds the satellite conventions and
filters on the three-node intersection form.  Stage 3 keeps whatever
also reproduces the hexagon form.  Every surviving combination is
printed; the winner gets frozen into satellite.LAYOUT.
"""

import itertools
import sys
sys.path.insert(0, "src")

from weinstein_forge import satellite as sat
from weinstein_forge.front_diagram import classical_invariants
from weinstein_forge import invariants as inv

HEX = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
THREE = [(1, 0), (0, 1), (-1, -1)]

THREE_TARGET = {"rank": 1, "signature": -1, "parity": "even",
                "determinant": 0}
HEX_TARGET = {"rank": 5, "signature": -3, "parity": "odd",
              "determinant": 57}

TEMPLATE_KNOBS = ["core_b_plus_second", "core_plus_first", "deep_on_top",
                  "bulge1_upper_in", "bulge3_upper_in", "fold_moves_lower",
                  "merge_deep_first", "wrap_on_entry", "wrap_encloses_all"]
SAT_KNOBS = ["bridge_la_above", "bridge_lb_above", "bridge_ra_above",
             "bridge_rb_above", "bridge_la_upper_in", "bridge_lb_upper_in",
             "bridge_ra_upper_in", "bridge_rb_upper_in", "bridge_deep_high",
             "lb_bridges_above_wrap"]


def set_knobs(names, values):
    for n, v in zip(names, values):
        sat.LAYOUT[n] = v


def try_assemble(slopes):
    try:
        return sat._assemble(slopes)
    except Exception:
        return None


def core_tb(d):
    ci = classical_invariants(d)
    return ci.tb[list(d.labels).index("core")]


def form_of(d):
    return inv.intersection_form(inv.chain_data(d)).invariants


def stage1():
    good = []
    for vals in itertools.product([False, True], repeat=len(TEMPLATE_KNOBS)):
        set_knobs(TEMPLATE_KNOBS, vals)
        d = try_assemble([])
        if d is None:
            continue
        ci = classical_invariants(d)
        if ci.tb == [1] and ci.rot == [0]:
            good.append(vals)
    return good


def stage2(t_vals):
    set_knobs(TEMPLATE_KNOBS, t_vals)
    good = []
    for vals in itertools.product([False, True], repeat=len(SAT_KNOBS)):
        set_knobs(SAT_KNOBS, vals)
        d3 = try_assemble(THREE)
        if d3 is None:
            continue
        if core_tb(d3) != 1:
            continue
        if form_of(d3) != THREE_TARGET:
            continue
        d1 = try_assemble([(1, 0)])
        if d1 is None or core_tb(d1) != 1:
            continue
        good.append(vals)
    return good


def stage3(t_vals, s_vals):
    set_knobs(TEMPLATE_KNOBS, t_vals)
    set_knobs(SAT_KNOBS, s_vals)
    d6 = try_assemble(HEX)
    if d6 is None or core_tb(d6) != 1:
        return None
    return form_of(d6)


def main():
    t_good = stage1()
    print("stage1 template survivors: %d / %d"
          % (len(t_good), 2 ** len(TEMPLATE_KNOBS)))
    full = []
    near = []
    for ti, t_vals in enumerate(t_good):
        s_good = stage2(t_vals)
        if s_good:
            print(" template[%d] %r -> %d three-node survivors"
                  % (ti, t_vals, len(s_good)))
        for s_vals in s_good:
            f = stage3(t_vals, s_vals)
            if f is None:
                continue
            if f == HEX_TARGET:
                full.append((t_vals, s_vals))
                print("  FULL PASS", t_vals, s_vals)
            else:
                near.append((t_vals, s_vals, f))
    print("\nfull passes:", len(full))
    for t_vals, s_vals in full:
        print("  ", dict(zip(TEMPLATE_KNOBS, t_vals)),
              dict(zip(SAT_KNOBS, s_vals)))
    if not full:
        print("nearest hexagon forms (three-node already exact):")
        seen = {}
        for t_vals, s_vals, f in near:
            k = tuple(sorted(f.items()))
            seen.setdefault(k, (t_vals, s_vals))
        for k, (t_vals, s_vals) in sorted(seen.items()):
            print("  ", dict(k))
            print("    ", t_vals, s_vals)


if __name__ == "__main__":
    main()
