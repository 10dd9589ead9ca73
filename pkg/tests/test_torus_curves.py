"""Concentric curve arrangements on the torus and their annular cut."""

import math

import pytest
from hypothesis import given, strategies as st

from weinstein_forge import torus_curves as tc
from weinstein_forge.torus_curves import ThroughA, ThroughB, Around
from weinstein_forge.polytope import LatticePolytope, smoothing_slopes


HEXAGON = LatticePolytope([(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)])


def det2(s1, s2):
    return s1[0] * s2[1] - s1[1] * s2[0]


def test_signed_intersection_examples():
    assert tc.signed_intersection((1, 0), (0, 1)) == 1
    assert tc.signed_intersection((1, 1), (-1, -1)) == 0
    assert tc.signed_intersection((1, 1), (1, -1)) == -2
    assert tc.signed_intersection((2, 1), (1, 1)) == 1


def test_layout_single_horizontal_curve():
    arr = tc.layout_arrangement([(1, 0)])
    assert len(arr.curves) == 2
    k = arr.curves[0]
    assert k.depth == 0
    c = arr.curves[1]
    assert c.slope == (1, 0)
    assert c.depth == 1
    assert c.passage_word == (ThroughA(1), Around)
    assert arr.crossings == ()


def test_layout_empty_is_boundary_only():
    arr = tc.layout_arrangement([])
    assert len(arr.curves) == 1
    assert arr.curves[0].depth == 0
    assert arr.curves[0].passage_word == (Around,)
    assert arr.crossings == ()


def test_layout_three_node_crossing_signs():
    arr = tc.layout_arrangement([(1, 0), (-1, -1), (0, 1)])
    pair_sign = {}
    for i, j, sign, zone in arr.crossings:
        assert zone == "corner"
        pair_sign.setdefault((i, j), 0)
        pair_sign[(i, j)] += sign
    assert pair_sign == {(1, 2): -1, (1, 3): 1, (2, 3): -1}


def test_layout_passage_words_match_slopes():
    arr = tc.layout_arrangement([(2, -3), (0, 1)])
    c = arr.curves[1]
    assert c.passage_word == (ThroughA(1), ThroughA(1),
                              ThroughB(-1), ThroughB(-1), ThroughB(-1), Around)
    assert arr.curves[2].passage_word == (ThroughB(1), Around)


def test_layout_rejects_non_primitive():
    with pytest.raises(tc.ArrangementError):
        tc.layout_arrangement([(2, 2)])
    with pytest.raises(tc.ArrangementError):
        tc.layout_arrangement([(0, 0)])


def test_crossing_count_is_intersection_number():
    slopes = [(1, 0), (1, 1), (0, 1), (-1, -1)]
    arr = tc.layout_arrangement(slopes)
    for i in range(1, len(arr.curves)):
        for j in range(i + 1, len(arr.curves)):
            d = det2(slopes[i - 1], slopes[j - 1])
            entries = [s for (a, b, s, _) in arr.crossings if (a, b) == (i, j)]
            assert len(entries) == abs(d)
            assert sum(entries) == d


def test_cut_single_curve_structure():
    ann = tc.cut_to_annulus(tc.layout_arrangement([(1, 0)]))
    assert [s.height for s in ann.strands] == [0, 1]
    passages = [e for e in ann.events if e[0] == "passage"]
    assert passages == [("passage", "A", 1, 1)]
    assert not [e for e in ann.events if e[0] == "cross"]
    assert ann.boundary_left == ann.boundary_right


def test_cut_empty_arrangement():
    ann = tc.cut_to_annulus(tc.layout_arrangement([]))
    assert len(ann.strands) == 1
    assert ann.strands[0].height == 0
    assert ann.events == ()


def test_cut_preserves_crossings_and_depth_order():
    arr = tc.layout_arrangement([(1, 2), (0, 1), (1, -1)])
    ann = tc.cut_to_annulus(arr)
    got = sorted(e[1:] for e in ann.events if e[0] == "cross")
    want = sorted((i, j, s) for (i, j, s, _) in arr.crossings)
    assert got == want
    assert [s.height for s in ann.strands] == \
        [c.depth for c in arr.curves]


def test_hexagon_zone_throughput_balances():
    slopes = smoothing_slopes(HEXAGON, range(6))
    assert sum(a for a, b in slopes) == 0 and sum(b for a, b in slopes) == 0
    ann = tc.cut_to_annulus(tc.layout_arrangement(slopes))
    for zone in ("A", "B"):
        net = sum(e[3] for e in ann.events
                  if e[0] == "passage" and e[1] == zone)
        assert net == 0


def test_zone_order_is_a_then_b():
    ann = tc.cut_to_annulus(tc.layout_arrangement([(1, 1)]))
    kinds = [e[1] for e in ann.events if e[0] == "passage"]
    assert kinds == ["A", "B"]


@st.composite
def primitive_slope(draw):
    a = draw(st.integers(min_value=-4, max_value=4))
    b = draw(st.integers(min_value=-4, max_value=4))
    return (a, b) if math.gcd(a, b) == 1 else (1, 0)


slope_lists = st.lists(primitive_slope(), min_size=0, max_size=5)


@given(slope_lists)
def test_layout_faithful_and_deterministic(slopes):
    arr = tc.layout_arrangement(slopes)
    assert [c.depth for c in arr.curves] == list(range(len(slopes) + 1))
    for k, s in enumerate(slopes, start=1):
        c = arr.curves[k]
        net_a = sum(t[1] for t in c.passage_word if t[0] == "A")
        net_b = sum(t[1] for t in c.passage_word if t[0] == "B")
        assert (net_a, net_b) == s
    again = tc.layout_arrangement(slopes)
    assert again.to_json() == arr.to_json()
    ann = tc.cut_to_annulus(arr)
    assert len(ann.events) == len(tc.cut_to_annulus(again).events)


@given(slope_lists)
def test_cut_crossing_multiset_property(slopes):
    arr = tc.layout_arrangement(slopes)
    ann = tc.cut_to_annulus(arr)
    got = sorted(e[1:] for e in ann.events if e[0] == "cross")
    assert got == sorted((i, j, s) for (i, j, s, _) in arr.crossings)
