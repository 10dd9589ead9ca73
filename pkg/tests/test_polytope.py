from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weinstein_forge.polytope import (
    LatticePolytope,
    PolytopeError,
    centered_point,
    parse_polytope,
    smoothing_slopes,
    vertex_ray,
)

HEXAGON = [(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]


def ray_meet(base1, dir1, base2, dir2):
    """Independent oracle: intersect two rays exactly, or None.

    Solves base1 + t*dir1 == base2 + u*dir2 over the rationals and demands
    t > 0 and u > 0.  Kept deliberately separate from the implementation.
    """
    det = dir1[0] * (-dir2[1]) - (-dir2[0]) * dir1[1]
    if det == 0:
        return None
    rx = base2[0] - base1[0]
    ry = base2[1] - base1[1]
    t = Fraction(rx * (-dir2[1]) - (-dir2[0]) * ry, det)
    u = Fraction(dir1[0] * ry - rx * dir1[1], det)
    if t <= 0 or u <= 0:
        return None
    return (base1[0] + t * dir1[0], base1[1] + t * dir1[1])


def test_hexagon_parses_and_is_delzant():
    p = LatticePolytope(HEXAGON)
    assert len(p.vertices) == 6
    assert len(p.edges) == 6


def test_hexagon_slope_set():
    p = LatticePolytope(HEXAGON)
    slopes = smoothing_slopes(p, range(6))
    assert set(slopes) == {(1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1)}
    # vertex order pairing under the n_in - n_out convention
    assert slopes == [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def test_hexagon_alternating_subset_slopes():
    # alternating vertices (1,0),(2,1),(0,2): the three-node smoothing
    p = LatticePolytope(HEXAGON)
    slopes = smoothing_slopes(p, [0, 2, 4])
    assert slopes == [(1, 0), (0, 1), (-1, -1)]


def test_standard_corner_slope():
    for lam in (1, 2, 3):
        p = LatticePolytope([(0, 0), (lam, 0), (0, lam)])
        assert smoothing_slopes(p, [0]) == [(1, -1)]


def test_vertex_ray_examples():
    hexagon = LatticePolytope(HEXAGON)
    r = vertex_ray(hexagon, 0)
    assert r.base == (1, 0) and r.direction == (0, 1)

    simplex = LatticePolytope([(0, 0), (1, 0), (0, 1)])
    assert vertex_ray(simplex, 0).direction == (1, 1)

    rect = LatticePolytope([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert vertex_ray(rect, 2).direction == (-1, -1)


def test_vertex_ray_directions_not_normalized_to_primitive():
    # direction is the sum of the two outward primitive edge vectors, kept as-is
    p = LatticePolytope([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert vertex_ray(p, 0).direction == (1, 1)


def test_hexagon_centered_point_all_vertices():
    p = LatticePolytope(HEXAGON)
    c = centered_point(p, range(6))
    assert c == (Fraction(1), Fraction(1))

    # oracle: every pair of the six rays meets at that same point
    rays = [vertex_ray(p, i) for i in range(6)]
    for i in range(6):
        for j in range(i + 1, 6):
            got = ray_meet(rays[i].base, rays[i].direction, rays[j].base, rays[j].direction)
            if got is not None:
                assert got == (Fraction(1), Fraction(1))


def test_centered_point_absent_for_off_center_set():
    # Hirzebruch trapezoid: rays from (0,0) and (2,0) meet at (2/3, 2/3),
    # but the ray from (1,1) runs down x=1 and misses it
    p = LatticePolytope([(0, 0), (2, 0), (1, 1), (0, 1)])
    assert centered_point(p, range(4)) is None
    assert centered_point(p, [0, 1]) == (Fraction(2, 3), Fraction(2, 3))


def test_centered_point_singleton_always_interior():
    p = LatticePolytope(HEXAGON)
    for v in range(6):
        c = centered_point(p, [v])
        assert c is not None
        assert p.contains_interior(c)
    # vertex 0 ray exits at (1,2); midpoint is (1,1)
    assert centered_point(p, [0]) == (Fraction(1), Fraction(1))


def test_simplex_singleton_centered_point():
    p = LatticePolytope([(0, 0), (1, 0), (0, 1)])
    c = centered_point(p, [0])
    assert c is not None and p.contains_interior(c)


def test_delzant_violation_reports_vertex_and_determinant():
    with pytest.raises(PolytopeError) as ei:
        LatticePolytope([(0, 0), (2, 0), (0, 1)])
    msg = str(ei.value)
    assert "vertex 2" in msg
    assert "-2" in msg


def test_too_few_vertices():
    with pytest.raises(PolytopeError):
        LatticePolytope([(0, 0), (1, 0)])


def test_repeated_vertex():
    with pytest.raises(PolytopeError):
        LatticePolytope([(0, 0), (1, 0), (1, 0), (0, 1)])


def test_collinear_vertices_rejected():
    with pytest.raises(PolytopeError):
        LatticePolytope([(0, 0), (1, 0), (2, 0), (0, 2)])


def test_nonconvex_rejected():
    with pytest.raises(PolytopeError):
        LatticePolytope([(0, 0), (4, 0), (1, 1), (0, 4)])


def test_clockwise_input_reversed():
    p = LatticePolytope(list(reversed(HEXAGON)))
    assert p.vertices[0] in HEXAGON
    assert smoothing_slopes(p, range(6))[0] in {
        (1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1)}


def test_parse_polytope_json():
    p, smooth = parse_polytope('{"vertices": [[0,0],[1,0],[0,1]], "smooth": [0]}')
    assert p.vertices == [(0, 0), (1, 0), (0, 1)]
    assert smooth == [0]


def test_parse_polytope_no_smooth_field():
    p, smooth = parse_polytope('{"vertices": [[1,0],[2,0],[2,1],[1,2],[0,2],[0,1]]}')
    assert len(p.vertices) == 6
    assert smooth == []


def test_parse_polytope_errors():
    with pytest.raises(PolytopeError):
        parse_polytope("not json")
    with pytest.raises(PolytopeError):
        parse_polytope('{"vertices": [[0,0],[1,0],[0,1]], "smooth": [7]}')
    with pytest.raises(PolytopeError):
        parse_polytope('{"vertices": [[0,0],[1,0],[0.5,1]]}')


BASE_POLYTOPES = [
    HEXAGON,
    [(0, 0), (1, 0), (0, 1)],
    [(0, 0), (3, 0), (0, 3)],
    [(0, 0), (2, 0), (2, 1), (0, 1)],
    [(0, 0), (2, 0), (1, 1), (0, 1)],
]

unimodular = st.sampled_from([
    (1, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1), (0, -1, 1, 0),
    (1, -1, 0, 1), (2, 1, 1, 1), (1, 2, 1, 3), (0, 1, -1, 0),
])


@given(
    st.sampled_from(range(len(BASE_POLYTOPES))),
    st.integers(-5, 5), st.integers(-5, 5),
    unimodular,
)
def test_slopes_translation_invariant_and_sl2_equivariant(idx, tx, ty, mat):
    a, b, c, d = mat
    assert a * d - b * c == 1
    verts = BASE_POLYTOPES[idx]
    p = LatticePolytope(verts)
    slopes = smoothing_slopes(p, range(len(verts)))

    shifted = LatticePolytope([(x + tx, y + ty) for x, y in verts])
    assert smoothing_slopes(shifted, range(len(verts))) == slopes

    mapped = LatticePolytope([(a * x + b * y, c * x + d * y) for x, y in verts])
    # slopes live in the dual lattice: they transform by the inverse transpose
    expect = [(d * sx - c * sy, -b * sx + a * sy) for sx, sy in slopes]
    assert smoothing_slopes(mapped, range(len(verts))) == expect


@given(st.sampled_from(range(len(BASE_POLYTOPES))), unimodular)
def test_centered_point_sl2_equivariant(idx, mat):
    a, b, c, d = mat
    verts = BASE_POLYTOPES[idx]
    p = LatticePolytope(verts)
    c0 = centered_point(p, range(len(verts)))
    mapped = LatticePolytope([(a * x + b * y, c * x + d * y) for x, y in verts])
    c1 = centered_point(mapped, range(len(verts)))
    if c0 is None:
        assert c1 is None
    else:
        assert c1 == (a * c0[0] + b * c0[1], c * c0[0] + d * c0[1])
