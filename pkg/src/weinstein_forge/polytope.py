"""Exact lattice geometry for Delzant polytopes and smoothing data.

Everything in this module is integer or Fraction arithmetic; centeredness
is an exact incidence condition and floats would wreck it.
"""

from fractions import Fraction
from math import gcd
import json


class PolytopeError(ValueError):
    """Raised for malformed input polytopes; the message names the culprit."""


def _primitive(v):
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise PolytopeError("zero edge vector")
    return (v[0] // g, v[1] // g)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


class VertexRay:
    """Ray from a vertex into the polytope, along the sum of the outward
    primitive edge directions at that vertex."""

    def __init__(self, base, direction):
        self.base = base
        self.direction = direction

    def __repr__(self):
        return "VertexRay(base=%r, direction=%r)" % (self.base, self.direction)


class LatticePolytope:
    """Convex lattice polygon with the Delzant corner condition.

    Vertices are normalized to counterclockwise order (clockwise input is
    reversed).  Validation rejects repeated vertices, collinear triples,
    nonconvexity, and corners whose primitive edge directions do not span
    the lattice.
    """

    def __init__(self, vertices):
        verts = [self._as_lattice_point(v) for v in vertices]
        if len(verts) < 3:
            raise PolytopeError("need at least 3 vertices, got %d" % len(verts))
        if len(set(verts)) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise PolytopeError("repeated vertex %r" % (dup,))

        n = len(verts)
        edge_dirs = [_primitive((verts[(i + 1) % n][0] - verts[i][0],
                                 verts[(i + 1) % n][1] - verts[i][1]))
                     for i in range(n)]
        crosses = [_cross(edge_dirs[i - 1], edge_dirs[i]) for i in range(n)]
        if all(c < 0 for c in crosses):
            verts.reverse()
            edge_dirs = [_primitive((verts[(i + 1) % n][0] - verts[i][0],
                                     verts[(i + 1) % n][1] - verts[i][1]))
                         for i in range(n)]
            crosses = [_cross(edge_dirs[i - 1], edge_dirs[i]) for i in range(n)]
        for i, c in enumerate(crosses):
            if c == 0:
                raise PolytopeError("collinear vertices around vertex %d %r" % (i, verts[i]))
            if c < 0:
                raise PolytopeError("nonconvex at vertex %d %r" % (i, verts[i]))

        self.vertices = verts
        self._edge_dirs = edge_dirs
        # inward normal of a counterclockwise edge is its left rotation
        self._normals = [(-d[1], d[0]) for d in edge_dirs]

        # every vertex must lie weakly inside every edge half-plane; this
        # excludes locally convex polygons that wind more than once
        for v in verts:
            if not self._inside(v, strict=False):
                raise PolytopeError("nonconvex: vertex %r outside an edge half-plane" % (v,))

        for i in range(n):
            away_prev = (-edge_dirs[i - 1][0], -edge_dirs[i - 1][1])
            away_next = edge_dirs[i]
            det = _cross(away_prev, away_next)
            if det not in (1, -1):
                raise PolytopeError(
                    "Delzant violation at vertex %d %r: edge directions %r and %r "
                    "have determinant %d" % (i, verts[i], away_prev, away_next, det))

    @staticmethod
    def _as_lattice_point(v):
        try:
            x, y = v
        except (TypeError, ValueError):
            raise PolytopeError("vertex %r is not a coordinate pair" % (v,))
        if isinstance(x, bool) or isinstance(y, bool) or \
                not isinstance(x, int) or not isinstance(y, int):
            raise PolytopeError("vertex %r has non-integer coordinates" % (v,))
        return (x, y)

    @property
    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @property
    def primitive_directions(self):
        return list(self._edge_dirs)

    @property
    def inward_normals(self):
        return list(self._normals)

    def _inside(self, pt, strict):
        for (vx, vy), (nx, ny) in zip(self.vertices, self._normals):
            s = nx * (pt[0] - vx) + ny * (pt[1] - vy)
            if s < 0 or (strict and s == 0):
                return False
        return True

    def contains_interior(self, pt):
        return self._inside(pt, strict=True)

    def check_vertex_index(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < len(self.vertices):
            raise PolytopeError("invalid vertex index %r" % (v,))
        return v


def vertex_ray(p, v):
    """Ray from vertex v along the sum of the two outward primitive edge
    directions there.  Not reduced to primitive: the sum is the ray."""
    v = p.check_vertex_index(v)
    dirs = p.primitive_directions
    away_prev = (-dirs[v - 1][0], -dirs[v - 1][1])
    away_next = dirs[v]
    return VertexRay(p.vertices[v],
                     (away_prev[0] + away_next[0], away_prev[1] + away_next[1]))


def _ray_exit_parameter(p, ray):
    """Largest t with base + t*dir still in the closed polytope."""
    best = None
    bx, by = ray.base
    dx, dy = ray.direction
    for (vx, vy), (nx, ny) in zip(p.vertices, p.inward_normals):
        denom = nx * dx + ny * dy
        if denom >= 0:
            continue
        t = Fraction(nx * (vx - bx) + ny * (vy - by), denom)
        if t > 0 and (best is None or t < best):
            best = t
    if best is None:
        raise PolytopeError("vertex ray never leaves the polytope")
    return best


def _point_on_ray(pt, ray):
    """Parameter t > 0 with base + t*dir == pt, or None."""
    bx, by = ray.base
    dx, dy = ray.direction
    t = None
    if dx != 0:
        t = Fraction(pt[0] - bx, dx)
    if dy != 0:
        ty = Fraction(pt[1] - by, dy)
        if t is not None and ty != t:
            return None
        t = ty
    if t is None or t <= 0:
        return None
    if bx + t * dx != pt[0] or by + t * dy != pt[1]:
        return None
    return t


def centered_point(p, indices):
    """Common strictly interior point of the vertex rays, or None.

    For a single vertex the answer always exists; we pick the midpoint of
    the ray segment between the vertex and the boundary exit.
    """
    idx = [p.check_vertex_index(v) for v in indices]
    if len(set(idx)) != len(idx):
        raise PolytopeError("smoothing indices must be distinct")
    if not idx:
        return None
    rays = [vertex_ray(p, v) for v in idx]

    if len(rays) == 1:
        ray = rays[0]
        t = _ray_exit_parameter(p, ray) / 2
        return (ray.base[0] + t * ray.direction[0], ray.base[1] + t * ray.direction[1])

    pt = None
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            r1, r2 = rays[i], rays[j]
            det = _cross(r1.direction, (-r2.direction[0], -r2.direction[1]))
            if det == 0:
                continue
            rx = r2.base[0] - r1.base[0]
            ry = r2.base[1] - r1.base[1]
            t = Fraction(rx * (-r2.direction[1]) - (-r2.direction[0]) * ry, det)
            pt = (r1.base[0] + t * r1.direction[0], r1.base[1] + t * r1.direction[1])
            break
        if pt is not None:
            break
    if pt is None:
        return None

    for ray in rays:
        if _point_on_ray(pt, ray) is None:
            return None
    if not p.contains_interior(pt):
        return None
    return (Fraction(pt[0]), Fraction(pt[1]))


def smoothing_slopes(p, indices):
    """Attaching slope at each smoothed vertex: inward normal of the arriving
    edge minus inward normal of the departing edge, counterclockwise."""
    normals = p.inward_normals
    out = []
    for v in indices:
        v = p.check_vertex_index(v)
        n_in = normals[v - 1]
        n_out = normals[v]
        out.append((n_in[0] - n_out[0], n_in[1] - n_out[1]))
    return out


def parse_polytope(text):
    """Parse the polytope file: JSON with a `vertices` array of integer
    pairs and an optional `smooth` array of 0-based vertex indices.

    Returns (LatticePolytope, smooth index list).
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise PolytopeError("polytope file is not valid JSON: %s" % e)
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolytopeError("polytope file needs a top-level 'vertices' array")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise PolytopeError("'vertices' must be an array of integer pairs")
    p = LatticePolytope([tuple(v) if isinstance(v, list) else v for v in verts])
    smooth = data.get("smooth", [])
    if not isinstance(smooth, list):
        raise PolytopeError("'smooth' must be an array of vertex indices")
    seen = set()
    for v in smooth:
        p.check_vertex_index(v)
        if v in seen:
            raise PolytopeError("duplicate smoothing index %d" % v)
        seen.add(v)
    return p, list(smooth)
