"""Exact lattice geometry for convex chains in a right triangle.

Everything here is integer arithmetic: orientation tests are cross
products, areas are doubled to stay integral, and lattice counts come
from gcds or brute-force scans. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the integer lattice Z^2."""

    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError(f"lattice coordinates must be int, got ({self.x!r}, {self.y!r})")


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """Cross product (a-o) x (b-o).

    > 0: b lies strictly left of the ray o->a (counter-clockwise turn)
    < 0: strictly right (clockwise turn)
    = 0: o, a, b collinear
    """
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class TriangleSpec:
    """The right triangle with corners (0,0), (i,0), (i,j); its hypotenuse
    runs from (0,0) to (i,j) and is called the closing segment below."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"triangle legs must be >= 1, got i={self.i}, j={self.j}")

    @property
    def n(self) -> int:
        return self.i + self.j

    @property
    def corners(self) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
        return (LatticePoint(0, 0), LatticePoint(self.i, 0), LatticePoint(self.i, self.j))

    def contains_interior(self, p: LatticePoint) -> bool:
        """Strict interior: strictly below the hypotenuse, above y=0, left of x=i."""
        return p.y > 0 and p.x < self.i and self.j * p.x - self.i * p.y > 0


@dataclass(frozen=True)
class ChainPolygon:
    """A convex polygon inside the triangle, given as its chain of vertices
    from (0,0) to (i,j); the closing hypotenuse edge is implicit.

    A 2-vertex chain is the degenerate 2-gon equal to the hypotenuse itself.
    Edge slopes strictly increase along the chain and every edge moves at
    least one unit right and one unit up, so the chain stays strictly below
    the hypotenuse and off the horizontal and vertical triangle edges.
    """

    vertices: tuple[LatticePoint, ...]
    spec: TriangleSpec

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("chain needs at least 2 vertices")
        if verts[0] != LatticePoint(0, 0):
            raise ValueError(f"chain must start at (0,0), got {verts[0]}")
        if verts[-1] != LatticePoint(self.spec.i, self.spec.j):
            raise ValueError(f"chain must end at ({self.spec.i},{self.spec.j}), got {verts[-1]}")
        for a, b in zip(verts, verts[1:]):
            if b.x - a.x < 1 or b.y - a.y < 1:
                raise ValueError(f"edge {a}->{b} must move right and up by >= 1")
        for a, b, c in zip(verts, verts[1:], verts[2:]):
            # slope(a->b) < slope(b->c), compared by cross product
            if (b.x - a.x) * (c.y - b.y) - (c.x - b.x) * (b.y - a.y) <= 0:
                raise ValueError(f"edge slopes must strictly increase at {b}")
        for v in verts[1:-1]:
            if not self.spec.contains_interior(v):
                raise ValueError(f"intermediate vertex {v} not strictly inside the triangle")

    @property
    def k(self) -> int:
        """Number of chain edges; 1 for the degenerate 2-gon."""
        return len(self.vertices) - 1

    @property
    def v_count(self) -> int:
        """Number of polygon vertices (the chain is a (k+1)-gon)."""
        return len(self.vertices)

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def cycle(self) -> list[tuple[LatticePoint, LatticePoint]]:
        """Directed edges of the closed boundary, counter-clockwise: the
        chain edges followed by the closing edge (i,j)->(0,0)."""
        verts = self.vertices
        edges = list(zip(verts, verts[1:]))
        edges.append((verts[-1], verts[0]))
        return edges


def hypotenuse(spec: TriangleSpec) -> ChainPolygon:
    """The 2-gon from (0,0) to (i,j)."""
    return ChainPolygon((LatticePoint(0, 0), LatticePoint(spec.i, spec.j)), spec)


def segment_lattice_count(p: LatticePoint, r: LatticePoint) -> int:
    """Number of lattice points on the closed segment [p, r]: gcd(|dx|,|dy|)+1."""
    if p == r:
        raise ValueError("degenerate segment: endpoints coincide")
    return gcd(abs(r.x - p.x), abs(r.y - p.y)) + 1


def doubled_area(poly: ChainPolygon) -> int:
    """Twice the enclosed area, by the shoelace sum over the closed cycle.

    Zero exactly for the degenerate 2-gon.
    """
    total = 0
    for a, b in poly.cycle():
        total += a.x * b.y - b.x * a.y
    return total


def boundary_count(poly: ChainPolygon) -> int:
    """b(P): lattice points on the closed boundary, each counted once.

    For the 2-gon the boundary is the segment itself: gcd(i,j)+1 points.
    """
    if poly.is_segment:
        return gcd(poly.spec.i, poly.spec.j) + 1
    # each edge contributes its lattice points minus one shared endpoint
    return sum(gcd(abs(b.x - a.x), abs(b.y - a.y)) for a, b in poly.cycle())


def interior_count(poly: ChainPolygon) -> int:
    """i(P): lattice points strictly inside, by brute force over the bounding
    box with exact orientation predicates; 0 for the 2-gon."""
    if poly.is_segment:
        return 0
    edges = poly.cycle()
    count = 0
    for x in range(0, poly.spec.i + 1):
        for y in range(0, poly.spec.j + 1):
            p = LatticePoint(x, y)
            if all(cross(a, b, p) > 0 for a, b in edges):
                count += 1
    return count


def contains_point_closed(poly: ChainPolygon, p: LatticePoint) -> bool:
    """Membership in the closed region of the polygon (boundary included).

    For the 2-gon the closed region is the segment itself.
    """
    if poly.is_segment:
        a, b = poly.vertices
        return cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) \
            and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    return all(cross(a, b, p) >= 0 for a, b in poly.cycle())


def triangle_interior_points(spec: TriangleSpec) -> list[LatticePoint]:
    """All lattice points strictly inside the triangle, in lexicographic
    (x, y) order."""
    points = []
    for x in range(1, spec.i):
        # y >= 1 and j*x - i*y > 0, i.e. y <= ceil(j*x/i) - 1
        for y in range(1, (spec.j * x - 1) // spec.i + 1):
            points.append(LatticePoint(x, y))
    return points


def triangle_doubled_area(spec: TriangleSpec) -> int:
    """2*area of the triangle itself (= i*j, computed by shoelace)."""
    return _cycle_area2(spec.corners)


def triangle_boundary_count(spec: TriangleSpec) -> int:
    """b of the triangle treated as a polygon (= n + gcd(i,j))."""
    return _cycle_boundary(spec.corners)


def triangle_interior_count(spec: TriangleSpec) -> int:
    """i of the triangle treated as a polygon."""
    return len(triangle_interior_points(spec))


def u_count(poly: ChainPolygon) -> int:
    """Lattice points strictly inside the triangle but outside the closed
    region of the polygon."""
    return sum(
        1
        for p in triangle_interior_points(poly.spec)
        if not contains_point_closed(poly, p)
    )


@dataclass(frozen=True)
class PolygonStats:
    """The integer invariants of one chain polygon."""

    k: int
    v_count: int
    interior: int
    boundary: int
    area2: int
    u: int


def polygon_stats(poly: ChainPolygon) -> PolygonStats:
    return PolygonStats(
        k=poly.k,
        v_count=poly.v_count,
        interior=interior_count(poly),
        boundary=boundary_count(poly),
        area2=doubled_area(poly),
        u=u_count(poly),
    )


def convex_hull_chain(chosen, spec: TriangleSpec) -> ChainPolygon:
    """Chain polygon whose closed region is the convex hull of (0,0), (i,j)
    and the chosen points.

    The chosen points must be strictly interior to the triangle; they then
    all lie strictly below the hypotenuse, so the hull's upper boundary is
    the hypotenuse itself and its lower boundary is the monotone lower hull
    computed here. Collinear non-extreme points are dropped. An empty
    selection yields the 2-gon.
    """
    for p in chosen:
        if not spec.contains_interior(p):
            raise ValueError(f"point {p} is not strictly interior to the triangle")
    points = sorted(set(chosen) | {LatticePoint(0, 0), LatticePoint(spec.i, spec.j)})
    hull: list[LatticePoint] = []
    for p in points:
        while len(hull) >= 2 and cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return ChainPolygon(tuple(hull), spec)


def pick_check(poly) -> bool:
    """Pick's theorem check: area2 == 2*interior + boundary - 2.

    Accepts a ChainPolygon, or any simple polygon as a vertex sequence (for
    oracle tests). Degenerate polygons (area 0, in particular 2-gons) are
    rejected: Pick's formula does not hold for them.
    """
    if isinstance(poly, ChainPolygon):
        area2 = doubled_area(poly)
        if area2 == 0:
            raise ValueError("Pick's theorem does not apply to degenerate polygons")
        return area2 == 2 * interior_count(poly) + boundary_count(poly) - 2
    verts = tuple(p if isinstance(p, LatticePoint) else LatticePoint(p[0], p[1]) for p in poly)
    area2 = abs(_cycle_area2(verts))
    if area2 == 0:
        raise ValueError("Pick's theorem does not apply to degenerate polygons")
    return area2 == 2 * _simple_interior_count(verts) + _cycle_boundary(verts) - 2


# generic closed-cycle helpers, N vertices, no convexity assumed

def _cycle_edges(verts):
    return list(zip(verts, verts[1:] + verts[:1]))


def _cycle_area2(verts) -> int:
    return sum(a.x * b.y - b.x * a.y for a, b in _cycle_edges(verts))


def _cycle_boundary(verts) -> int:
    return sum(gcd(abs(b.x - a.x), abs(b.y - a.y)) for a, b in _cycle_edges(verts))


def _on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool:
    return (
        cross(a, b, p) == 0
        and min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def _point_in_simple_polygon(p: LatticePoint, verts) -> bool:
    """Strict interior test for a simple polygon: boundary points are not
    interior; otherwise exact even-odd counting of edge crossings of the
    horizontal ray to the right of p."""
    edges = _cycle_edges(verts)
    for a, b in edges:
        if _on_segment(p, a, b):
            return False
    inside = False
    for a, b in edges:
        if (a.y > p.y) != (b.y > p.y):
            # x-coordinate of the crossing exceeds p.x iff num/d > 0
            d = b.y - a.y
            num = (a.x - p.x) * d + (p.y - a.y) * (b.x - a.x)
            if num != 0 and (num > 0) == (d > 0):
                inside = not inside
    return inside


def _simple_interior_count(verts) -> int:
    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    count = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if _point_in_simple_polygon(LatticePoint(x, y), verts):
                count += 1
    return count
