"""Slope-constrained compositions and the convex chains they index.

Two index families are enumerated independently (so the bijection between
them is a checkable fact, not a construction):

* family D: steps (a_l, b_l) with sum(a) = i, sum(b) = n and
  1 > a_1/b_1 > ... > a_k/b_k > 0;
* family C: steps (x_l, y_l) with sum(x) = i, sum(y) = j and
  y_1/x_1 < ... < y_k/x_k.

Slopes are compared by integer cross products throughout. Each family is
produced grouped by increasing step count k, lexicographically within a
group, so output order is reproducible. k never exceeds min(i, j): every
step consumes at least one unit of each coordinate (in D via b - a >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .geometry import ChainPolygon, LatticePoint, TriangleSpec

Steps = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CompositionD:
    """Steps (a_l, b_l), each 1 <= a < b, with slopes a/b strictly decreasing."""

    steps: Steps

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))
        if not self.steps:
            raise ValueError("composition needs at least one step")
        for a, b in self.steps:
            if a < 1 or b <= a:
                raise ValueError(f"step ({a},{b}) violates 1 <= a < b")
        for (a1, b1), (a2, b2) in zip(self.steps, self.steps[1:]):
            if a1 * b2 <= a2 * b1:
                raise ValueError(f"slopes must strictly decrease: ({a1},{b1}) then ({a2},{b2})")

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def sum_a(self) -> int:
        return sum(a for a, _ in self.steps)

    @property
    def sum_b(self) -> int:
        return sum(b for _, b in self.steps)


@dataclass(frozen=True)
class CompositionC:
    """Steps (x_l, y_l), each >= 1, with slopes y/x strictly increasing."""

    steps: Steps

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))
        if not self.steps:
            raise ValueError("composition needs at least one step")
        for x, y in self.steps:
            if x < 1 or y < 1:
                raise ValueError(f"step ({x},{y}) must be positive in both coordinates")
        for (x1, y1), (x2, y2) in zip(self.steps, self.steps[1:]):
            if x1 * y2 - x2 * y1 <= 0:
                raise ValueError(f"slopes must strictly increase: ({x1},{y1}) then ({x2},{y2})")

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def sum_x(self) -> int:
        return sum(x for x, _ in self.steps)

    @property
    def sum_y(self) -> int:
        return sum(y for _, y in self.steps)


def pair_cross_sum(steps: Steps) -> int:
    """Sum over l1 < l2 of (a_l1 * b_l2 - a_l2 * b_l1)."""
    total = 0
    for l1 in range(len(steps)):
        a1, b1 = steps[l1]
        for l2 in range(l1 + 1, len(steps)):
            a2, b2 = steps[l2]
            total += a1 * b2 - a2 * b1
    return total


def pair_gcd_sum(steps: Steps) -> int:
    return sum(gcd(a, b) for a, b in steps)


def enumerate_D(i: int, n: int) -> Iterator[CompositionD]:
    """Every element of the D family for (i, n), each exactly once."""
    if i < 1 or n <= i:
        raise ValueError(f"need 1 <= i < n, got i={i}, n={n}")
    for k in range(1, min(i, n - i) + 1):
        yield from _fill_d([], k, i, n)


def _fill_d(prefix, slots, rem_a, rem_b):
    if slots == 1:
        a, b = rem_a, rem_b
        if a >= 1 and b > a and (not prefix or prefix[-1][0] * b > a * prefix[-1][1]):
            yield CompositionD((*prefix, (a, b)))
        return
    # leave >= 1 of a and >= 2 of b (since b > a >= 1) for each later slot
    for a in range(1, rem_a - (slots - 1) + 1):
        for b in range(a + 1, rem_b - 2 * (slots - 1) + 1):
            if prefix and prefix[-1][0] * b <= a * prefix[-1][1]:
                continue
            yield from _fill_d([*prefix, (a, b)], slots - 1, rem_a - a, rem_b - b)


def enumerate_C(i: int, j: int) -> Iterator[CompositionC]:
    """Every element of the C family for (i, j), each exactly once."""
    if i < 1 or j < 1:
        raise ValueError(f"need i, j >= 1, got i={i}, j={j}")
    for k in range(1, min(i, j) + 1):
        yield from _fill_c([], k, i, j)


def _fill_c(prefix, slots, rem_x, rem_y):
    if slots == 1:
        x, y = rem_x, rem_y
        if x >= 1 and y >= 1 and (not prefix or prefix[-1][0] * y - x * prefix[-1][1] > 0):
            yield CompositionC((*prefix, (x, y)))
        return
    for x in range(1, rem_x - (slots - 1) + 1):
        for y in range(1, rem_y - (slots - 1) + 1):
            if prefix and prefix[-1][0] * y - x * prefix[-1][1] <= 0:
                continue
            yield from _fill_c([*prefix, (x, y)], slots - 1, rem_x - x, rem_y - y)


def d_to_c(d: CompositionD) -> CompositionC:
    """(a, b) -> (a, b - a); slope order flips from decreasing to increasing."""
    return CompositionC(tuple((a, b - a) for a, b in d.steps))


def c_to_d(c: CompositionC) -> CompositionD:
    """(x, y) -> (x, x + y); inverse of d_to_c."""
    return CompositionD(tuple((x, x + y) for x, y in c.steps))


def composition_to_polygon(c: CompositionC, spec: TriangleSpec) -> ChainPolygon:
    """Chain whose vertices are the partial sums of the steps."""
    if c.sum_x != spec.i or c.sum_y != spec.j:
        raise ValueError(
            f"step sums ({c.sum_x},{c.sum_y}) do not match triangle ({spec.i},{spec.j})"
        )
    verts = [LatticePoint(0, 0)]
    for x, y in c.steps:
        verts.append(LatticePoint(verts[-1].x + x, verts[-1].y + y))
    return ChainPolygon(tuple(verts), spec)


def polygon_to_composition(p: ChainPolygon) -> CompositionC:
    """Consecutive vertex differences; inverse of composition_to_polygon."""
    return CompositionC(
        tuple((b.x - a.x, b.y - a.y) for a, b in zip(p.vertices, p.vertices[1:]))
    )


def enumerate_polygons(spec: TriangleSpec) -> Iterator[ChainPolygon]:
    """The full polygon family of the triangle (the 2-gon comes first)."""
    for c in enumerate_C(spec.i, spec.j):
        yield composition_to_polygon(c, spec)
