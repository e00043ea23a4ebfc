"""Friedl–Tillmann polytopes of relators in the derived subgroup.

The relator is traced as a lattice loop in Z^2 (``a`` is +x, ``b`` is +y),
its convex hull is taken, and the unit square ``[0,1]^2`` is removed as a
Minkowski summand.  All arithmetic is on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .errors import (
    EmptyInputError,
    EmptyWordError,
    NotASummandError,
    NotInDerivedSubgroupError,
)
from .words import Word, cyclic_core_letters, exponent_sums, max_root


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)


class PolytopeClass(Enum):
    Point = "point"
    Segment = "segment"
    TwoDimensional = "2d"


@dataclass(frozen=True)
class LatticePolytope:
    """Convex lattice polygon; vertices counterclockwise from the least one."""

    vertices: tuple

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def translate(self, v: Point) -> "LatticePolytope":
        return LatticePolytope(tuple(p + v for p in self.vertices))

    def scale(self, k: int) -> "LatticePolytope":
        if k < 1:
            raise ValueError("dilation factor must be positive")
        return LatticePolytope(tuple(Point(k * p.x, k * p.y) for p in self.vertices))

    def normalized(self) -> "LatticePolytope":
        mx = min(p.x for p in self.vertices)
        my = min(p.y for p in self.vertices)
        return self.translate(Point(-mx, -my))

    def to_json(self) -> dict:
        return {
            "class": classify(self).value,
            "vertices": [[p.x, p.y] for p in self.vertices],
        }


UNIT_SQUARE = LatticePolytope((Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)))

_STEP = {"a": Point(1, 0), "A": Point(-1, 0), "b": Point(0, 1), "B": Point(0, -1)}


def trace_loop(w: Word) -> list[Point]:
    p = Point(0, 0)
    out = [p]
    for c in w.letters:
        p = p + _STEP[c]
        out.append(p)
    return out


def _cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence) -> LatticePolytope:
    """Monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(Point(*p) for p in points))
    if not pts:
        raise EmptyInputError("convex hull of no points")
    if len(pts) <= 2:
        return LatticePolytope(tuple(pts))
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return LatticePolytope(tuple(hull))


def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    return convex_hull([u + v for u in p.vertices for v in q.vertices])


def _support_corners(normal):
    best = max(normal[0] * c.x + normal[1] * c.y for c in UNIT_SQUARE.vertices)
    return {
        c for c in UNIT_SQUARE.vertices if normal[0] * c.x + normal[1] * c.y == best
    }


def erode_unit_square(p: LatticePolytope) -> LatticePolytope:
    """Minkowski difference ``p ⊖ [0,1]^2``.

    Each hull vertex is a vertex of the summand plus the square corner
    extreme in the same normal cone; subtracting those corners gives the
    summand's vertices.  The result is checked by adding the square back.
    """
    vs = p.vertices
    if p.dim < 2:
        raise NotASummandError(f"{vs} is too thin to contain the unit square")
    corners = []
    m = len(vs)
    for i, v in enumerate(vs):
        d_in = v - vs[i - 1]
        d_out = vs[(i + 1) % m] - v
        # Outward normals of a counterclockwise polygon.
        common = _support_corners((d_in.y, -d_in.x)) & _support_corners((d_out.y, -d_out.x))
        if len(common) != 1:
            raise NotASummandError(f"no square corner fits at vertex {tuple(v)}")
        corners.append(v - common.pop())
    result = convex_hull(corners)
    if minkowski_sum(result, UNIT_SQUARE) != p:
        raise NotASummandError(f"unit square is not a summand of {vs}")
    return result


def trace_polytope(w: Word) -> LatticePolytope:
    """Un-normalized ``hull(trace) ⊖ square`` of the cyclic core of ``w``."""
    if not w:
        raise EmptyWordError("the empty relator has no polytope")
    if not exponent_sums(w).is_zero:
        raise NotInDerivedSubgroupError(f"{w} has non-zero exponent sums")
    core = Word(cyclic_core_letters(w.letters)[1])
    return erode_unit_square(convex_hull(trace_loop(core)))


def ft_polytope(w: Word) -> LatticePolytope:
    """Friedl–Tillmann polytope of ``<a, b | w>``, translated to the origin.

    A proper power ``S^n`` gets ``n`` times the polytope of ``S``.
    """
    if not w:
        raise EmptyWordError("the empty relator has no polytope")
    base = trace_polytope(w)
    _, n = max_root(w)
    return base.scale(n).normalized()


def classify(p: LatticePolytope) -> PolytopeClass:
    return (PolytopeClass.Point, PolytopeClass.Segment, PolytopeClass.TwoDimensional)[p.dim]
