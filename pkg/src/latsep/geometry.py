"""Lattice and affine geometry primitives, all in exact arithmetic.

Points are tuples of Python ints; coefficients of hyperplanes are
``fractions.Fraction``.  Convex-hull membership is decided by exact
linear feasibility, never by floating point, so every answer produced
here can serve as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .errors import DimensionMismatchError, UnsupportedDimensionError
from .exactlp import feasible_point

IntPoint = tuple[int, ...]


def as_point(coords) -> IntPoint:
    pt = tuple(coords)
    for c in pt:
        if not isinstance(c, int):
            raise DimensionMismatchError(f"non-integer coordinate {c!r}")
    return pt


@dataclass(frozen=True)
class PointSet:
    """A finite deduplicated set of integer points of a fixed dimension."""

    dim: int
    points: tuple[IntPoint, ...]  # sorted, unique

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatchError("dimension must be >= 1")
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatchError(f"point {p} does not have dimension {self.dim}")
        object.__setattr__(self, "_members", frozenset(self.points))

    @classmethod
    def of(cls, points, dim: int | None = None) -> "PointSet":
        pts = sorted({as_point(p) for p in points})
        if dim is None:
            if not pts:
                raise DimensionMismatchError("cannot infer dimension of an empty set")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def member_set(self) -> frozenset:
        return self._members


@dataclass(frozen=True)
class AffineFunctional:
    """g(x) = <normal, x> - offset, with exact rational coefficients."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    @classmethod
    def of(cls, normal, offset) -> "AffineFunctional":
        return cls(tuple(Fraction(v) for v in normal), Fraction(offset))

    def value(self, point) -> Fraction:
        if len(point) != len(self.normal):
            raise DimensionMismatchError("functional/point dimension mismatch")
        return sum((n * x for n, x in zip(self.normal, point)), Fraction(0)) - self.offset

    def is_constant(self) -> bool:
        return all(n == 0 for n in self.normal)

    def primitive(self) -> "AffineFunctional":
        """Equivalent functional with coprime integer data (same sign)."""
        vec = list(self.normal) + [self.offset]
        lcm = 1
        for v in vec:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in vec]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        return AffineFunctional(tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1]))


@dataclass(frozen=True)
class Line:
    """A lattice line: base point, primitive canonical direction, and the
    trace of the ambient point set in increasing parameter order."""

    base: IntPoint
    direction: tuple[int, ...]
    trace: tuple[IntPoint, ...]


def affine_hull_basis(s: PointSet) -> tuple[IntPoint, list[tuple[int, ...]]]:
    """Anchor point and a maximal independent set of difference vectors.

    Every point of ``s`` is the anchor plus a rational combination of the
    returned integer directions.
    """
    if len(s) == 0:
        raise DimensionMismatchError("empty point set has no affine hull")
    anchor = s.points[0]
    diffs = [tuple(x - a for x, a in zip(p, anchor)) for p in s.points[1:]]
    return anchor, linalg.independent_subset(diffs)


def point_in_conv(x, s: PointSet) -> bool:
    """Exact test: is x a convex combination of the points of s?

    x may have Fraction coordinates.
    """
    return convex_combination_support(x, s) is not None


def convex_combination_support(x, s: PointSet) -> list[IntPoint] | None:
    """Points of s carrying positive weight in one convex representation
    of x, or None when x is outside conv(s).  The support has at most
    dim+1 points (the solver returns a basic solution)."""
    x = tuple(Fraction(v) for v in x)
    if len(x) != s.dim:
        raise DimensionMismatchError("point/set dimension mismatch")
    pts = s.points
    rows = [[Fraction(p[i]) for p in pts] for i in range(s.dim)]
    rows.append([Fraction(1)] * len(pts))
    rhs = list(x) + [Fraction(1)]
    lam = feasible_point(rows, rhs)
    if lam is None:
        return None
    return [pts[i] for i, v in enumerate(lam) if v > 0]


def bounding_box(points) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lo = tuple(min(p[i] for p in points) for i in range(len(points[0])))
    hi = tuple(max(p[i] for p in points) for i in range(len(points[0])))
    return lo, hi


def box_points(lo, hi):
    """All integer points of the box [lo, hi], lexicographic order."""
    if len(lo) == 1:
        for x in range(lo[0], hi[0] + 1):
            yield (x,)
        return
    for x in range(lo[0], hi[0] + 1):
        for rest in box_points(lo[1:], hi[1:]):
            yield (x,) + rest


def lattice_points_in_conv(s: PointSet) -> PointSet:
    """conv(s) intersected with the integer lattice.

    Enumerates the integer bounding box and keeps the points that pass
    the exact membership test.  Membership is tested against the hull's
    vertices only; the hull is unchanged by dropping interior points.
    """
    hull = PointSet(s.dim, tuple(_hull_vertices(s))) if len(s) > 2 * (s.dim + 1) else s
    lo, hi = bounding_box(s.points)
    inside = []
    for cand in box_points(lo, hi):
        if cand in s or point_in_conv(cand, hull):
            inside.append(cand)
    return PointSet(s.dim, tuple(sorted(inside)))


def _hull_vertices(s: PointSet) -> list[IntPoint]:
    """Points of s that are vertices of conv(s).

    Non-vertices are dropped as they are found; that keeps the hull
    unchanged and shrinks the remaining membership tests.
    """
    live = list(s.points)
    verts = []
    while live:
        p = live.pop(0)
        rest = verts + live
        if not rest or not point_in_conv(p, PointSet(s.dim, tuple(sorted(rest)))):
            verts.append(p)
    return sorted(verts)


def hull_facets(s: PointSet) -> list[AffineFunctional]:
    """Irredundant functionals with conv(s) = {x : g(x) >= 0 for all g}.

    Works in ambient dimension <= 3.  When s is not full-dimensional the
    affine hull's equations are returned as paired opposite inequalities,
    so the description is exact for degenerate sets as well.
    """
    if s.dim > 3:
        raise UnsupportedDimensionError("facet enumeration supports dimension <= 3")
    anchor, basis = affine_hull_basis(s)
    r = len(basis)
    out: dict[tuple, AffineFunctional] = {}

    # Equations of the affine hull (empty when s is full-dimensional).
    for n in linalg.nullspace(basis) if r < s.dim else []:
        n = linalg.integer_primitive(n)
        c = sum(a * b for a, b in zip(n, anchor))
        for sign in (1, -1):
            g = AffineFunctional.of([sign * v for v in n], sign * c).primitive()
            out[(g.normal, g.offset)] = g
    if r == 0:
        return list(out.values())

    verts = _hull_vertices(s)
    for subset in combinations(verts, r):
        base = subset[0]
        dirs = [tuple(x - b for x, b in zip(p, base)) for p in subset[1:]]
        if linalg.rank(dirs) != r - 1:
            continue
        # normal inside the hull's direction space, orthogonal to the face
        system = dirs + [list(v) for v in linalg.nullspace(basis)]
        normals = linalg.nullspace(system)
        if len(normals) != 1:
            continue
        n = linalg.integer_primitive(normals[0])
        c = sum(a * b for a, b in zip(n, base))
        vals = [sum(a * b for a, b in zip(n, p)) - c for p in s.points]
        if all(v >= 0 for v in vals):
            g = AffineFunctional.of(n, c).primitive()
        elif all(v <= 0 for v in vals):
            g = AffineFunctional.of([-v for v in n], -c).primitive()
        else:
            continue
        out[(g.normal, g.offset)] = g
    return sorted(out.values(), key=lambda g: (g.normal, g.offset))


def line_key(point, direction):
    """Integer invariant identifying the line through ``point`` along
    ``direction``; equal keys mean equal lines (for a fixed direction)."""
    j0 = next(i for i, v in enumerate(direction) if v != 0)
    return tuple(
        direction[j0] * point[i] - point[j0] * direction[i]
        for i in range(len(point))
        if i != j0
    )


def iter_lines(points: list[IntPoint]):
    """Yield (direction, [trace, ...]) for every line with >= 2 points,
    grouped by canonical primitive direction, deterministically ordered.

    ``points`` must be lexicographically sorted; traces come out in
    increasing parameter order (which coincides with lex order for
    canonical directions).
    """
    directions = set()
    for p, q in combinations(points, 2):
        directions.add(linalg.canonical_direction(tuple(b - a for a, b in zip(p, q))))
    for d in sorted(directions):
        buckets: dict[tuple, list[IntPoint]] = {}
        for p in points:
            buckets.setdefault(line_key(p, d), []).append(p)
        traces = [tr for _, tr in sorted(buckets.items()) if len(tr) >= 2]
        if traces:
            yield d, traces


def lines_through(s: PointSet) -> list[Line]:
    """Every line containing at least two points of s, exactly once."""
    if len(s) < 2:
        raise DimensionMismatchError("need at least two points")
    out = []
    for d, traces in iter_lines(list(s.points)):
        for tr in traces:
            out.append(Line(tr[0], d, tuple(tr)))
    return out
