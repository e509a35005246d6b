"""Geometry primitives against frozen oracle values and invariants."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from latsep.errors import DimensionMismatchError, UnsupportedDimensionError
from latsep.geometry import (
    AffineFunctional,
    PointSet,
    affine_hull_basis,
    hull_facets,
    lattice_points_in_conv,
    lines_through,
    point_in_conv,
)

from oracles import (
    oracle_conv_membership_grid,
    oracle_lines_by_pairs,
    oracle_simplex_543_member,
    oracle_simplex_1374_member,
)


def _simplex_points_543():
    return PointSet.of([(0, 0, 0), (5, 0, 0), (0, 4, 0), (0, 0, 3)])


class TestPointSet:
    def test_dedupe_and_order(self):
        s = PointSet.of([(1, 0), (0, 0), (1, 0)])
        assert s.points == ((0, 0), (1, 0))
        assert (1, 0) in s and (2, 2) not in s

    def test_dimension_validation(self):
        with pytest.raises(DimensionMismatchError):
            PointSet.of([(0, 0), (0, 0, 0)])
        with pytest.raises(DimensionMismatchError):
            PointSet.of([(0.5, 1)])


class TestAffineHull:
    def test_single_point(self):
        anchor, basis = affine_hull_basis(PointSet.of([(0, 0)]))
        assert anchor == (0, 0) and basis == []

    def test_collinear(self):
        anchor, basis = affine_hull_basis(PointSet.of([(0, 0), (2, 0), (1, 0)]))
        assert len(basis) == 1
        assert basis[0][1] == 0 and basis[0][0] != 0

    def test_simplex_rank_three(self):
        # frozen by the elimination oracle: the 5-4-3 simplex spans rank 3
        pts = lattice_points_in_conv(_simplex_points_543())
        _, basis = affine_hull_basis(pts)
        assert len(basis) == 3

    def test_every_point_reachable(self):
        s = PointSet.of([(0, 0), (1, 2), (3, 1), (2, 2)])
        anchor, basis = affine_hull_basis(s)
        # rank 2 in the plane: difference space is everything
        assert len(basis) == 2


class TestPointInConv:
    def test_equal_thirds_combination(self):
        s = PointSet.of([(5, 0, 0), (0, 0, 3), (1, 3, 0)])
        assert point_in_conv((2, 1, 1), s)

    def test_vertex_membership(self):
        s = PointSet.of([(0, 0), (4, 1), (2, 5)])
        for p in s.points:
            assert point_in_conv(p, s)

    def test_outside(self):
        s = PointSet.of([(0, 0), (1, 0), (0, 1)])
        assert not point_in_conv((1, 1), s)
        assert point_in_conv((Fraction(1, 2), Fraction(1, 2)), s)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            point_in_conv((0, 0, 0), PointSet.of([(0, 0)]))

    def test_agrees_with_grid_oracle(self):
        # small instances whose basic solutions have denominators dividing 12
        cases = [
            ([(0, 0), (2, 0), (0, 2)], [12]),
            ([(0, 0), (1, 2), (2, 1)], [3, 4]),
            ([(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)], [2, 3]),
        ]
        for pts, dens in cases:
            s = PointSet.of(pts)
            lo = [min(p[i] for p in pts) for i in range(s.dim)]
            hi = [max(p[i] for p in pts) for i in range(s.dim)]
            for cand in _box(lo, hi):
                got = point_in_conv(cand, s)
                want = oracle_conv_membership_grid(cand, pts, dens)
                assert got == want, (pts, cand)


def _box(lo, hi):
    if len(lo) == 1:
        return [(x,) for x in range(lo[0], hi[0] + 1)]
    return [(x,) + rest for x in range(lo[0], hi[0] + 1) for rest in _box(lo[1:], hi[1:])]


class TestLatticePointsInConv:
    def test_unimodular_triangle(self):
        s = PointSet.of([(0, 0), (1, 0), (0, 1)])
        assert lattice_points_in_conv(s).points == s.points

    def test_simplex_543_frozen_count(self):
        pts = lattice_points_in_conv(_simplex_points_543())
        assert len(pts) == 28  # frozen by the closed-form membership oracle
        for p in pts.points:
            assert oracle_simplex_543_member(p)

    def test_simplex_1374_frozen_count(self):
        s = PointSet.of([(0, 0, 0), (13, 0, 0), (0, 7, 0), (0, 0, 4)])
        pts = lattice_points_in_conv(s)
        assert len(pts) == 114
        assert all(oracle_simplex_1374_member(p) for p in pts.points)

    def test_terminal_simplex_only_five_points(self):
        s = PointSet.of([(1, 0, 0), (0, 1, 0), (1, 1, 2), (-1, -1, -1)])
        pts = lattice_points_in_conv(s)
        assert set(pts.points) == set(s.points) | {(0, 0, 0)}

    def test_superset_and_idempotent(self):
        rng = random.Random(7)
        for _ in range(10):
            pts = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)]
            s = PointSet.of(pts)
            full = lattice_points_in_conv(s)
            assert set(s.points) <= set(full.points)
            again = lattice_points_in_conv(full)
            assert again.points == full.points


class TestHullFacets:
    def test_triangle(self):
        fs = hull_facets(PointSet.of([(0, 0), (1, 0), (0, 1)]))
        assert len(fs) == 3

    def test_square(self):
        fs = hull_facets(PointSet.of([(0, 0), (1, 0), (0, 1), (1, 1)]))
        assert len(fs) == 4

    def test_simplex_1374_normals(self):
        # frozen by the cross-product oracle on the face vertices
        s = lattice_points_in_conv(
            PointSet.of([(0, 0, 0), (13, 0, 0), (0, 7, 0), (0, 0, 4)])
        )
        fs = hull_facets(s)
        got = {(tuple(int(v) for v in g.normal), int(g.offset)) for g in fs}
        assert got == {
            ((1, 0, 0), 0),
            ((0, 1, 0), 0),
            ((0, 0, 1), 0),
            ((-28, -52, -91), -364),
        }

    def test_one_sidedness_invariant(self):
        rng = random.Random(11)
        for _ in range(8):
            pts = [(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(5)]
            s = PointSet.of(pts)
            for g in hull_facets(s):
                assert all(g.value(p) >= 0 for p in s.points)

    def test_degenerate_segment_has_exact_description(self):
        s = PointSet.of([(0, 0), (2, 1)])
        fs = hull_facets(s)
        inside = [p for p in _box((-1, -1), (3, 3)) if all(g.value(p) >= 0 for g in fs)]
        assert inside == [(0, 0), (2, 1)]

    def test_dimension_guard(self):
        with pytest.raises(UnsupportedDimensionError):
            hull_facets(PointSet.of([(0, 0, 0, 0), (1, 0, 0, 0)]))


class TestLinesThrough:
    def test_axis_trace(self):
        s = PointSet.of([(0, 0), (1, 0), (2, 0), (0, 1)])
        ls = lines_through(s)
        axis = [l for l in ls if l.direction == (1, 0) and l.base == (0, 0)]
        assert axis and axis[0].trace == ((0, 0), (1, 0), (2, 0))

    def test_grid_3x3_frozen_count(self):
        s = PointSet.of([(x, y) for x in range(3) for y in range(3)])
        ls = lines_through(s)
        assert len(ls) == 20  # frozen by the exhaustive pair oracle
        assert len(oracle_lines_by_pairs(s.points)) == 20

    def test_two_points_single_line(self):
        ls = lines_through(PointSet.of([(0, 0), (1, 1)]))
        assert len(ls) == 1 and len(ls[0].trace) == 2

    def test_pair_coverage_property(self):
        rng = random.Random(23)
        for _ in range(6):
            pts = {(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(6)}
            if len(pts) < 2:
                continue
            s = PointSet.of(pts)
            ls = lines_through(s)
            cover = {}
            for li, l in enumerate(ls):
                for p, q in combinations(l.trace, 2):
                    cover.setdefault((p, q), []).append(li)
            for p, q in combinations(s.points, 2):
                assert len(cover.get((p, q), [])) == 1


def test_affine_functional_primitive():
    g = AffineFunctional.of([Fraction(2, 3), Fraction(-4, 3)], Fraction(2, 3))
    prim = g.primitive()
    assert prim.normal == (Fraction(1), Fraction(-2)) and prim.offset == 1
    # orientation preserved
    assert g.value((5, 1)) * prim.value((5, 1)) >= 0
