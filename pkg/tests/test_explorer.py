"""Search harnesses: enumeration, equivalence sweeps, conjecture hunt."""

import io
import json

import pytest

from latsep.conditions import check_parallelogram, search_flag
from latsep.explorer import (
    HuntReport,
    Violation,
    bipartitions,
    conjecture_hunt,
    enumerate_family,
    evaluate_condition,
    grid_points,
    hunt_over_set,
    test_equivalence,
)
from latsep.geometry import PointSet


class TestEnumerateFamily:
    def test_2x2_any_has_15(self):
        assert sum(1 for _ in enumerate_family((2, 2), "any")) == 15

    def test_2x2_hole_free_has_15(self):
        # frozen by the clipping oracle: every subset of a unit cell
        assert sum(1 for _ in enumerate_family((2, 2), "hole-free")) == 15

    def test_3x3_frozen_counts(self):
        assert sum(1 for _ in enumerate_family((3, 3), "integrally-convex")) == 117
        assert sum(1 for _ in enumerate_family((3, 3), "hole-free")) == 213
        assert sum(1 for _ in enumerate_family((3, 3), "1-convex")) == 217

    def test_guard_rejects_large_grids(self):
        with pytest.raises(ValueError):
            list(enumerate_family((5, 5), "any"))

    def test_deterministic_order(self):
        first = [m for m, _ in enumerate_family((2, 2), "any")]
        second = [m for m, _ in enumerate_family((2, 2), "any")]
        assert first == second == sorted(first)


class TestBipartitions:
    def test_counts_and_swap_reduction(self):
        s = PointSet.of([(0, 0), (1, 0), (0, 1)])
        parts = list(bipartitions(s))
        assert len(parts) == 3  # 2^(3-1) - 1
        for p in parts:
            assert s.points[0] in p.a

    def test_single_point_has_none(self):
        assert list(bipartitions(PointSet.of([(0, 0)]))) == []


class TestEquivalence:
    def test_violations_replay(self):
        report = test_equivalence(
            (3, 3), "hole-free", "parallelogram-2", "flag", stop_after=2
        )
        assert len(report.violations) >= 1
        for v in report.violations:
            p = v.partition()
            assert check_parallelogram(p, 2).holds == v.left_holds
            assert search_flag(p).holds == v.right_holds

    def test_integrally_convex_equivalence_clean(self):
        report = test_equivalence((2, 3), "integrally-convex", "parallelogram-2", "flag")
        assert report.ok and report.sets_checked > 0

    def test_stream_records(self):
        buf = io.StringIO()
        test_equivalence(
            (3, 3), "hole-free", "parallelogram-2", "flag", stop_after=1, stream=buf
        )
        lines = [json.loads(ln) for ln in buf.getvalue().splitlines()]
        assert any(rec["type"] == "violation" for rec in lines)

    def test_checkpoint_resume(self, tmp_path):
        cp = tmp_path / "cp.json"
        partial = test_equivalence(
            (2, 3), "any", "parallelogram-2", "flag", stop_after=1, checkpoint=str(cp)
        )
        resumed = test_equivalence(
            (2, 3), "any", "parallelogram-2", "flag", checkpoint=str(cp)
        )
        fresh = test_equivalence((2, 3), "any", "parallelogram-2", "flag")
        assert resumed.sets_checked == fresh.sets_checked
        assert resumed.partitions_checked == fresh.partitions_checked
        assert len(resumed.violations) == len(fresh.violations)
        assert partial.sets_checked <= fresh.sets_checked

    def test_jobs_match_serial(self):
        serial = test_equivalence((2, 3), "hole-free", "parallelogram-2", "flag")
        parallel = test_equivalence(
            (2, 3), "hole-free", "parallelogram-2", "flag", jobs=2
        )
        assert serial.partitions_checked == parallel.partitions_checked
        assert [v.as_dict() for v in serial.violations] == [
            v.as_dict() for v in parallel.violations
        ]

    def test_unknown_condition(self):
        with pytest.raises(ValueError):
            evaluate_condition("nope", None)


class TestConjectureHunt:
    def test_budget_zero(self):
        report = conjecture_hunt(0, seed=1)
        assert report.samples == 0 and report.ok

    def test_unit_cube_exhaustive(self):
        cube = PointSet.of(grid_points((2, 2, 2)))
        report = HuntReport(seed=0, budget=0)
        hunt_over_set(cube, report)
        assert report.partitions_checked == 127
        assert report.ok

    def test_terminal_simplex_excluded_by_filter(self):
        from latsep.convexity import is_integrally_convex
        from latsep.geometry import lattice_points_in_conv

        s = lattice_points_in_conv(
            PointSet.of([(1, 0, 0), (0, 1, 0), (1, 1, 2), (-1, -1, -1)])
        )
        assert not is_integrally_convex(s).holds

    def test_seeded_run_deterministic(self):
        a = conjecture_hunt(8, seed=5)
        b = conjecture_hunt(8, seed=5)
        assert (a.samples, a.admitted_sets, a.partitions_checked) == (
            b.samples,
            b.admitted_sets,
            b.partitions_checked,
        )

    def test_checkpoint_resume_matches_fresh(self, tmp_path):
        cp = tmp_path / "hunt.json"
        conjecture_hunt(4, seed=3, checkpoint=str(cp))
        resumed = conjecture_hunt(10, seed=3, checkpoint=str(cp))
        fresh = conjecture_hunt(10, seed=3)
        assert (resumed.samples, resumed.admitted_sets, resumed.partitions_checked) == (
            fresh.samples,
            fresh.admitted_sets,
            fresh.partitions_checked,
        )


def test_violation_round_trips_through_json():
    v = Violation(((0, 0), (1, 1)), ((0, 0),), ((1, 1),), "ray", "flag", True, False)
    assert Violation.from_dict(json.loads(json.dumps(v.as_dict()))) == v
