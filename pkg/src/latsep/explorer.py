"""Exhaustive and randomized search harnesses.

Enumerates families of small point sets (optionally filtered by a
convexity property), sweeps all bipartitions modulo the A/B swap, and
compares pairs of separation conditions.  Any (set, partition) pair on
which the two conditions disagree is reported with both sides' points
and can be replayed through the decision procedures.

The same machinery drives the hunt for three-dimensional
counterexamples: sample lattice point sets of random small polytopes,
keep the integrally convex ones, and look for bipartitions that satisfy
the 3-parallelogram condition yet admit no separating flag.
"""

from __future__ import annotations

import json
import multiprocessing
import random
from dataclasses import dataclass, field

from .conditions import Partition, check_parallelogram, check_ray, search_flag
from .convexity import is_hole_free, is_integrally_convex, is_k_convex
from .geometry import PointSet, lattice_points_in_conv
from .verdicts import Verdict

IntPoint = tuple[int, ...]

MAX_GRID_SUBSETS = 1 << 24

FAMILY_FILTERS = ("any", "hole-free", "integrally-convex", "1-convex")

CONDITIONS = {
    "parallelogram-2": lambda p: check_parallelogram(p, 2),
    "parallelogram-3": lambda p: check_parallelogram(p, 3),
    "ray": check_ray,
    "flag": search_flag,
}


def evaluate_condition(name: str, partition: Partition) -> Verdict:
    try:
        fn = CONDITIONS[name]
    except KeyError:
        raise ValueError(f"unknown condition {name!r}") from None
    return fn(partition)


def _passes_filter(s: PointSet, family: str) -> bool:
    if family == "any":
        return True
    if family == "hole-free":
        return is_hole_free(s).holds
    if family == "integrally-convex":
        return is_integrally_convex(s).holds
    if family == "1-convex":
        return is_k_convex(s, 1).holds
    raise ValueError(f"unknown family filter {family!r}")


def grid_points(dims) -> list[IntPoint]:
    pts = [()]
    for n in dims:
        pts = [p + (x,) for p in pts for x in range(n)]
    return sorted(pts)


def enumerate_family(dims, family: str = "any", start_mask: int = 0):
    """Nonempty subsets of the grid passing the filter, ascending bitmask
    order (deterministic), starting after ``start_mask``."""
    cells = grid_points(dims)
    n = len(cells)
    if (1 << n) > MAX_GRID_SUBSETS:
        raise ValueError(f"grid with {n} cells is too large to enumerate")
    for mask in range(max(1, start_mask + 1), 1 << n):
        s = PointSet.of(
            [cells[i] for i in range(n) if mask >> i & 1], dim=len(dims)
        )
        if _passes_filter(s, family):
            yield mask, s


def bipartitions(s: PointSet):
    """All (A, B) with both sides nonempty, up to the A/B swap: the
    lexicographically smallest point always goes to A."""
    rest = list(s.points[1:])
    n = len(rest)
    for mask in range(0, (1 << n) - 1):
        a = [s.points[0]] + [rest[i] for i in range(n) if mask >> i & 1]
        b = [rest[i] for i in range(n) if not mask >> i & 1]
        yield Partition.of(a, b, s.dim)


@dataclass(frozen=True)
class Violation:
    """A bipartition on which the two tested conditions disagree."""

    set_points: tuple[IntPoint, ...]
    a_points: tuple[IntPoint, ...]
    b_points: tuple[IntPoint, ...]
    left: str
    right: str
    left_holds: bool
    right_holds: bool

    def partition(self) -> Partition:
        return Partition.of(self.a_points, self.b_points)

    def as_dict(self) -> dict:
        return {
            "set_points": [list(p) for p in self.set_points],
            "a_points": [list(p) for p in self.a_points],
            "b_points": [list(p) for p in self.b_points],
            "left": self.left,
            "right": self.right,
            "left_holds": self.left_holds,
            "right_holds": self.right_holds,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Violation":
        return cls(
            tuple(tuple(p) for p in d["set_points"]),
            tuple(tuple(p) for p in d["a_points"]),
            tuple(tuple(p) for p in d["b_points"]),
            d["left"],
            d["right"],
            d["left_holds"],
            d["right_holds"],
        )


@dataclass
class EquivalenceReport:
    dims: tuple[int, ...]
    family: str
    left: str
    right: str
    sets_checked: int = 0
    partitions_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_set(args):
    mask, points, dim, left, right = args
    s = PointSet.of(points, dim)
    violations = []
    n_partitions = 0
    for partition in bipartitions(s):
        n_partitions += 1
        lv = evaluate_condition(left, partition)
        rv = evaluate_condition(right, partition)
        if lv.holds != rv.holds:
            violations.append(
                Violation(
                    s.points,
                    partition.a.points,
                    partition.b.points,
                    left,
                    right,
                    lv.holds,
                    rv.holds,
                )
            )
    return mask, n_partitions, violations


def test_equivalence(
    dims,
    family: str,
    left: str,
    right: str,
    stop_after: int | None = None,
    jobs: int = 1,
    checkpoint: str | None = None,
    stream=None,
) -> EquivalenceReport:
    """Check left <=> right over every bipartition of every family member.

    ``stop_after`` ends the sweep once that many violations are found;
    ``checkpoint`` names a JSON file storing the enumeration cursor so an
    interrupted sweep resumes where it left off; ``stream`` receives one
    JSON line per progress chunk and per violation.
    """
    report = EquivalenceReport(tuple(dims), family, left, right)
    start_mask = 0
    if checkpoint:
        state = _load_checkpoint(checkpoint)
        if state and state.get("kind") == "equivalence":
            start_mask = state["cursor"]
            report.sets_checked = state["sets_checked"]
            report.partitions_checked = state["partitions_checked"]
            report.violations = [Violation.from_dict(v) for v in state["violations"]]

    tasks = (
        (mask, s.points, s.dim, left, right)
        for mask, s in enumerate_family(dims, family, start_mask)
    )
    pool = multiprocessing.Pool(jobs) if jobs > 1 else None
    cursor = start_mask
    try:
        results = pool.imap(_check_set, tasks, chunksize=8) if pool else map(_check_set, tasks)
        for mask, n_partitions, violations in results:
            cursor = mask
            report.sets_checked += 1
            report.partitions_checked += n_partitions
            for v in violations:
                report.violations.append(v)
                _emit(stream, {"type": "violation", **v.as_dict()})
            if report.sets_checked % 64 == 0:
                _emit(
                    stream,
                    {
                        "type": "progress",
                        "cursor": cursor,
                        "sets": report.sets_checked,
                        "partitions": report.partitions_checked,
                    },
                )
                if checkpoint:
                    _save_checkpoint(checkpoint, _equivalence_state(report, cursor))
            if stop_after is not None and len(report.violations) >= stop_after:
                break
        else:
            cursor = (1 << len(grid_points(dims))) - 1
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    if checkpoint:
        _save_checkpoint(checkpoint, _equivalence_state(report, cursor))
    return report


test_equivalence.__test__ = False  # not a test, despite the name


def _equivalence_state(report: EquivalenceReport, cursor: int) -> dict:
    return {
        "kind": "equivalence",
        "cursor": cursor,
        "sets_checked": report.sets_checked,
        "partitions_checked": report.partitions_checked,
        "violations": [v.as_dict() for v in report.violations],
    }


def _load_checkpoint(path: str) -> dict | None:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        return None


def _save_checkpoint(path: str, state: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state, fh, sort_keys=True)
        fh.write("\n")


def _emit(stream, record: dict) -> None:
    if stream is not None:
        stream.write(json.dumps(record, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# conjecture hunt in dimension 3

@dataclass
class HuntReport:
    seed: int
    budget: int
    samples: int = 0
    admitted_sets: int = 0
    partitions_checked: int = 0
    counterexamples: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def hunt_over_set(s: PointSet, report: HuntReport, stream=None) -> None:
    """Test every bipartition of one set: any with the 3-parallelogram
    condition but no separating flag is logged as a counterexample."""
    for partition in bipartitions(s):
        report.partitions_checked += 1
        if not check_parallelogram(partition, 3).holds:
            continue
        if search_flag(partition).holds:
            continue
        v = Violation(
            s.points,
            partition.a.points,
            partition.b.points,
            "parallelogram-3",
            "flag",
            True,
            False,
        )
        report.counterexamples.append(v)
        _emit(stream, {"type": "counterexample", **v.as_dict()})


def _sample_candidate(rng: random.Random, box: int) -> PointSet:
    """One random candidate set for the hunt.

    Alternates between lattice points of a polytope with random vertices
    in [0, box]^3 and a random grid box clipped by half-spaces with
    {-1,0,1} normals.  Vertex polytopes are almost never integrally
    convex once the box grows, so the clipped-box mode keeps the
    admission rate of the integral-convexity filter useful.
    """
    if rng.random() < 0.5:
        n_verts = rng.randint(4, 7)
        verts = [tuple(rng.randint(0, box) for _ in range(3)) for _ in range(n_verts)]
        return lattice_points_in_conv(PointSet.of(verts, 3))
    dims = [rng.randint(1, 3) for _ in range(3)]
    pts = grid_points([d + 1 for d in dims])
    for _ in range(rng.randint(1, 3)):
        normal = tuple(rng.choice((-1, 0, 1)) for _ in range(3))
        if normal == (0, 0, 0):
            continue
        vals = [sum(a * b for a, b in zip(normal, p)) for p in pts]
        cut = rng.randint(min(vals), max(vals))
        kept = [p for p, v in zip(pts, vals) if v <= cut]
        if len(kept) >= 2:
            pts = kept
    return PointSet.of(pts, 3)


def conjecture_hunt(
    budget: int,
    seed: int = 0,
    box: int = 2,
    max_set_size: int = 12,
    checkpoint: str | None = None,
    stream=None,
) -> HuntReport:
    """Sample small integrally convex subsets of Z^3 and look for
    bipartitions with the 3-parallelogram condition and no flag.

    Each sample index has its own derived RNG seed, so runs resumed from
    a checkpoint reproduce exactly the samples a fresh run would draw.
    """
    report = HuntReport(seed=seed, budget=budget)
    start = 0
    if checkpoint:
        state = _load_checkpoint(checkpoint)
        if state and state.get("kind") == "conjecture" and state.get("seed") == seed:
            start = state["cursor"]
            report.samples = state["samples"]
            report.admitted_sets = state["admitted_sets"]
            report.partitions_checked = state["partitions_checked"]
            report.counterexamples = [
                Violation.from_dict(v) for v in state["counterexamples"]
            ]
    for i in range(start, budget):
        rng = random.Random(seed * 1000003 + i)
        report.samples += 1
        s = _sample_candidate(rng, box)
        if 2 <= len(s) <= max_set_size and is_integrally_convex(s).holds:
            report.admitted_sets += 1
            hunt_over_set(s, report, stream)
        _emit(
            stream,
            {
                "type": "progress",
                "cursor": i + 1,
                "admitted": report.admitted_sets,
                "partitions": report.partitions_checked,
            },
        )
        if checkpoint:
            _save_checkpoint(
                checkpoint,
                {
                    "kind": "conjecture",
                    "seed": seed,
                    "cursor": i + 1,
                    "samples": report.samples,
                    "admitted_sets": report.admitted_sets,
                    "partitions_checked": report.partitions_checked,
                    "counterexamples": [v.as_dict() for v in report.counterexamples],
                },
            )
    return report
