"""Decision procedures for the three separation conditions.

* the k-parallelogram condition: no k' <= k points of one side share a
  coordinate sum with k' points of the other (repetition allowed);
* the ray condition: on every line meeting both sides, one side's points
  are a prefix or a suffix of the line's trace;
* flag separation: the two sides are split by a nested chain of affine
  subspaces, encoded lexicographically as an ordered list of functionals
  whose first nonzero sign classifies each point.

``search_flag`` is a complete decision procedure for flag separation of
finite sets.  Working inside the affine hull of the still-unclassified
points, it asks for each point whether some weak separator (nonnegative
on one side, nonpositive on the other) is strict there.  By LP duality
that question is a small convex-combination program: the point fails to
be strictly separable exactly when it carries positive weight in some
common point of the two sides' hulls, and when it is separable the dual
solution of the same program is the separating functional.  Summing the
dual functionals yields one separator that is strict off the common
equality set E, which becomes the next flag level; the search recurses
on E.  If no point is strictly separable, every weak separator is
constant on the affine hull of the live points and that flat blocks
every possible flag, which proves that no flag exists (any flag's first
level would strictly separate at least one live point).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

from . import linalg
from .errors import DimensionMismatchError, InvalidFlagError
from .exactlp import EqualityFeasibility
from .geometry import AffineFunctional, PointSet, affine_hull_basis, iter_lines
from .verdicts import BlockingFlat, ParallelogramWitness, RayViolation, Verdict

IntPoint = tuple[int, ...]

OWNER_A = "A"
OWNER_B = "B"
OWNER_EMPTY = "empty"


@dataclass(frozen=True)
class Partition:
    """Two disjoint nonempty point sets of the same dimension."""

    a: PointSet
    b: PointSet

    def __post_init__(self):
        if self.a.dim != self.b.dim:
            raise DimensionMismatchError("sides have different dimensions")
        if not self.a.points or not self.b.points:
            raise DimensionMismatchError("both sides must be nonempty")
        if self.a.member_set() & self.b.member_set():
            raise DimensionMismatchError("sides must be disjoint")

    @classmethod
    def of(cls, a_points, b_points, dim: int | None = None) -> "Partition":
        return cls(PointSet.of(a_points, dim), PointSet.of(b_points, dim))

    @property
    def dim(self) -> int:
        return self.a.dim

    def union(self) -> PointSet:
        return PointSet.of(self.a.points + self.b.points, self.dim)


@dataclass(frozen=True)
class SeparatingFlag:
    """Lexicographic flag: the first functional with nonzero value at a
    point decides its side (positive: A, negative: B); points where all
    levels vanish belong to the residual owner."""

    dim: int
    functionals: tuple[AffineFunctional, ...]
    residual_owner: str  # OWNER_A | OWNER_B | OWNER_EMPTY

    def classify(self, point) -> str:
        for g in self.functionals:
            v = g.value(point)
            if v > 0:
                return OWNER_A
            if v < 0:
                return OWNER_B
        return "residual"


# ---------------------------------------------------------------------------
# parallelogram condition

def check_parallelogram(p: Partition, k: int) -> Verdict:
    """No k' <= k points of A (with repetition) may share a coordinate
    sum with k' points of B.

    Sums are compared through a mixed-radix integer code computed once
    per point, so each multiset sum costs one integer addition and the
    per-order tables stay no larger than the number of distinct sums.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a_pts = p.a.points
    b_pts = p.b.points
    every = a_pts + b_pts
    d = p.dim
    lo = [min(q[i] for q in every) for i in range(d)]
    hi = [max(q[i] for q in every) for i in range(d)]
    for order in range(1, k + 1):
        mults = []
        m = 1
        for i in range(d):
            mults.append(m)
            m *= order * (hi[i] - lo[i]) + 1
        code = {q: sum((q[i] - lo[i]) * mults[i] for i in range(d)) for q in every}
        table: dict[int, tuple[IntPoint, ...]] = {}
        for combo in combinations_with_replacement(a_pts, order):
            total = sum(code[q] for q in combo)
            if total not in table:
                table[total] = combo
        for combo in combinations_with_replacement(b_pts, order):
            total = sum(code[q] for q in combo)
            left = table.get(total)
            if left is not None:
                vec = tuple(sum(q[i] for q in combo) for i in range(d))
                return Verdict(False, ParallelogramWitness(order, left, combo, vec))
    return Verdict(True)


# ---------------------------------------------------------------------------
# ray condition

def check_ray(p: Partition) -> Verdict:
    """On every line meeting both sides, A's points must be a prefix or a
    suffix of the trace of S on that line."""
    side = {q: OWNER_A for q in p.a.points}
    side.update({q: OWNER_B for q in p.b.points})
    pts = sorted(side)
    for direction, traces in iter_lines(pts):
        for tr in traces:
            sides = [side[q] for q in tr]
            count_a = sides.count(OWNER_A)
            if count_a == 0 or count_a == len(tr):
                continue
            idx = [i for i, sd in enumerate(sides) if sd == OWNER_A]
            if idx[-1] == count_a - 1 or idx[0] == len(tr) - count_a:
                continue
            return Verdict(
                False, RayViolation(tr[0], direction, tuple(tr), tuple(sides))
            )
    return Verdict(True)


# ---------------------------------------------------------------------------
# flag separation

def _flats_of(flag: SeparatingFlag):
    """Nested flats cut out by the flag levels, ambient first.

    Each flat is (anchor, basis) with a rational anchor and primitive
    integer directions; raises InvalidFlagError when some level is
    constant on the previous flat.
    """
    d = flag.dim
    anchor = tuple(Fraction(0) for _ in range(d))
    basis = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    flats = [(anchor, [tuple(v) for v in basis])]
    for level, g in enumerate(flag.functionals):
        if len(g.normal) != d:
            raise DimensionMismatchError("functional dimension mismatch")
        coeffs = [sum(n * Fraction(x) for n, x in zip(g.normal, v)) for v in basis]
        j0 = next((j for j, c in enumerate(coeffs) if c != 0), None)
        if j0 is None:
            raise InvalidFlagError(f"level {level + 1} is constant on the current flat")
        const = g.value(anchor)
        t0 = -const / coeffs[j0]
        anchor = tuple(a + t0 * Fraction(v) for a, v in zip(anchor, basis[j0]))
        new_basis = []
        for j, v in enumerate(basis):
            if j == j0:
                continue
            ratio = coeffs[j] / coeffs[j0]
            direction = tuple(
                Fraction(x) - ratio * Fraction(y) for x, y in zip(v, basis[j0])
            )
            new_basis.append(linalg.integer_primitive(direction))
        basis = new_basis
        flats.append((anchor, [tuple(v) for v in basis]))
    return flats


def verify_flag(p: Partition, flag: SeparatingFlag) -> bool:
    """Check a flag against a partition: every point must classify to its
    own side, or to the residual owner when all levels vanish on it."""
    if flag.dim != p.dim:
        raise DimensionMismatchError("flag/partition dimension mismatch")
    _flats_of(flag)  # structural validation
    for own, pts in ((OWNER_A, p.a.points), (OWNER_B, p.b.points)):
        for q in pts:
            got = flag.classify(q)
            if got == "residual":
                if flag.residual_owner != own:
                    return False
            elif got != own:
                return False
    return True


def lex_flag_to_subspace_chain(flag: SeparatingFlag):
    """The flag's nested subspace chain, smallest flat first, as
    (anchor, basis) pairs ending with the ambient space."""
    return list(reversed(_flats_of(flag)))


def _tau_map(anchor, basis):
    """Integer matrix D with tau(x) = D (x - anchor) giving coordinates
    of x in the affine hull spanned by ``basis`` (scaled to clear
    denominators)."""
    r = len(basis)
    gram = [[sum(a * b for a, b in zip(basis[i], basis[k])) for k in range(r)] for i in range(r)]
    vt_cols = [[Fraction(basis[i][j]) for i in range(r)] for j in range(len(anchor))]
    m_cols = linalg.solve_square([[Fraction(v) for v in row] for row in gram], vt_cols)
    assert m_cols is not None
    lcm = 1
    for col in m_cols:
        for v in col:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    # rows of the scaled map
    return [[int(m_cols[j][i] * lcm) for j in range(len(anchor))] for i in range(r)]


def _tau_to_ambient(p_vec, q_val, dmap, anchor) -> AffineFunctional:
    d = len(anchor)
    normal = [sum(Fraction(p_vec[i]) * dmap[i][j] for i in range(len(p_vec))) for j in range(d)]
    offset = Fraction(q_val) + sum(n * a for n, a in zip(normal, anchor))
    return AffineFunctional.of(normal, offset).primitive()


def search_flag(p: Partition) -> Verdict:
    """Complete decision procedure for flag separation of finite sets.

    On success the witness is a verifying SeparatingFlag; on failure it
    is the affine flat on which every weak separator of the remaining
    points is constant.
    """
    a_live = list(p.a.points)
    b_live = list(p.b.points)
    funcs: list[AffineFunctional] = []
    while True:
        if not a_live or not b_live:
            if a_live:
                owner = OWNER_A
            elif b_live:
                owner = OWNER_B
            else:
                owner = OWNER_EMPTY
            return Verdict(True, SeparatingFlag(p.dim, tuple(funcs), owner))

        live = sorted(a_live + b_live)
        hull = PointSet.of(live, p.dim)
        anchor, basis = affine_hull_basis(hull)
        r = len(basis)
        dmap = _tau_map(anchor, basis)
        tau = {
            q: tuple(
                sum(dmap[i][j] * (q[j] - anchor[j]) for j in range(p.dim))
                for i in range(r)
            )
            for q in live
        }
        a_sorted = sorted(a_live)
        b_sorted = sorted(b_live)
        cols = a_sorted + b_sorted
        col_of = {q: i for i, q in enumerate(cols)}
        n_a = len(a_sorted)
        rows = [
            [Fraction(tau[q][i]) for q in a_sorted]
            + [Fraction(-tau[q][i]) for q in b_sorted]
            for i in range(r)
        ]
        rows.append([Fraction(1)] * n_a + [Fraction(0)] * len(b_sorted))
        rows.append([Fraction(0)] * n_a + [Fraction(1)] * len(b_sorted))
        rhs = [Fraction(0)] * r + [Fraction(1), Fraction(1)]
        system = EqualityFeasibility(rows, rhs)

        if not system.feasible:
            # The hulls of the live sides are disjoint: the Farkas vector
            # yields a separator with a uniform gap, strict at every point.
            y = system.farkas_duals()
            p_vec = [-y[i] for i in range(r)]
            q_val = (y[r] - y[r + 1]) / 2
            g = _tau_to_ambient(p_vec, q_val, dmap, anchor)
            funcs.append(g)
            a_live, b_live = [], []
            continue

        w = system.feasible_point()
        p_acc = [Fraction(0)] * r
        q_acc = Fraction(0)
        in_e = set()
        for q in live:
            i = col_of[q]
            if w[i] > 0:
                in_e.add(q)
                continue
            val = sum(pc * t for pc, t in zip(p_acc, tau[q])) - q_acc
            if val != 0:
                continue  # already strictly separated by the accumulated sum
            costs = [Fraction(0)] * len(cols)
            costs[i] = Fraction(-1)
            res = system.minimize(costs)
            if -res.objective > 0:
                w = [(wv + xv) / 2 for wv, xv in zip(w, res.x)]
                in_e.add(q)
            else:
                y = system.duals(costs, res.basis)
                g_p = [-y[t] for t in range(r)]
                g_q = y[r]
                if __debug__:
                    for s_pt in a_sorted:
                        assert sum(a * b for a, b in zip(g_p, tau[s_pt])) - g_q >= 0
                    for s_pt in b_sorted:
                        assert sum(a * b for a, b in zip(g_p, tau[s_pt])) - g_q <= 0
                    assert sum(a * b for a, b in zip(g_p, tau[q])) - g_q != 0
                p_acc = [a + b for a, b in zip(p_acc, g_p)]
                q_acc += g_q

        if len(in_e) == len(live):
            return Verdict(False, BlockingFlat(anchor, tuple(basis)))
        funcs.append(_tau_to_ambient(p_acc, q_acc, dmap, anchor))
        a_live = [q for q in a_sorted if q in in_e]
        b_live = [q for q in b_sorted if q in in_e]
