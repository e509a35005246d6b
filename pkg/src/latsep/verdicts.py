"""Structured results of condition checks.

Every decision operation returns a ``Verdict`` whose witness either
certifies the positive answer (e.g. a separating flag) or refutes it
(e.g. a pair of equal-sum multisets).  Witnesses are plain frozen
dataclasses so reports are hashable and printable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ConvexityWitness:
    """A subset whose hull grabs a lattice point outside the set."""

    subset: tuple[IntPoint, ...]
    missing: IntPoint


@dataclass(frozen=True)
class HoleWitness:
    """A lattice point of the convex hull missing from the set."""

    missing: IntPoint


@dataclass(frozen=True)
class CellWitness:
    """A unit cell and a vertex of hull-within-cell that is not covered
    by the set's points on that cell's corners."""

    cell: IntPoint
    vertex: tuple[Fraction, ...]


@dataclass(frozen=True)
class ParallelogramWitness:
    """Equal coordinate sums of two multisets of the given order."""

    order: int
    left: tuple[IntPoint, ...]
    right: tuple[IntPoint, ...]
    total: IntPoint


@dataclass(frozen=True)
class RayViolation:
    """A line on which one side's points are not a prefix or suffix."""

    base: IntPoint
    direction: tuple[int, ...]
    trace: tuple[IntPoint, ...]
    sides: tuple[str, ...]


@dataclass(frozen=True)
class BlockingFlat:
    """Affine flat on which every weak separator of the live points is
    constant; certifies that no separating flag exists."""

    anchor: IntPoint
    basis: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HoleReport:
    """A hole and the smallest k whose hull closure reaches it."""

    hole: IntPoint
    first_k: int
