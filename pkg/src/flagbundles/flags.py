"""Flag-variety combinatorics: shapes, line components, splitting types.

A flag shape F(d_1,...,d_s; n) carries the boundary conventions d_0 = 0 and
d_{s+1} = n.  The i-th component of the manifold of lines replaces d_i by
the pair (d_i - 1, d_i + 1); entries equal to 0 or n are dropped and a
repeated entry is kept only once.  A component is Case I when both
neighbours are already adjacent (d_i - 1 = d_{i-1} and d_i + 1 = d_{i+1},
conventions included), so the component is reached by simply forgetting
d_i; otherwise it is Case II and carries a relative cotangent space of
rank d_{i+1} - d_{i-1} - 2 along each line.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


@dataclass(frozen=True)
class FlagShape:
    """Strictly increasing dimension vector d_1 < ... < d_s inside [1, n-1]."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be positive")
        for a, b in zip(self.dims, self.dims[1:]):
            if a >= b:
                raise ValueError("dimension vector must be strictly increasing")
        if self.dims and not (1 <= self.dims[0] and self.dims[-1] <= self.n - 1):
            raise ValueError("dimensions must lie in [1, n-1]")

    @staticmethod
    def complete(n: int) -> "FlagShape":
        return FlagShape(n, tuple(range(1, n)))

    @staticmethod
    def grassmannian(d: int, n: int) -> "FlagShape":
        return FlagShape(n, (d,))

    def is_complete(self) -> bool:
        return self.dims == tuple(range(1, self.n))

    def __str__(self) -> str:
        return f"F({','.join(map(str, self.dims))};{self.n})"


class Case(Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class LineComponent:
    """One irreducible component of the manifold of lines in a flag variety."""

    index: int
    shape: FlagShape
    case: Case
    cotangent_rank: int | None  # Case II only

    def __post_init__(self):
        if self.case is Case.II and (self.cotangent_rank or 0) < 1:
            raise ValueError("Case II cotangent rank must be >= 1")
        if self.case is Case.I and self.cotangent_rank is not None:
            raise ValueError("Case I carries no cotangent rank")


def line_components(shape: FlagShape) -> list[LineComponent]:
    """All line components of the shape, with case tags and merged shapes."""
    dims, n, s = shape.dims, shape.n, len(shape.dims)
    out = []
    for i in range(1, s + 1):
        d_i = dims[i - 1]
        prev = dims[i - 2] if i >= 2 else 0
        nxt = dims[i] if i <= s - 1 else n
        raw = list(dims[: i - 1]) + [d_i - 1, d_i + 1] + list(dims[i:])
        merged: list[int] = []
        for e in raw:
            if 0 < e < n and (not merged or merged[-1] != e):
                merged.append(e)
        comp = FlagShape(n, tuple(merged))
        if d_i - 1 == prev and d_i + 1 == nxt:
            out.append(LineComponent(i, comp, Case.I, None))
        else:
            out.append(LineComponent(i, comp, Case.II, nxt - prev - 2))
    return out


@dataclass(frozen=True)
class SplittingType:
    """Restriction degrees on a line, stored descending a_1 >= ... >= a_r."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("splitting type must have positive rank")
        for a, b in zip(self.entries, self.entries[1:]):
            if a < b:
                raise ValueError("entries must be descending")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def shifted(self, c: int) -> "SplittingType":
        return SplittingType(tuple(a + c for a in self.entries))

    def is_constant(self) -> bool:
        return self.entries[0] == self.entries[-1]

    def __str__(self) -> str:
        return f"({','.join(map(str, self.entries))})"


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def lex_compare(a: SplittingType, b: SplittingType) -> Ordering:
    """Lexicographic order: a < b when the first nonzero b_i - a_i is positive."""
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    for x, y in zip(a.entries, b.entries):
        if x != y:
            return Ordering.LT if y > x else Ordering.GT
    return Ordering.EQ


def normalize(t: SplittingType) -> SplittingType:
    """Shift so the largest entry becomes 0 (canonical up to line-bundle twist)."""
    return t.shifted(-t.entries[0])


def dual_type(t: SplittingType) -> SplittingType:
    """Negate all entries and re-sort descending."""
    return SplittingType(tuple(-a for a in reversed(t.entries)))


def slope(t: SplittingType) -> Fraction:
    """Average entry, as an exact rational."""
    return Fraction(sum(t.entries), t.rank)


@dataclass(frozen=True)
class GapAudit:
    """Necessary-condition check for semistability on one component."""

    passed: bool
    witness: int | None = None  # first violating position, 1-based

    def __str__(self) -> str:
        return "Pass" if self.passed else f"Fail{{j={self.witness}}}"


def gap_audit(t: SplittingType, case: Case) -> GapAudit:
    """Case II: adjacent gaps must be <= 1.  Case I: entries must be constant.

    A failure certifies the type is incompatible with semistability on that
    component; passing is necessary, not sufficient.
    """
    for j, (a, b) in enumerate(zip(t.entries, t.entries[1:]), start=1):
        gap = a - b
        if case is Case.I and gap != 0:
            return GapAudit(False, j)
        if case is Case.II and gap > 1:
            return GapAudit(False, j)
    return GapAudit(True)
