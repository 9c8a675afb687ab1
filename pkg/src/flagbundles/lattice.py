"""Exact integer row-lattice computations.

Lattices are kept as an echelon basis: pivot columns strictly increase row
by row and every pivot entry is positive, i.e. a Hermite-style normal form
maintained incrementally with extended-gcd row combinations.  Membership and
residual queries reduce a target vector against the echelon rows; because
everything is integer-exact this decides membership over Z, including the
torsion cases a rational solve would miss.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


class IntegerLattice:
    """Subgroup of Z^width spanned by inserted row vectors.

    After construction the lattice should be treated as read-only; queries
    never mutate the basis.
    """

    def __init__(self, width: int, rows: Iterable[Sequence[int]] = ()):
        self.width = width
        self.rows: list[list[int]] = []   # echelon order
        self.pivots: list[int] = []       # pivot column of each row
        for r in rows:
            self.insert(r)

    def insert(self, vec: Sequence[int]) -> None:
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        v = list(vec)
        for i in range(len(self.rows)):
            j = self._leading(v)
            if j is None:
                return
            p = self.pivots[i]
            if p < j:
                continue
            if p > j:
                self._place(i, v, j)
                return
            row = self.rows[i]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for k in range(j, self.width):
                    v[k] -= q * row[k]
            else:
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                for k in range(j, self.width):
                    rk, vk = row[k], v[k]
                    row[k] = x * rk + y * vk
                    v[k] = -bg * rk + ag * vk
        j = self._leading(v)
        if j is not None:
            self._place(len(self.rows), v, j)

    def _place(self, i: int, v: list[int], j: int) -> None:
        if v[j] < 0:
            v = [-a for a in v]
        self.rows.insert(i, v)
        self.pivots.insert(i, j)

    @staticmethod
    def _leading(v: list[int]) -> int | None:
        for j, a in enumerate(v):
            if a:
                return j
        return None

    def reduce(self, vec: Sequence[int]) -> list[int]:
        """Canonical residue of vec modulo the lattice (floor-division at pivots)."""
        v = list(vec)
        for row, j in zip(self.rows, self.pivots):
            q = v[j] // row[j]
            if q:
                for k in range(j, self.width):
                    v[k] -= q * row[k]
        return v

    def contains(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        for row, j in zip(self.rows, self.pivots):
            if v[j] == 0:
                continue
            if v[j] % row[j]:
                return False
            q = v[j] // row[j]
            for k in range(j, self.width):
                v[k] -= q * row[k]
        return not any(v)


@dataclass(frozen=True)
class IntegerCoset:
    """The set {base + k*modulus : k in Z}; modulus 0 is the singleton {base}.

    modulus 1 with base 0 is all of Z.  The empty set is represented by None
    wherever an IntegerCoset is expected.
    """

    base: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus and not (0 <= self.base < self.modulus):
            raise ValueError("base must be reduced modulo the modulus")

    @staticmethod
    def singleton(a: int) -> "IntegerCoset":
        return IntegerCoset(a, 0)

    @staticmethod
    def all_integers() -> "IntegerCoset":
        return IntegerCoset(0, 1)

    @staticmethod
    def of(base: int, modulus: int) -> "IntegerCoset":
        return IntegerCoset(base % modulus if modulus else base, modulus)

    def contains(self, a: int) -> bool:
        if self.modulus == 0:
            return a == self.base
        return (a - self.base) % self.modulus == 0

    def intersect(self, other: "IntegerCoset | None") -> "IntegerCoset | None":
        if other is None:
            return None
        if self.modulus == 0:
            return self if other.contains(self.base) else None
        if other.modulus == 0:
            return other if self.contains(other.base) else None
        g = gcd(self.modulus, other.modulus)
        diff = other.base - self.base
        if diff % g:
            return None
        # CRT merge of base mod modulus with other.base mod other.modulus.
        _, x, _ = xgcd(self.modulus // g, other.modulus // g)
        lcm = self.modulus // g * other.modulus
        base = self.base + (diff // g) * x % (other.modulus // g) * self.modulus
        return IntegerCoset.of(base, lcm)

    def sample(self, count: int) -> list[int]:
        """A few members, for reports: base, base +/- modulus, ..."""
        if self.modulus == 0:
            return [self.base]
        out = [self.base]
        step = 1
        while len(out) < count:
            out.append(self.base + step * self.modulus)
            if len(out) < count:
                out.append(self.base - step * self.modulus)
            step += 1
        return out[:count]

    def __str__(self) -> str:
        if self.modulus == 0:
            return f"{{{self.base}}}"
        if self.modulus == 1:
            return "Z"
        return f"{self.base} + {self.modulus}Z"


def solve_with_generator(
    rows: Sequence[Sequence[int]], gen: Sequence[int], target: Sequence[int]
) -> IntegerCoset | None:
    """All integers a with target - a*gen in the row span of rows.

    Works in the augmented lattice spanned by (row, 0) and (gen, 1): the
    unknown a only enters the final coordinate, so reducing the augmented
    target (target, a) pins a to a coset of Z (or to nothing).
    """
    width = len(gen)
    if not any(gen):
        raise ValueError("generator must be nonzero")
    lat = IntegerLattice(width + 1)
    for r in rows:
        lat.insert(list(r) + [0])
    lat.insert(list(gen) + [1])

    v = list(target)
    shift = 0  # accumulated known part of the final coordinate
    tail_modulus = None
    for row, j in zip(lat.rows, lat.pivots):
        if j == width:
            tail_modulus = row[width]
            break
        if v[j] == 0:
            continue
        if v[j] % row[j]:
            return None
        q = v[j] // row[j]
        for k in range(width):
            v[k] -= q * row[k]
        shift += q * row[width]
    if any(v):
        return None
    # Remaining constraint: a - shift must lie in tail_modulus * Z (or be 0).
    if tail_modulus is None:
        return IntegerCoset.singleton(shift)
    return IntegerCoset.of(shift, tail_modulus)
