"""Exact multivariate polynomial arithmetic over arbitrary-precision integers.

A polynomial is a finite map from monomials to nonzero integer coefficients;
the zero polynomial is the empty map.  Variables come in three kinds: the
indexed family ``X1, X2, ...``, the Chern variable ``T`` and the hyperplane
class ``H``.  The canonical variable order is ``X1 < X2 < ... < T < H``,
and the canonical term order for printing is graded lexicographic on
(total degree, exponent vector), highest first.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence, Union

_KIND_ORDER = {"X": 0, "T": 1, "H": 2}


@dataclass(frozen=True)
class Var:
    """A polynomial variable: X(i) with i >= 1, or the distinguished T or H."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind == "X":
            if self.index < 1:
                raise ValueError("X-indices must be >= 1")
        elif self.index != 0:
            raise ValueError(f"{self.kind} takes no index")

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __lt__(self, other: "Var") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"X{self.index}" if self.kind == "X" else self.kind

    def __repr__(self) -> str:
        return f"Var({self})"

    # Arithmetic lifts straight into IntPolynomial so that expressions such
    # as (X(1) + X(2)) * T read naturally in client code and tests.
    def __add__(self, other):
        return poly(self) + other

    def __radd__(self, other):
        return poly(other) + poly(self)

    def __sub__(self, other):
        return poly(self) - other

    def __rsub__(self, other):
        return poly(other) - poly(self)

    def __mul__(self, other):
        return poly(self) * other

    def __rmul__(self, other):
        return poly(other) * poly(self)

    def __neg__(self):
        return -poly(self)

    def __pow__(self, n):
        return poly(self) ** n


def X(index: int) -> Var:
    return Var("X", index)


T = Var("T")
H = Var("H")


@dataclass(frozen=True)
class Monomial:
    """A product of variables with positive exponents, kept sorted by variable."""

    pairs: tuple[tuple[Var, int], ...]

    @staticmethod
    def of(exponents: Mapping[Var, int]) -> "Monomial":
        items = tuple(sorted(
            ((v, e) for v, e in exponents.items() if e != 0),
            key=lambda p: p[0].sort_key,
        ))
        for _, e in items:
            if e < 0:
                raise ValueError("monomial exponents must be positive")
        return Monomial(items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.pairs)

    def exponent(self, v: Var) -> int:
        for w, e in self.pairs:
            if w == v:
                return e
        return 0

    def variables(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.pairs)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged: dict[Var, int] = dict(self.pairs)
        for v, e in other.pairs:
            merged[v] = merged.get(v, 0) + e
        return Monomial.of(merged)

    def exponent_vector(self, order: Sequence[Var]) -> tuple[int, ...]:
        return tuple(self.exponent(v) for v in order)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.pairs)


_ONE = Monomial(())

PolyLike = Union["IntPolynomial", Var, int]


class IntPolynomial:
    """Sparse polynomial with exact integer coefficients.

    Internally a dict mapping Monomial to a nonzero int; never mutated after
    construction.  Supports +, -, *, ** with int and Var operands coerced.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int]):
        self._terms = {m: c for m, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial({})

    @staticmethod
    def const(c: int) -> "IntPolynomial":
        return IntPolynomial({_ONE: c})

    @staticmethod
    def variable(v: Var) -> "IntPolynomial":
        return IntPolynomial({Monomial(((v, 1),)): 1})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self._terms:
            out.update(m.variables())
        return out

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def constant_term(self) -> int:
        return self._terms.get(_ONE, 0)

    def homogeneous_component(self, k: int) -> "IntPolynomial":
        """The sum of terms of total degree exactly k."""
        return IntPolynomial({m: c for m, c in self._terms.items() if m.degree == k})

    def homogeneous_components(self) -> dict[int, "IntPolynomial"]:
        by_degree: dict[int, dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            by_degree.setdefault(m.degree, {})[m] = c
        return {k: IntPolynomial(t) for k, t in sorted(by_degree.items())}

    def coefficients_in(self, v: Var) -> dict[int, "IntPolynomial"]:
        """Slice by the exponent of one variable: p = sum_e v^e * slices[e]."""
        slices: dict[int, dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            e = m.exponent(v)
            rest = Monomial.of({w: x for w, x in m.pairs if w != v})
            slices.setdefault(e, {})[rest] = c
        return {e: IntPolynomial(t) for e, t in sorted(slices.items())}

    def is_homogeneous(self, k: int | None = None) -> bool:
        """True if all terms share one total degree (k, when given).

        The zero polynomial counts as homogeneous of every degree.
        """
        degrees = {m.degree for m in self._terms}
        if not degrees:
            return True
        if k is None:
            return len(degrees) == 1
        return degrees == {k}

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: PolyLike) -> "IntPolynomial":
        other = poly(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> "IntPolynomial":
        other = poly(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) - c
        return IntPolynomial(out)

    def __rsub__(self, other: PolyLike) -> "IntPolynomial":
        return poly(other) - self

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: PolyLike) -> "IntPolynomial":
        other = poly(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitution and symmetry ------------------------------------

    def substitute(self, mapping: Mapping[Var, PolyLike]) -> "IntPolynomial":
        """Exact composition; every variable of self must be mapped."""
        images = {v: poly(p) for v, p in mapping.items()}
        out = IntPolynomial.zero()
        for m, c in self._terms.items():
            term = IntPolynomial.const(c)
            for v, e in m.pairs:
                if v not in images:
                    raise ValueError(f"incomplete substitution: {v} not mapped")
                term = term * images[v] ** e
            out = out + term
        return out

    # -- equality and printing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Var)):
            other = poly(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order (the canonical print order)."""
        order = sorted(self.variables(), key=lambda v: v.sort_key)
        return sorted(
            self._terms.items(),
            key=lambda mc: (mc[0].degree, mc[0].exponent_vector(order)),
            reverse=True,
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m, c in self.sorted_terms():
            mag = abs(c)
            if m is _ONE or not m.pairs:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


def poly(x: PolyLike) -> IntPolynomial:
    """Coerce an int or Var to an IntPolynomial."""
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, Var):
        return IntPolynomial.variable(x)
    if isinstance(x, int):
        return IntPolynomial.const(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def complete_homogeneous(k: int, args: Sequence[PolyLike]) -> IntPolynomial:
    """Sum of all degree-k products of the arguments with repetition.

    For distinct variables this is the complete homogeneous symmetric
    polynomial: every monomial of total degree k, coefficient 1.  k = 0
    gives the constant 1; no arguments with k > 0 gives 0.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return IntPolynomial.const(1)
    values = [poly(a) for a in args]
    if not values:
        return IntPolynomial.zero()
    out = IntPolynomial.zero()
    for combo in combinations_with_replacement(values, k):
        term = IntPolynomial.const(1)
        for f in combo:
            term = term * f
        out = out + term
    return out


def elementary_symmetric(k: int, args: Sequence[PolyLike]) -> IntPolynomial:
    """Sum of all squarefree degree-k products; 0 when k exceeds the count."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if k == 0:
        return IntPolynomial.const(1)
    values = [poly(a) for a in args]
    if k > len(values):
        return IntPolynomial.zero()
    out = IntPolynomial.zero()
    for combo in combinations(values, k):
        term = IntPolynomial.const(1)
        for f in combo:
            term = term * f
        out = out + term
    return out


def substitute(p: IntPolynomial, mapping: Mapping[Var, PolyLike]) -> IntPolynomial:
    return p.substitute(mapping)


def is_symmetric_in(p: IntPolynomial, subset: Iterable[Var]) -> bool:
    """True iff p is invariant under permutations of the given variables.

    Checked by swapping adjacent members of the (sorted) subset; adjacent
    transpositions generate the full symmetric group.
    """
    vs = sorted(set(subset), key=lambda v: v.sort_key)
    identity = {v: v for v in p.variables() | set(vs)}
    for a, b in zip(vs, vs[1:]):
        swap = dict(identity)
        swap[a], swap[b] = b, a
        if p.substitute(swap) != p:
            return False
    return True


def verify_h_shift_identity(S: Sequence[Var], u: Var, v: Var, k: int) -> bool:
    """Check h_k(S+{u}) - h_k(S+{v}) == (u - v) * h_{k-1}(S+{u,v}) by expansion.

    This is the free-ring identity behind the factorization of a complete
    homogeneous Chern polynomial into a linear factor and a lower h.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if u == v or u in S or v in S:
        raise ValueError("u and v must be distinct and not in S")
    base = list(S)
    lhs = complete_homogeneous(k, base + [u]) - complete_homogeneous(k, base + [v])
    rhs = (poly(u) - poly(v)) * complete_homogeneous(k - 1, base + [u, v])
    return lhs == rhs
