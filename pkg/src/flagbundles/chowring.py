"""Presented quotient rings with exact graded ideal membership.

Two presentations are supported:

* ``ProjSpace(m)`` -- Z[H]/(H^(m+1)), the intersection ring of projective
  m-space.
* ``IncidenceFlag(d, n)`` -- Z[X1..X(d+1)] symmetric in X1..X(d-1), modulo
  the ideal generated by the complete homogeneous polynomials of degrees
  n-d, ..., n in all d+1 variables.  This is the intersection ring of the
  incidence variety of nested (d-1, d, d+1)-dimensional subspaces of k^n.

The ideal is homogeneous, so membership is decided degree by degree: the
degree-k slice of the ideal is spanned over Z by monomial multiples of the
generators, and a representative lies in the ideal iff its coefficient
vector lies in the corresponding integer lattice.  No Groebner machinery,
no choice of monomial basis for the quotient; correctness over elegance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .lattice import IntegerCoset, IntegerLattice, solve_with_generator
from .polyring import (
    H,
    IntPolynomial,
    Monomial,
    Var,
    X,
    complete_homogeneous,
    is_symmetric_in,
)


@dataclass(frozen=True)
class ProjSpace:
    """Z[H]/(H^(m+1))."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("projective space dimension must be positive")

    def variables(self) -> tuple[Var, ...]:
        return (H,)

    def ideal_generators(self) -> list[IntPolynomial]:
        return [IntPolynomial.variable(H) ** (self.m + 1)]

    def degree_cap(self) -> int | None:
        return None

    def __str__(self) -> str:
        return f"P({self.m})"


@dataclass(frozen=True)
class IncidenceFlag:
    """The nested-subspaces presentation in X1..X(d+1) for 2 <= d <= n-d."""

    d: int
    n: int

    def __post_init__(self):
        if not 2 <= self.d <= self.n - self.d:
            raise ValueError("require 2 <= d <= n-d")

    def variables(self) -> tuple[Var, ...]:
        return tuple(X(i) for i in range(1, self.d + 2))

    def ideal_generators(self) -> list[IntPolynomial]:
        vs = self.variables()
        return [
            complete_homogeneous(i, vs)
            for i in range(self.n - self.d, self.n + 1)
        ]

    def degree_cap(self) -> int | None:
        # All the classification computations live in degree <= n.
        return self.n + self.d

    def __str__(self) -> str:
        return f"Fbar({self.d},{self.n})"


ChowContext = ProjSpace | IncidenceFlag


def ideal_generators(ctx: ChowContext) -> list[IntPolynomial]:
    """The homogeneous ideal generators, in increasing degree."""
    return ctx.ideal_generators()


def monomials_of_degree(variables: tuple[Var, ...], k: int) -> list[Monomial]:
    return [
        Monomial.of({v: combo.count(v) for v in set(combo)})
        for combo in combinations_with_replacement(variables, k)
    ]


def ideal_degree_basis(ctx: ChowContext, k: int) -> list[IntPolynomial]:
    """Spanning set of the degree-k slice of the ideal: all m*g with
    g a generator and m a monomial of degree k - deg(g)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    out: list[IntPolynomial] = []
    for g in ctx.ideal_generators():
        deg = g.total_degree()
        if deg > k:
            continue
        for m in monomials_of_degree(ctx.variables(), k - deg):
            out.append(g * IntPolynomial({m: 1}))
    return out


@lru_cache(maxsize=None)
def _degree_data(ctx: ChowContext, k: int):
    """Monomial order and echelonized ideal lattice for one degree."""
    monomials = monomials_of_degree(ctx.variables(), k)
    index = {m: i for i, m in enumerate(monomials)}
    lat = IntegerLattice(len(monomials))
    for b in ideal_degree_basis(ctx, k):
        lat.insert(_vectorize(b, index))
    return monomials, index, lat


def _vectorize(p: IntPolynomial, index: dict[Monomial, int]) -> list[int]:
    v = [0] * len(index)
    for m, c in p.terms.items():
        v[index[m]] = c
    return v


def _check_variables(ctx: ChowContext, p: IntPolynomial, what: str = "polynomial"):
    foreign = p.variables() - set(ctx.variables())
    if foreign:
        names = ", ".join(str(v) for v in sorted(foreign, key=lambda v: v.sort_key))
        raise ValueError(f"{what} uses variables outside {ctx}: {names}")


def _effective_cap(ctx: ChowContext, max_degree: int | None) -> int | None:
    return ctx.degree_cap() if max_degree is None else max_degree


def _check_degree(ctx: ChowContext, k: int, cap: int | None):
    if cap is not None and k > cap:
        raise ValueError(
            f"degree {k} exceeds the membership cap {cap} for {ctx}; "
            "pass max_degree to raise it"
        )


def is_zero_in_chow(
    ctx: ChowContext, p: IntPolynomial, max_degree: int | None = None
) -> bool:
    """Decide whether the representative p maps to 0 in the quotient ring."""
    _check_variables(ctx, p)
    cap = _effective_cap(ctx, max_degree)
    for k, comp in p.homogeneous_components().items():
        _check_degree(ctx, k, cap)
        _, index, lat = _degree_data(ctx, k)
        if not lat.contains(_vectorize(comp, index)):
            return False
    return True


def membership_report(
    ctx: ChowContext, p: IntPolynomial, max_degree: int | None = None
) -> list[dict]:
    """Per-degree diagnostics for failed membership: the residue vector of
    each non-member homogeneous component over that degree's monomials."""
    _check_variables(ctx, p)
    cap = _effective_cap(ctx, max_degree)
    failures = []
    for k, comp in p.homogeneous_components().items():
        _check_degree(ctx, k, cap)
        monomials, index, lat = _degree_data(ctx, k)
        vec = _vectorize(comp, index)
        if not lat.contains(vec):
            failures.append({
                "degree": k,
                "monomials": [str(m) for m in monomials],
                "residue": lat.reduce(vec),
            })
    return failures


def chow_equal(
    ctx: ChowContext,
    p: IntPolynomial,
    q: IntPolynomial,
    max_degree: int | None = None,
) -> bool:
    return is_zero_in_chow(ctx, p - q, max_degree=max_degree)


def solve_residual(
    ctx: ChowContext,
    lhs: IntPolynomial,
    rhs: IntPolynomial,
    gen: IntPolynomial,
    max_degree: int | None = None,
) -> IntegerCoset | None:
    """The complete set {a in Z : lhs - rhs - a*gen = 0 in the quotient}.

    gen must be homogeneous and nonzero.  At gen's degree the lattice solve
    is augmented with one extra column tracking the multiple of gen, which
    pins a to a coset base + modulus*Z (modulus 0 meaning a singleton); at
    every other degree the difference must itself lie in the ideal, else no
    a works.  Returns None for the empty set.
    """
    for q, what in ((lhs, "lhs"), (rhs, "rhs"), (gen, "generator")):
        _check_variables(ctx, q, what)
    if gen.is_zero() or not gen.is_homogeneous():
        raise ValueError("generator must be homogeneous and nonzero")
    cap = _effective_cap(ctx, max_degree)
    k0 = gen.total_degree()
    _check_degree(ctx, k0, cap)
    diff = lhs - rhs

    _, index0, lat0 = _degree_data(ctx, k0)
    result = solve_with_generator(
        lat0.rows, _vectorize(gen, index0), _vectorize(diff.homogeneous_component(k0), index0)
    )
    if result is None:
        return None
    for k, comp in diff.homogeneous_components().items():
        if k == k0:
            continue
        _check_degree(ctx, k, cap)
        _, index, lat = _degree_data(ctx, k)
        if not lat.contains(_vectorize(comp, index)):
            return None
    return result


@dataclass(frozen=True)
class ChowElement:
    """A quotient-ring element carried by a chosen representative.

    On the incidence-flag presentation the representative must be symmetric
    in X1..X(d-1); raw is_zero_in_chow inputs are exempt from this so that
    internal computations may pass through non-symmetric intermediates.
    """

    context: ChowContext
    value: IntPolynomial

    def __post_init__(self):
        _check_variables(self.context, self.value, "representative")
        if isinstance(self.context, IncidenceFlag) and self.context.d >= 3:
            head = [X(i) for i in range(1, self.context.d)]
            if not is_symmetric_in(self.value, head):
                raise ValueError(
                    f"representative must be symmetric in X1..X{self.context.d - 1}"
                )

    def _lift(self, other) -> IntPolynomial:
        if isinstance(other, ChowElement):
            if other.context != self.context:
                raise ValueError("mixed ring contexts")
            return other.value
        return other

    def __add__(self, other) -> "ChowElement":
        return ChowElement(self.context, self.value + self._lift(other))

    def __sub__(self, other) -> "ChowElement":
        return ChowElement(self.context, self.value - self._lift(other))

    def __mul__(self, other) -> "ChowElement":
        return ChowElement(self.context, self.value * self._lift(other))

    def is_zero(self) -> bool:
        return is_zero_in_chow(self.context, self.value)

    def equals(self, other: "ChowElement") -> bool:
        return is_zero_in_chow(self.context, self.value - self._lift(other))

    def __str__(self) -> str:
        return f"[{self.value}] in A({self.context})"
