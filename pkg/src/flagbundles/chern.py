"""Chern polynomial algebra with the alternating-sign convention.

A rank-r Chern polynomial stores the classes c_1, ..., c_r and expands to

    T^r - c_1 T^(r-1) + c_2 T^(r-2) - ... + (-1)^r c_r,

so a product of linear factors prod(T + l_i) has c_k = (-1)^k e_k(l_1..l_r).
Storing the signed classes rather than raw T-coefficients matches every
displayed formula this package audits and avoids silent sign drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .chowring import IncidenceFlag
from .polyring import (
    IntPolynomial,
    PolyLike,
    T,
    X,
    complete_homogeneous,
    poly,
)


@dataclass(frozen=True)
class LinearRoot:
    """A homogeneous linear form (or zero) used as a Chern root."""

    form: IntPolynomial

    def __post_init__(self):
        if not (self.form.is_zero() or self.form.is_homogeneous(1)):
            raise ValueError(f"root must be linear or zero, got {self.form}")
        if T in self.form.variables():
            raise ValueError("roots may not involve the Chern variable T")

    def __neg__(self) -> "LinearRoot":
        return LinearRoot(-self.form)

    def __str__(self) -> str:
        return str(self.form)


RootLike = LinearRoot | PolyLike


def _root(x: RootLike) -> LinearRoot:
    return x if isinstance(x, LinearRoot) else LinearRoot(poly(x))


@dataclass(frozen=True)
class ChernPolynomial:
    """c_1..c_r of a rank-r bundle; rank 0 is the multiplicative unit."""

    rank: int
    coeffs: tuple[IntPolynomial, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.coeffs) != self.rank:
            raise ValueError("need exactly rank Chern classes")
        for k, c in enumerate(self.coeffs, start=1):
            if not (c.is_zero() or c.is_homogeneous(k)):
                raise ValueError(f"c_{k} must be homogeneous of degree {k} or zero")
            if T in c.variables():
                raise ValueError("Chern classes may not involve T")

    @staticmethod
    def unit() -> "ChernPolynomial":
        return ChernPolynomial(0, ())

    def expand(self) -> IntPolynomial:
        """The T-polynomial T^r - c_1 T^(r-1) + ... + (-1)^r c_r."""
        t = IntPolynomial.variable(T)
        out = t ** self.rank
        sign = 1
        for k, c in enumerate(self.coeffs, start=1):
            sign = -sign
            out = out + sign * c * t ** (self.rank - k)
        return out

    @staticmethod
    def from_t_polynomial(p: IntPolynomial, rank: int) -> "ChernPolynomial":
        """Read the signed classes back off a monic T-polynomial."""
        slices = p.coefficients_in(T)
        if max(slices, default=0) > rank:
            raise ValueError(f"T-degree exceeds rank {rank}")
        if slices.get(rank) != IntPolynomial.const(1):
            raise ValueError("leading T-coefficient must be 1")
        zero = IntPolynomial.zero()
        coeffs = []
        for k in range(1, rank + 1):
            q = slices.get(rank - k, zero)
            coeffs.append(q if k % 2 == 0 else -q)
        return ChernPolynomial(rank, tuple(coeffs))

    def __str__(self) -> str:
        cs = ", ".join(str(c) for c in self.coeffs)
        return f"rank {self.rank}: c = ({cs}); {self.expand()}"


def chern_from_roots(roots: Sequence[RootLike]) -> ChernPolynomial:
    """The Chern polynomial expanding to prod(T + root_i)."""
    forms = [_root(r).form for r in roots]
    t = IntPolynomial.variable(T)
    product = IntPolynomial.const(1)
    for f in forms:
        product = product * (t + f)
    return ChernPolynomial.from_t_polynomial(product, len(forms))


def chern_product(p: ChernPolynomial, q: ChernPolynomial) -> ChernPolynomial:
    """Whitney product: ranks add, expansions multiply."""
    return ChernPolynomial.from_t_polynomial(
        p.expand() * q.expand(), p.rank + q.rank
    )


def chern_dual(p: ChernPolynomial) -> ChernPolynomial:
    """Root negation l -> -l, i.e. c_k -> (-1)^k c_k."""
    return ChernPolynomial(
        p.rank,
        tuple(c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs, start=1)),
    )


def chern_twist(p: ChernPolynomial, root: RootLike) -> ChernPolynomial:
    """Shift every root by the given linear form.

    Implemented by the substitution T -> T + l on the expansion, so it
    applies whether or not p splits into linear factors.
    """
    form = _root(root).form
    expanded = p.expand()
    mapping = {v: poly(v) for v in expanded.variables() | form.variables()}
    mapping[T] = IntPolynomial.variable(T) + form
    return ChernPolynomial.from_t_polynomial(expanded.substitute(mapping), p.rank)


class Tautological(Enum):
    """The two rank-1 tautological classes on the incidence flag."""

    SUB = "sub"
    QUOT = "quot"


def tautological_chern(which: Tautological, ctx: IncidenceFlag) -> ChernPolynomial:
    """T + X_d for the subbundle side, T - X_(d+1) for the quotient side."""
    if not isinstance(ctx, IncidenceFlag):
        raise ValueError("tautological classes live on the incidence flag")
    if which is Tautological.SUB:
        return chern_from_roots([X(ctx.d)])
    return chern_from_roots([-poly(X(ctx.d + 1))])


def hn_factorization(
    d: int, n: int, b: int
) -> tuple[ChernPolynomial, ChernPolynomial, bool]:
    """Candidate filtration factors for a uniform type (0,...,0,b), b < 0.

    Returns (prod_{i<d}(T + b X_i), T + b X_d, verified) where verified
    confirms by expansion that their product is prod_{i<=d}(T + b X_i).
    """
    if not 2 <= d <= n - d:
        raise ValueError("require 2 <= d <= n-d")
    if b >= 0:
        raise ValueError("b must be negative")
    head = chern_from_roots([b * X(i) for i in range(1, d)])
    tail = chern_from_roots([b * X(d)])
    full = chern_from_roots([b * X(i) for i in range(1, d + 1)])
    verified = chern_product(head, tail).expand() == full.expand()
    return head, tail, verified


def residual_factorization(
    d: int, n: int, beta: int
) -> tuple[IntPolynomial, IntPolynomial, bool]:
    """The free-ring identity behind the quotient-side classification.

    lhs = h_{n-d}(T, bX_1..bX_d) - b^{n-d} h_{n-d}(X_1..X_{d+1}) and
    rhs = (T - bX_{d+1}) * h_{n-d-1}(T, bX_1..bX_{d+1}) with b = beta;
    both are fully expanded and compared exactly (no quotient involved).
    """
    if not 2 <= d <= n - d:
        raise ValueError("require 2 <= d <= n-d")
    if beta >= 0:
        raise ValueError("beta must be negative")
    k = n - d
    scaled = [beta * X(i) for i in range(1, d + 1)]
    all_vars = [X(i) for i in range(1, d + 2)]
    lhs = complete_homogeneous(k, [poly(T)] + scaled) - beta ** k * complete_homogeneous(k, all_vars)
    rhs = (poly(T) - beta * X(d + 1)) * complete_homogeneous(
        k - 1, [poly(T)] + scaled + [beta * X(d + 1)]
    )
    return lhs, rhs, lhs == rhs
