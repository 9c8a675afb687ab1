"""Decision rules for uniform bundles on the Grassmannian of d-planes in k^n.

Given rank, splitting type and field characteristic, the classifier emits
every bundle class compatible with that data:

* rank below d forces a direct sum of line bundles, whatever the type;
* at rank d the only nonsplit possibilities are Frobenius pullbacks of the
  universal subbundle (normalized type (0,...,0,-p^m)), of its dual
  (normalized type (0,-p^m,...,-p^m)), and, when d = n-d, of the universal
  quotient bundle and its dual with the same two type patterns swapped.

A verdict is a set, not a single class: a splitting type alone cannot tell
a sum of line bundles from a pullback with the same restriction data, so
all compatible classes are reported together with explanatory notes.

The module also houses the arithmetic audits backing those rules: the
unit-product solve in Z[H]/(H^d) with its brute-force twin, and the
Whitney-formula residual audit run through the incidence-flag quotient.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .chern import RootLike, chern_from_roots
from .chowring import IncidenceFlag, is_zero_in_chow, solve_residual
from .flags import Case, FlagShape, SplittingType, line_components, normalize
from .lattice import IntegerCoset
from .polyring import IntPolynomial, T, complete_homogeneous


@dataclass(frozen=True)
class FieldChar:
    """Field characteristic: 0, or a prime p (validated, not trusted)."""

    p: int

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    @staticmethod
    def zero() -> "FieldChar":
        return FieldChar(0)

    @staticmethod
    def positive(p: int) -> "FieldChar":
        if p == 0:
            raise ValueError("positive characteristic required")
        return FieldChar(p)

    @property
    def is_zero(self) -> bool:
        return self.p == 0

    def frobenius_exponent(self, value: int) -> int | None:
        """m with value = p^m (or m = 0 for value = 1 in characteristic 0)."""
        if value < 1:
            return None
        if self.is_zero:
            return 0 if value == 1 else None
        m = 0
        while value % self.p == 0:
            value //= self.p
            m += 1
        return m if value == 1 else None

    def prime_powers_up_to(self, bound: int) -> list[int]:
        if self.is_zero:
            return [1] if bound >= 1 else []
        out, v = [], 1
        while v <= bound:
            out.append(v)
            v *= self.p
        return out

    def __str__(self) -> str:
        return str(self.p)


class BundleClass(Enum):
    DIRECT_SUM = "direct_sum_of_line_bundles"
    UNIVERSAL_SUB = "frobenius_universal_sub"
    UNIVERSAL_SUB_DUAL = "frobenius_universal_sub_dual"
    UNIVERSAL_QUOTIENT = "frobenius_quotient"
    UNIVERSAL_QUOTIENT_DUAL = "frobenius_quotient_dual"


_CLASS_TEXT = {
    BundleClass.UNIVERSAL_SUB: "universal subbundle",
    BundleClass.UNIVERSAL_SUB_DUAL: "dual universal subbundle",
    BundleClass.UNIVERSAL_QUOTIENT: "universal quotient bundle",
    BundleClass.UNIVERSAL_QUOTIENT_DUAL: "dual universal quotient bundle",
}

_DUAL_SWAP = {
    BundleClass.DIRECT_SUM: BundleClass.DIRECT_SUM,
    BundleClass.UNIVERSAL_SUB: BundleClass.UNIVERSAL_SUB_DUAL,
    BundleClass.UNIVERSAL_SUB_DUAL: BundleClass.UNIVERSAL_SUB,
    BundleClass.UNIVERSAL_QUOTIENT: BundleClass.UNIVERSAL_QUOTIENT_DUAL,
    BundleClass.UNIVERSAL_QUOTIENT_DUAL: BundleClass.UNIVERSAL_QUOTIENT,
}


@dataclass(frozen=True)
class Possibility:
    """One compatible bundle class; m is the Frobenius power (None for sums)."""

    kind: BundleClass
    frobenius_power: int | None = None

    @property
    def sort_key(self):
        return (self.kind.value, self.frobenius_power or 0)

    def dual(self) -> "Possibility":
        return Possibility(_DUAL_SWAP[self.kind], self.frobenius_power)

    def __str__(self) -> str:
        if self.kind is BundleClass.DIRECT_SUM:
            return "direct sum of line bundles"
        return (
            f"twisted Frobenius pullback (m={self.frobenius_power}) "
            f"of the {_CLASS_TEXT[self.kind]}"
        )


@dataclass(frozen=True)
class ClassificationVerdict:
    possibilities: frozenset[Possibility]
    notes: tuple[str, ...]

    def sorted_possibilities(self) -> list[Possibility]:
        return sorted(self.possibilities, key=lambda p: p.sort_key)

    def kinds(self) -> set[BundleClass]:
        return {p.kind for p in self.possibilities}

    def dual(self) -> "ClassificationVerdict":
        return ClassificationVerdict(
            frozenset(p.dual() for p in self.possibilities), self.notes
        )


def _validate_context(d: int, n: int) -> None:
    if not 2 <= d <= n - d:
        raise ValueError("require 2 <= d <= n-d")


def classify_uniform(
    d: int, n: int, r: int, t: SplittingType, ch: FieldChar
) -> ClassificationVerdict:
    """All bundle classes compatible with a uniform splitting type.

    The verdict depends only on the type up to twist and never excludes the
    direct-sum option, which realizes every descending type.
    """
    _validate_context(d, n)
    if r < 1:
        raise ValueError("rank must be positive")
    if t.rank != r:
        raise ValueError(f"type has rank {t.rank}, expected {r}")
    if r > d:
        raise ValueError("unsupported: the classification covers rank <= d only")

    direct = Possibility(BundleClass.DIRECT_SUM)
    if r < d:
        return ClassificationVerdict(
            frozenset({direct}),
            ("rank below d: every uniform bundle of this rank is a direct sum "
             "of line bundles",),
        )

    entries = normalize(t).entries
    if entries[-1] == 0:
        return ClassificationVerdict(
            frozenset({direct}),
            ("constant splitting type: only twists of the trivial bundle, "
             "i.e. direct sums of line bundles",),
        )

    b = entries[-1]
    sub_pattern = all(e == 0 for e in entries[:-1])          # (0, ..., 0, b)
    sub_dual_pattern = all(e == b for e in entries[1:])      # (0, b, ..., b)
    if not (sub_pattern or sub_dual_pattern):
        return ClassificationVerdict(
            frozenset({direct}),
            ("no nonsplit uniform bundle has this splitting type; only direct "
             "sums of line bundles realize it",),
        )

    possibilities = {direct}
    notes: list[str] = []
    m = ch.frobenius_exponent(-b)
    if m is None:
        if ch.is_zero:
            notes.append(
                f"{-b} != 1: in characteristic zero only -b = 1 admits a "
                "nonsplit uniform bundle"
            )
        else:
            notes.append(f"{-b} is not a power of {ch.p}")
    else:
        if sub_pattern:
            possibilities.add(Possibility(BundleClass.UNIVERSAL_SUB, m))
            if d == n - d:
                possibilities.add(Possibility(BundleClass.UNIVERSAL_QUOTIENT_DUAL, m))
        if sub_dual_pattern:
            possibilities.add(Possibility(BundleClass.UNIVERSAL_SUB_DUAL, m))
            if d == n - d:
                possibilities.add(Possibility(BundleClass.UNIVERSAL_QUOTIENT, m))
        if ch.is_zero:
            notes.append("-b = 1: nonsplit tautological classes are admissible")
        else:
            notes.append(
                f"-b = {-b} = {ch.p}^{m}: Frobenius pullback classes are admissible"
            )
        if d == n - d:
            notes.append("d = n-d: quotient-side classes are also admissible")
    return ClassificationVerdict(frozenset(possibilities), tuple(notes))


def admissible_nonsplit_types(
    d: int, n: int, ch: FieldChar, bound: int
) -> list[SplittingType]:
    """All normalized types (0,...,0,b), 1 <= -b <= bound, admitting a
    nonsplit uniform rank-d bundle: -b must be 1 in characteristic zero and
    a power of p in characteristic p."""
    _validate_context(d, n)
    if bound < 1:
        raise ValueError("bound must be positive")
    return [
        SplittingType((0,) * (d - 1) + (-v,))
        for v in ch.prime_powers_up_to(bound)
    ]


# ---------------------------------------------------------------------------
# Unit-product solve in Z[H]/(H^d): c(A) * c(B) = 1 with bounded degrees.
# ---------------------------------------------------------------------------


class UnitPair(NamedTuple):
    """Coefficient vectors (a_1..a_t | b_1..b_{r-t}) of a candidate pair."""

    sub_coeffs: tuple[int, ...]
    quot_coeffs: tuple[int, ...]

    def is_trivial(self) -> bool:
        return not any(self.sub_coeffs) and not any(self.quot_coeffs)


class NonUnique(NamedTuple):
    witness: UnitPair


def _truncated_product(a: Sequence[int], b: Sequence[int], d: int) -> list[int]:
    """Coefficients of (1 + sum a_i H^i)(1 + sum b_j H^j) mod H^d."""
    out = [0] * d
    fa = [1, *a]
    fb = [1, *b]
    for i, ai in enumerate(fa[:d]):
        if ai:
            for j, bj in enumerate(fb[: d - i]):
                out[i + j] += ai * bj
    return out


def _is_unit_pair(a: Sequence[int], b: Sequence[int], d: int) -> bool:
    prod = _truncated_product(a, b, d)
    return prod[0] == 1 and not any(prod[1:])


def _geometric_witness(d: int, t: int, s: int) -> UnitPair | None:
    """A pair (1 - H^u, 1 + H^u + ... + H^{Ku}) fitting the degree budgets."""
    for t_a, t_b, flip in ((t, s, False), (s, t, True)):
        for u in range(1, t_a + 1):
            k = t_b // u
            if k >= 1 and (k + 1) * u >= d:
                a = [0] * t_a
                a[u - 1] = -1
                b = [0] * t_b
                for j in range(1, k + 1):
                    b[j * u - 1] = 1
                pair = (tuple(b), tuple(a)) if flip else (tuple(a), tuple(b))
                return UnitPair(*pair)
    return None


def unit_pair_solve(d: int, r: int, t: int) -> UnitPair | NonUnique:
    """Solve c(A)c(B) = 1 in Z[H]/(H^d) with deg A <= t, deg B <= r - t.

    For r < d the truncation is vacuous, so the exact product must equal 1
    and degrees force A = B = 0: the all-zero pair is the unique solution.
    For r >= d a nontrivial witness is produced when one exists in the
    geometric-series family or within a small exhaustive search; absent
    both, the zero pair is returned (uniqueness then holds as far as the
    bounded search can see).
    """
    if d < 2:
        raise ValueError("truncation degree must be at least 2")
    if not 1 <= t < r:
        raise ValueError("require 1 <= t < r")
    s = r - t
    if r < d:
        return UnitPair((0,) * t, (0,) * s)
    witness = _geometric_witness(d, t, s)
    if witness is None:
        for pair in unit_pair_search(d, r, t, 3):
            if not pair.is_trivial():
                witness = pair
                break
    if witness is None:
        return UnitPair((0,) * t, (0,) * s)
    if not _is_unit_pair(witness.sub_coeffs, witness.quot_coeffs, d):
        raise AssertionError("constructed witness failed verification")
    return NonUnique(witness)


def _search_block(args) -> list[UnitPair]:
    d, t, s, bound, a_block = args
    values = range(-bound, bound + 1)
    out = []
    for a in a_block:
        for b in itertools.product(values, repeat=s):
            if _is_unit_pair(a, b, d):
                out.append(UnitPair(tuple(a), tuple(b)))
    return out


def unit_pair_search(
    d: int, r: int, t: int, coeff_bound: int, workers: int = 0
) -> list[UnitPair]:
    """Brute-force twin of unit_pair_solve: enumerate every coefficient
    tuple with entries in [-coeff_bound, coeff_bound] and keep the pairs
    whose truncated product is 1.

    The result is sorted, so parallel enumeration (workers > 1) returns
    exactly the sequential answer.
    """
    if d < 2:
        raise ValueError("truncation degree must be at least 2")
    if not 1 <= t < r:
        raise ValueError("require 1 <= t < r")
    if coeff_bound < 1:
        raise ValueError("coefficient bound must be positive")
    s = r - t
    values = range(-coeff_bound, coeff_bound + 1)
    a_tuples = list(itertools.product(values, repeat=t))
    if workers and workers > 1:
        chunk = max(1, len(a_tuples) // (4 * workers))
        blocks = [
            (d, t, s, coeff_bound, a_tuples[i : i + chunk])
            for i in range(0, len(a_tuples), chunk)
        ]
        found: list[UnitPair] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_search_block, blocks):
                found.extend(part)
    else:
        found = _search_block((d, t, s, coeff_bound, a_tuples))
    return sorted(found)


# ---------------------------------------------------------------------------
# Whitney-formula residual audit through the incidence-flag quotient ring.
# ---------------------------------------------------------------------------


def residual_admissible_set(
    ctx: IncidenceFlag, lhs: IntPolynomial, rhs: IntPolynomial
) -> IntegerCoset | None:
    """All integers a with lhs = rhs + a * h_{n-d}(X_1..X_{d+1}) in the
    quotient, both sides read as polynomials in T over the presentation.

    The residual generator is T-free and homogeneous of degree n-d, so the
    T^j slices of lhs - rhs decouple: every slice must lie in the ideal
    except that the T-free slice of degree n-d absorbs a*gen, where the
    augmented lattice solve pins a to a coset.  Returns None when no a
    works; an IntegerCoset with modulus 1 is all of Z.
    """
    k0 = ctx.n - ctx.d
    gen = complete_homogeneous(k0, ctx.variables())
    zero = IntPolynomial.zero()
    result: IntegerCoset | None = IntegerCoset.all_integers()
    seen_k0 = False
    for e, slice_poly in (lhs - rhs).coefficients_in(T).items():
        for k, comp in slice_poly.homogeneous_components().items():
            if e == 0 and k == k0:
                seen_k0 = True
                coset = solve_residual(ctx, comp, zero, gen)
            else:
                coset = (
                    IntegerCoset.all_integers()
                    if is_zero_in_chow(ctx, comp)
                    else None
                )
            if coset is None:
                return None
            result = result.intersect(coset)
            if result is None:
                return None
    if not seen_k0:
        # The T-free degree-(n-d) slot vanished: a is still constrained by
        # 0 - a*gen having to lie in the ideal.
        coset = solve_residual(ctx, zero, zero, gen)
        result = None if coset is None else result.intersect(coset)
    return result


def whitney_residual_audit(
    d: int,
    n: int,
    grouping: Sequence[tuple[int, int]],
    lhs_roots: Sequence[RootLike],
) -> IntegerCoset | None:
    """Admissible residual multiples a in the Whitney comparison

        prod(T + lhs_roots) = prod(blockwise factors) + a * h_{n-d}(X)

    computed in the quotient ring of the incidence flag.  The grouping
    (u_1, r_1), ... with u_1 > u_2 > ... partitions lhs_roots into
    consecutive blocks of sizes r_i; each block contributes the factor
    prod(T + root) over its roots.
    """
    _validate_context(d, n)
    if not grouping:
        raise ValueError("grouping must be nonempty")
    degrees = [u for u, _ in grouping]
    sizes = [r for _, r in grouping]
    if any(r < 1 for r in sizes):
        raise ValueError("block sizes must be positive")
    if any(a <= b for a, b in zip(degrees, degrees[1:])):
        raise ValueError("grouping degrees must be strictly decreasing")
    total = sum(sizes)
    if total > d:
        raise ValueError("total rank exceeds d")
    if len(lhs_roots) != total:
        raise ValueError(
            f"degree mismatch: {len(lhs_roots)} roots for total rank {total}"
        )
    ctx = IncidenceFlag(d, n)
    lhs = chern_from_roots(list(lhs_roots)).expand()
    rhs = IntPolynomial.const(1)
    offset = 0
    for size in sizes:
        block = list(lhs_roots[offset : offset + size])
        rhs = rhs * chern_from_roots(block).expand()
        offset += size
    return residual_admissible_set(ctx, lhs, rhs)


# ---------------------------------------------------------------------------
# Strongly-uniform audit on the complete flag.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrongAudit:
    passed: bool
    component: int | None = None  # first failing component, 1-based

    def __str__(self) -> str:
        return "Pass" if self.passed else f"Fail{{component={self.component}}}"


def strongly_uniform_audit(
    shape: FlagShape, types: Sequence[SplittingType]
) -> StrongAudit:
    """Necessary condition for a strongly uniform semistable bundle on the
    complete flag: every Case I component carries a constant type, every
    Case II component has gaps <= 1, and all components share one constant
    restriction degree."""
    if not shape.is_complete():
        raise ValueError("shape must be the complete flag F(1,...,n-1;n)")
    components = line_components(shape)
    if len(types) != len(components):
        raise ValueError(
            f"need one type per component: {len(components)} expected"
        )
    ranks = {t.rank for t in types}
    if len(ranks) != 1:
        raise ValueError("rank mismatch among component types")
    for comp, t in zip(components, types):
        if comp.case is Case.I:
            if not t.is_constant():
                return StrongAudit(False, comp.index)
        else:
            if any(a - b > 1 for a, b in zip(t.entries, t.entries[1:])):
                return StrongAudit(False, comp.index)
    shared = None
    for comp, t in zip(components, types):
        if not t.is_constant():
            return StrongAudit(False, comp.index)
        if shared is None:
            shared = t.entries[0]
        elif t.entries[0] != shared:
            return StrongAudit(False, comp.index)
    return StrongAudit(True)
