"""Exact-arithmetic toolkit for uniform vector bundles on flag varieties.

Modules:

* ``polyring``   -- multivariate integer polynomials and symmetric sums
* ``lattice``    -- exact integer lattice membership and coset solves
* ``chowring``   -- presented quotient rings with graded ideal membership
* ``chern``      -- Chern polynomial algebra and factorization checks
* ``flags``      -- flag shapes, line components, splitting types
* ``classifier`` -- the splitting-type decision rules and audits
* ``cli``        -- command-line front end
"""

from .chern import (
    ChernPolynomial,
    LinearRoot,
    Tautological,
    chern_dual,
    chern_from_roots,
    chern_product,
    chern_twist,
    hn_factorization,
    residual_factorization,
    tautological_chern,
)
from .chowring import (
    ChowContext,
    ChowElement,
    IncidenceFlag,
    ProjSpace,
    chow_equal,
    ideal_degree_basis,
    ideal_generators,
    is_zero_in_chow,
    membership_report,
    solve_residual,
)
from .classifier import (
    BundleClass,
    ClassificationVerdict,
    FieldChar,
    NonUnique,
    Possibility,
    StrongAudit,
    UnitPair,
    admissible_nonsplit_types,
    classify_uniform,
    residual_admissible_set,
    strongly_uniform_audit,
    unit_pair_search,
    unit_pair_solve,
    whitney_residual_audit,
)
from .flags import (
    Case,
    FlagShape,
    GapAudit,
    LineComponent,
    Ordering,
    SplittingType,
    dual_type,
    gap_audit,
    lex_compare,
    line_components,
    normalize,
    slope,
)
from .lattice import IntegerCoset, IntegerLattice
from .polyring import (
    H,
    IntPolynomial,
    Monomial,
    T,
    Var,
    X,
    complete_homogeneous,
    elementary_symmetric,
    is_symmetric_in,
    poly,
    substitute,
    verify_h_shift_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
