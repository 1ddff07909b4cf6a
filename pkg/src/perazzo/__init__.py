"""Exact invariants of hypersurfaces via Macaulay inverse systems.

The package computes, over the rationals with no floating point anywhere:
h-vectors of Artinian Gorenstein algebras S/Ann(f), annihilator bases,
higher Hessians and weak/strong Lefschetz verdicts, and the full Perazzo
3-fold toolbox (block-rank h-vector bounds, extremal h-vectors, Waring and
border rank of binary forms, classification of the minimal h-vector locus).
"""

from .bareiss import BACKEND
from .binary import (
    binary_divides,
    binary_gcd,
    binary_partials,
    is_squarefree,
    linear_factors,
    normalize_binary,
    rational_roots,
)
from .errors import GuardError, InternalError, ParseError, PerazzoError
from .forms import (
    BlockMatrices,
    HRankBounds,
    Normalization,
    PerazzoCase,
    PerazzoClass,
    PerazzoForm,
    WaringResult,
    algebraic_relation,
    blocks,
    classify,
    classify_polynomial,
    h_via_ranks,
    hankel_block,
    intersection_divisor,
    is_cone,
    max_hvector,
    min_hvector,
    multiplicity_pattern,
    osculating_family,
    random_perazzo_form,
    secant_membership,
    tangent_point_family,
    three_points_family,
    waring_rank,
)
from .inverse_systems import (
    CatalecticantMap,
    HVector,
    ann_basis,
    binomial_expansion,
    catalecticant,
    green_bound,
    h_vector,
    is_osequence,
    macaulay_lower,
    macaulay_upper,
)
from .lefschetz import (
    HessianReport,
    LefschetzVerdict,
    check_lefschetz_element,
    has_slp,
    has_wlp,
    hessian,
    mult_map_matrix,
)
from .linalg import PolyMatrix, RationalMatrix, det_poly, generic_rank
from .parsing import parse_poly
from .poly import (
    HomogeneousPoly,
    VariableSet,
    apply_monomial_op,
    binary_form_from_coeffs,
    binary_variables,
    coeff_vector,
    monomial_count,
    monomials,
    perazzo_variables,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # errors
    "PerazzoError",
    "ParseError",
    "GuardError",
    "InternalError",
    # polynomials
    "VariableSet",
    "HomogeneousPoly",
    "perazzo_variables",
    "binary_variables",
    "monomials",
    "monomial_count",
    "apply_monomial_op",
    "coeff_vector",
    "binary_form_from_coeffs",
    "parse_poly",
    # linear algebra
    "RationalMatrix",
    "PolyMatrix",
    "generic_rank",
    "det_poly",
    # inverse systems
    "CatalecticantMap",
    "catalecticant",
    "HVector",
    "h_vector",
    "ann_basis",
    "binomial_expansion",
    "macaulay_upper",
    "macaulay_lower",
    "is_osequence",
    "green_bound",
    # lefschetz
    "HessianReport",
    "hessian",
    "LefschetzVerdict",
    "has_slp",
    "has_wlp",
    "check_lefschetz_element",
    "mult_map_matrix",
    # binary form utilities
    "normalize_binary",
    "binary_partials",
    "binary_gcd",
    "binary_divides",
    "is_squarefree",
    "linear_factors",
    "rational_roots",
    # perazzo forms
    "PerazzoForm",
    "BlockMatrices",
    "hankel_block",
    "blocks",
    "HRankBounds",
    "h_via_ranks",
    "max_hvector",
    "min_hvector",
    "WaringResult",
    "waring_rank",
    "secant_membership",
    "intersection_divisor",
    "multiplicity_pattern",
    "PerazzoCase",
    "Normalization",
    "PerazzoClass",
    "classify",
    "classify_polynomial",
    "is_cone",
    "algebraic_relation",
    "osculating_family",
    "tangent_point_family",
    "three_points_family",
    "random_perazzo_form",
]
