"""Stiefel-Whitney numbers, Euler-class obstructions and the Borsuk-Ulam
trichotomy for free Z/2-bordism classes of products of projective spaces."""

from .algebra import (
    F2Matrix,
    F2Solution,
    TruncatedPoly,
    binom_mod2,
    partitions_of,
    partitions_upto,
    poly_inverse,
    poly_mul,
    solve_f2,
)
from .bordism import CharNumberProfile, a0, bordant_eq, char_number, profile, profile_add
from .classify import Case, ClassificationResult, bup_index, classify, classify_m1
from .decompose import DecompositionResult, decompose, low_coeffs_vanish, model_number
from .expr import ExprError, parse_expr
from .manifold import (
    CohomologyModel,
    Component,
    ManifoldDescriptor,
    ProjectiveFactor,
    basis_class,
    build_model,
    disjoint_union,
    fundamental_pair,
    product,
)
from .obstruction import (
    ObstructionReport,
    RangeFlags,
    en_pushforward,
    en_vanishes,
    enr_vanishes,
    range_flags,
    section_exists_rep,
)

__version__ = "0.1.0"
