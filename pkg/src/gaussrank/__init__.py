"""Exact rank computations for Gaussian maps of cyclic covers of the line.

The pipeline: a monodromy datum describes a Z/m Galois cover of the
projective line; the cover equation is solved as an exact truncated power
series at a totally ramified point; the canonical basis of holomorphic
one-forms is written down in the local coordinate; and the ranks of the
multiplication map and of the second Gaussian map on its kernel are
computed by exact linear algebra over the rationals.  Every reported rank
is a certified lower bound.
"""

from .cover import (
    CoverModel,
    FormBasis,
    branch_solve,
    canonical_form_basis,
    default_precision,
    exponent_table,
)
from .errors import (
    DegenerateWitness,
    EmptyLocus,
    GaussRankError,
    MonodromyParseError,
    NonIntegralGenus,
    NoTotallyRamifiedPoint,
    NotAQuadric,
    NotNormalized,
    PrecisionTooLow,
    RepeatedBranchPoints,
    ResourceCapExceeded,
    SubspaceTooSmall,
    ZeroConstantTerm,
)
from .gaussmaps import (
    EscalatingPrecision,
    FixedPrecision,
    QuadricSpace,
    RankReport,
    WitnessReport,
    build_basis,
    compute_witness,
    contract_with_products,
    mu1_restricted_rank,
    mu1_series,
    mu2_of_quadric,
    mu2_rank,
    multiplication_matrix,
    quadric_character,
    quadric_space,
    stable_rank,
    symmetric_pairs,
    witness_vector,
)
from .linalg import RationalMatrix
from .monodromy import (
    GaloisFamilyClass,
    MonodromyDatum,
    default_branch_points,
    eigenspace_dimensions,
    enumerate_galois,
    genus,
    is_valid,
    multiply_unit,
    normalize,
    parse_branch_points,
    parse_monodromy,
    permute,
    survey_monodromy,
    validate,
)
from .series import Rational, TruncatedSeries, as_rational, rational

__version__ = "0.1.0"

__all__ = [
    "CoverModel",
    "DegenerateWitness",
    "EmptyLocus",
    "EscalatingPrecision",
    "FixedPrecision",
    "FormBasis",
    "GaloisFamilyClass",
    "GaussRankError",
    "MonodromyDatum",
    "MonodromyParseError",
    "NonIntegralGenus",
    "NoTotallyRamifiedPoint",
    "NotAQuadric",
    "NotNormalized",
    "PrecisionTooLow",
    "QuadricSpace",
    "RankReport",
    "Rational",
    "RationalMatrix",
    "RepeatedBranchPoints",
    "ResourceCapExceeded",
    "SubspaceTooSmall",
    "TruncatedSeries",
    "WitnessReport",
    "ZeroConstantTerm",
    "as_rational",
    "branch_solve",
    "build_basis",
    "canonical_form_basis",
    "compute_witness",
    "contract_with_products",
    "default_branch_points",
    "default_precision",
    "eigenspace_dimensions",
    "enumerate_galois",
    "exponent_table",
    "genus",
    "is_valid",
    "mu1_restricted_rank",
    "mu1_series",
    "mu2_of_quadric",
    "mu2_rank",
    "multiplication_matrix",
    "multiply_unit",
    "normalize",
    "parse_branch_points",
    "parse_monodromy",
    "permute",
    "quadric_character",
    "quadric_space",
    "rational",
    "stable_rank",
    "survey_monodromy",
    "symmetric_pairs",
    "validate",
    "witness_vector",
]
