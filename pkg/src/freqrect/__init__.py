"""Frequency rectangles, orthogonal arrays, Hadamard matrices, and
t-independent vector sets: construction, verification, and search."""

from .designs import (
    FrequencyRectangle,
    HadamardMatrix,
    OrthogonalArray,
    PairCountTable,
    ShapeError,
    ValidationError,
    VectorSet,
    complement,
    validate_fr,
    validate_hadamard,
    validate_oa,
)
from .gf import FieldError, FieldSpec, is_prime, rank_exact, rank_gf
from .kernels import BACKEND
from .verify import (
    build_incidence,
    is_mutually_orthogonal,
    is_orthogonal_pair,
    is_t_independent,
    is_t_orthogonal,
    mofr_upper_bound,
    pair_counts,
    verify_gram,
    verify_spectrum,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "FieldError",
    "FieldSpec",
    "FrequencyRectangle",
    "HadamardMatrix",
    "OrthogonalArray",
    "PairCountTable",
    "ShapeError",
    "ValidationError",
    "VectorSet",
    "build_incidence",
    "complement",
    "is_mutually_orthogonal",
    "is_orthogonal_pair",
    "is_prime",
    "is_t_independent",
    "is_t_orthogonal",
    "mofr_upper_bound",
    "pair_counts",
    "rank_exact",
    "rank_gf",
    "validate_fr",
    "validate_hadamard",
    "validate_oa",
    "verify_gram",
    "verify_spectrum",
    "__version__",
]
