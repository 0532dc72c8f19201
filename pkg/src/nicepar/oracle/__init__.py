"""Exact-arithmetic ground truth: root systems, Chevalley bases, matrix models and ranks."""

from .algebra import ChevalleyAlgebra, chevalley_algebra
from .exact import ExactMatrix, integer_rank, modular_rank
from .matrix_model import MatrixModel, in_algebra, matrix_power_ranks
from .niceness import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    GenericElement,
    GradedAlgebra,
    IndeterminateError,
    OracleInconsistency,
    OracleVerdict,
    ad_map,
    centralizer_dim_oracle,
    dimension_obstruction,
    graded_for,
    injectivity_check,
    is_nice_oracle,
    surjectivity_check,
)
from .roots import RootSystem, build_root_system, iter_colorings

__all__ = [
    "ChevalleyAlgebra",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "ExactMatrix",
    "GenericElement",
    "GradedAlgebra",
    "IndeterminateError",
    "MatrixModel",
    "OracleInconsistency",
    "OracleVerdict",
    "RootSystem",
    "ad_map",
    "build_root_system",
    "centralizer_dim_oracle",
    "chevalley_algebra",
    "dimension_obstruction",
    "graded_for",
    "in_algebra",
    "injectivity_check",
    "integer_rank",
    "is_nice_oracle",
    "iter_colorings",
    "matrix_power_ranks",
    "modular_rank",
    "surjectivity_check",
]
