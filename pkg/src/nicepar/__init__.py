"""Nice parabolic subalgebras: classification, Jordan forms and Richardson elements."""

from .classify import NicenessVerdict, is_nice
from .jordan import JordanForm, centralizer_dim, dimension_route, jordan_form
from .parabolic import BlockSequence, ParabolicSpec, coloring_to_blocks, parse_spec
from .richardson import RichardsonMatrix, build_matrix

__version__ = "0.1.0"

__all__ = [
    "BlockSequence",
    "JordanForm",
    "NicenessVerdict",
    "ParabolicSpec",
    "RichardsonMatrix",
    "build_matrix",
    "centralizer_dim",
    "coloring_to_blocks",
    "dimension_route",
    "is_nice",
    "jordan_form",
    "parse_spec",
]
