"""Exact Laguerre, Meixner and Charlier bases of the algebra of symmetric
functions, their moment functionals, z-measures and the Young-graph dynamics."""

from .bases import (
    GradedOperator,
    OrthoFunction,
    apply_operator,
    charlier,
    laguerre,
    meixner,
    operator_matrix,
    ortho_function,
)
from .errors import DegenerateNormalization, DegreeOverflow, DomainError, ParameterError
from .fs import FS, fs_value
from .measures import phi, rel_weight, zmeasure_table
from .partitions import Partition, dim, enumerate_partitions
from .scalars import ParamPoint, classify, rational
from .sym import S, SymElement, ThomaPoint, convert, multiply

__version__ = "0.1.0"

__all__ = [
    "DegenerateNormalization",
    "DegreeOverflow",
    "DomainError",
    "FS",
    "GradedOperator",
    "OrthoFunction",
    "ParamPoint",
    "ParameterError",
    "Partition",
    "S",
    "SymElement",
    "ThomaPoint",
    "apply_operator",
    "charlier",
    "classify",
    "convert",
    "dim",
    "enumerate_partitions",
    "fs_value",
    "laguerre",
    "meixner",
    "multiply",
    "operator_matrix",
    "ortho_function",
    "phi",
    "rational",
    "rel_weight",
    "zmeasure_table",
]
