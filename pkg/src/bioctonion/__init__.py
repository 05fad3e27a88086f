"""Exact bioctonionic algebra, Veronese planes, cubic Jordan machinery and
isometry Lie algebra computations.

All arithmetic in the algebraic layers is exact (gmpy2 rationals); large
nullspace solves run over several prime fields and are lifted back to
certified rational bases.
"""

from .scalars import Q, Scalar
from .composition import CompositionTable, Element, standard_table, identity_suite
from .tensor import TensorAlgebra, TensorElement, algebra
from .veronese import PlaneKind, ProjectivePoint, Line, VeroneseTriple
from .jordan import HermMatrix3

__all__ = [
    "Q",
    "Scalar",
    "CompositionTable",
    "Element",
    "standard_table",
    "identity_suite",
    "TensorAlgebra",
    "TensorElement",
    "algebra",
    "PlaneKind",
    "ProjectivePoint",
    "Line",
    "VeroneseTriple",
    "HermMatrix3",
]
