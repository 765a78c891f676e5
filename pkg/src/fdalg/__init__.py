"""fdalg: exact invariants of finite-dimensional associative algebras.

Computes commutator-subspace codimensions, radical filtrations, Cartan data,
Morita-invariance certificates and small-algebra classifications, over prime
fields and the rationals, in exact arithmetic.
"""

from ._kernels import BACKEND, HAVE_COMPILED
from .algebras import Algebra, Element, direct_sum, group_algebra_from_cayley, matrix_algebra
from .classify import classify_small, classify_truncated, verify_theorem_suite
from .fields import Field, GF, QQ
from .invariants import codim_series, commutator_subspace, k_of
from .linalg import Matrix, Subspace
from .morita import basic_algebra, inflate, verify_morita_invariance
from .quiver import build_path_algebra, parse_quiver
from .structure import cartan_matrix, loewy_length, primitive_idempotents, radical

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BACKEND",
    "Element",
    "Field",
    "GF",
    "HAVE_COMPILED",
    "Matrix",
    "QQ",
    "Subspace",
    "__version__",
    "basic_algebra",
    "build_path_algebra",
    "cartan_matrix",
    "classify_small",
    "classify_truncated",
    "codim_series",
    "commutator_subspace",
    "direct_sum",
    "group_algebra_from_cayley",
    "inflate",
    "k_of",
    "loewy_length",
    "matrix_algebra",
    "parse_quiver",
    "primitive_idempotents",
    "radical",
    "verify_morita_invariance",
    "verify_theorem_suite",
]
