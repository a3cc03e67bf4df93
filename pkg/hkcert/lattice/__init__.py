"""
The :mod:`hkcert.lattice` submodule provides exact integer lattice
primitives: Smith normal form, Gram matrices and the E8 lattice.
"""

from . import _snf
from . import _gram
from . import _e8

from ._snf import SNFResult
from ._snf import smith_normal_form
from ._snf import invariant_factors

from ._gram import GramMatrix
from ._gram import DiscriminantGroup
from ._gram import discriminant_group
from ._gram import is_positive_definite
from ._gram import divisibility
from ._gram import gram_mnp
from ._gram import gram_qh_k3n
from ._gram import gram_qt_k32
from ._gram import gram_qt_og10

from ._e8 import E8Vector
from ._e8 import RootCount
from ._e8 import e8_vector
from ._e8 import is_in_e8
from ._e8 import e8_basis
from ._e8 import coordinates_in_basis
from ._e8 import all_roots
from ._e8 import roots_orthogonal_to
from ._e8 import is_primitive_embedding
from ._e8 import is_in_vminus
from ._e8 import is_in_vplus
from ._e8 import roots_in_vminus_orthogonal_to
from ._e8 import iter_canonical_tails
from ._e8 import iter_canonical_vectors_of_norm
from ._e8 import iter_vectors_of_norm

__all__ = [
    "SNFResult",
    "smith_normal_form",
    "invariant_factors",
    "GramMatrix",
    "DiscriminantGroup",
    "discriminant_group",
    "is_positive_definite",
    "divisibility",
    "gram_mnp",
    "gram_qh_k3n",
    "gram_qt_k32",
    "gram_qt_og10",
    "E8Vector",
    "RootCount",
    "e8_vector",
    "is_in_e8",
    "e8_basis",
    "coordinates_in_basis",
    "all_roots",
    "roots_orthogonal_to",
    "is_primitive_embedding",
    "is_in_vminus",
    "is_in_vplus",
    "roots_in_vminus_orthogonal_to",
    "iter_canonical_tails",
    "iter_canonical_vectors_of_norm",
    "iter_vectors_of_norm",
]
