"""
The :mod:`hkcert.utils` module includes various utilities.
"""

from ._docstring import Substitution

from ._show_versions import show_versions

from ._validation_param import check_integer
from ._validation_param import check_positive_int
from ._validation_param import check_in_choices
from ._validation_param import check_family
from ._validation_param import check_int_vector

__all__ = [
    "Substitution",
    "show_versions",
    "check_integer",
    "check_positive_int",
    "check_in_choices",
    "check_family",
    "check_int_vector",
]
