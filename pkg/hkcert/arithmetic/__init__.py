"""
The :mod:`hkcert.arithmetic` submodule provides the number theory behind
the embedding recipes: constrained sums of squares and parity-constrained
linear Diophantine equations.
"""

from . import _squares
from . import _diophantine

from ._squares import SquaresDecomposition
from ._squares import THREE_POSITIVE_COPRIME_EXCEPTIONS
from ._squares import THREE_DISTINCT_COPRIME_EXCEPTIONS
from ._squares import FOUR_DISTINCT_POSITIVE_COPRIME_EXCEPTIONS
from ._squares import FOUR_POSITIVE_COPRIME_EXCEPTIONS
from ._squares import N_OR_N_MINUS_2_EXCEPTIONS
from ._squares import is_sum_of_three_squares
from ._squares import iter_three_squares
from ._squares import iter_four_squares
from ._squares import three_squares_distinct_coprime
from ._squares import three_squares_positive_coprime
from ._squares import three_distinct_coprime_of_n_or_n_minus_2
from ._squares import four_squares_distinct_positive_coprime
from ._squares import four_squares_constrained
from ._squares import brute_force_three_squares

from ._diophantine import ParityMode
from ._diophantine import DiophantineSolution
from ._diophantine import bfrt_bound
from ._diophantine import solve_parity

__all__ = [
    "SquaresDecomposition",
    "THREE_POSITIVE_COPRIME_EXCEPTIONS",
    "THREE_DISTINCT_COPRIME_EXCEPTIONS",
    "FOUR_DISTINCT_POSITIVE_COPRIME_EXCEPTIONS",
    "FOUR_POSITIVE_COPRIME_EXCEPTIONS",
    "N_OR_N_MINUS_2_EXCEPTIONS",
    "is_sum_of_three_squares",
    "iter_three_squares",
    "iter_four_squares",
    "three_squares_distinct_coprime",
    "three_squares_positive_coprime",
    "three_distinct_coprime_of_n_or_n_minus_2",
    "four_squares_distinct_positive_coprime",
    "four_squares_constrained",
    "brute_force_three_squares",
    "ParityMode",
    "DiophantineSolution",
    "bfrt_bound",
    "solve_parity",
]
