"""Test the Smith normal form."""

# License: MIT

import numpy as np
import pytest
from sklearn.utils import check_random_state
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from hkcert.lattice import invariant_factors, smith_normal_form


def _product(left, m, right):
    left = np.array(left, dtype=object)
    m = np.array(m, dtype=object)
    right = np.array(right, dtype=object)
    return left.dot(m).dot(right).tolist()


@pytest.mark.parametrize(
    "m, diag",
    [
        ([[50, -10], [-10, 20]], (10, 90)),
        ([[2, -1], [-1, 2]], (1, 3)),
        ([[2, 0], [0, 2]], (2, 2)),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[0, 0], [0, 0]], (0, 0)),
        ([[4, 6, 8]], (2,)),
        ([[6], [10], [15]], (1,)),
    ],
)
def test_smith_normal_form_diag(m, diag):
    result = smith_normal_form(m)
    assert result.diag == diag
    assert _product(result.left, m, result.right) == [
        list(row) for row in result.diagonal_matrix()
    ]


@pytest.mark.parametrize(
    "m",
    [
        [[3, 7, 1], [5, -2, 8], [0, 4, 4]],
        [[12, 18], [8, 30], [6, 6]],
        [[1, 2, 3, 4], [2, 4, 6, 8]],
    ],
)
def test_smith_normal_form_transforms_are_unimodular(m):
    result = smith_normal_form(m)
    assert abs(int(np.round(np.linalg.det(np.array(result.left, dtype=float))))) == 1
    assert abs(int(np.round(np.linalg.det(np.array(result.right, dtype=float))))) == 1
    factors = result.invariant_factors
    assert all(d > 0 for d in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_smith_normal_form_rank():
    assert smith_normal_form([[1, 2, 3, 4], [2, 4, 6, 8]]).rank == 1
    assert invariant_factors([[2, 0], [0, 0]]) == (2,)


def test_smith_normal_form_rejects_ragged_rows():
    with pytest.raises(ValueError, match="same length"):
        smith_normal_form([[1, 2], [3]])


def test_smith_normal_form_rejects_non_integers():
    with pytest.raises(TypeError, match="should be of type `int`"):
        smith_normal_form([[1.5, 2], [3, 4]])


@pytest.mark.parametrize("m, diag", [([[-3]], (3,)), ([[0, -4], [6, 0]], (2, 12))])
def test_smith_normal_form_diag_is_non_negative(m, diag):
    result = smith_normal_form(m)
    assert result.diag == diag
    assert _product(result.left, m, result.right) == [
        list(row) for row in result.diagonal_matrix()
    ]


def test_smith_normal_form_random_matrices():
    random_state = check_random_state(0)
    for _ in range(100):
        rows, cols = (int(x) for x in random_state.randint(1, 5, size=2))
        m = random_state.randint(-20, 21, size=(rows, cols)).tolist()
        result = smith_normal_form(m)
        assert _product(result.left, m, result.right) == [
            list(row) for row in result.diagonal_matrix()
        ]
        expected = [abs(int(x)) for x in sympy_invariant_factors(Matrix(m))]
        assert list(result.invariant_factors) == [x for x in expected if x]


def test_smith_normal_form_empty():
    result = smith_normal_form([])
    assert result.diag == () and result.left == () and result.right == ()
