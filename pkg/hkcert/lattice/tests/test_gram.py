"""Test Gram matrices and their constructors."""

# License: MIT

import pytest

from hkcert.exceptions import DivisibilityViolation, InvalidGramMatrix, ZeroVector
from hkcert.lattice import (
    GramMatrix,
    discriminant_group,
    divisibility,
    gram_mnp,
    gram_qh_k3n,
    gram_qt_k32,
    gram_qt_og10,
    is_positive_definite,
)


@pytest.mark.parametrize(
    "n, gamma, a, t, entries",
    [
        (26, 5, 1, 10, ((50, -10), (-10, 20))),
        (26, 5, 2, 9, ((50, -20), (-20, 18))),
        (15, 1, 0, 3, ((28, 0), (0, 6))),
        (2, 2, 1, 13, ((2, -1), (-1, 26))),
        (10, 3, 1, 5, ((18, -6), (-6, 10))),
    ],
)
def test_gram_qh_k3n(n, gamma, a, t, entries):
    gram = gram_qh_k3n(n, gamma, a, t)
    assert gram.entries == entries
    d = gamma**2 * t - (n - 1) * a**2
    assert gram.det * gamma**2 == 4 * d * (n - 1)


@pytest.mark.parametrize(
    "n, gamma, a, t, err_msg",
    [
        (26, 5, 5, 10, "coprime"),
        (26, 5, 0, 10, "coprime"),
        (5, 3, 1, 2, "does not divide"),
    ],
)
def test_gram_qh_k3n_divisibility_violation(n, gamma, a, t, err_msg):
    with pytest.raises(DivisibilityViolation, match=err_msg):
        gram_qh_k3n(n, gamma, a, t)


def test_gram_qt_k32():
    assert gram_qt_k32(13) == gram_mnp(2, -1, 26)


def test_gram_qt_og10():
    gram = gram_qt_og10(4)
    assert gram.det == 22
    assert is_positive_definite(gram)
    assert not is_positive_definite(gram.negated())


@pytest.mark.parametrize(
    "entries, err_msg",
    [
        (((1, 0), (0, 2)), "odd"),
        (((2, 1), (0, 2)), "differ"),
        (((2, 2), (2, 2)), "degenerate"),
        (((2, 0, 0), (0, 2)), "square"),
        ((), "square"),
        (((2, 0.5), (0.5, 2)), "int"),
    ],
)
def test_gram_matrix_invalid(entries, err_msg):
    with pytest.raises(InvalidGramMatrix, match=err_msg):
        GramMatrix(entries)


def test_gram_matrix_accessors():
    gram = gram_mnp(50, -10, 20)
    assert gram.dim == 2
    assert gram[0, 1] == -10
    assert gram.tolist() == [[50, -10], [-10, 20]]
    assert gram.apply((1, 1)) == (40, 10)


@pytest.mark.parametrize(
    "entries, divisors, order",
    [
        (((2, -1), (-1, 2)), (3,), 3),
        (((2, 0), (0, 2)), (2, 2), 4),
        (((50, -10), (-10, 20)), (10, 90), 900),
        (((2, -1, 0), (-1, 2, 1), (0, 1, 8)), (22,), 22),
    ],
)
def test_discriminant_group(entries, divisors, order):
    group = discriminant_group(GramMatrix(entries))
    assert group.elementary_divisors == divisors
    assert group.order == order
    assert group.is_cyclic == (len(divisors) <= 1)


def test_divisibility():
    gram = gram_mnp(50, -10, 20)
    assert divisibility((1, 0), gram) == 10
    assert divisibility((0, 1), gram) == 10
    assert divisibility((1, 1), gram) == 10
    assert divisibility((1, 0), gram_qt_k32(13)) == 1
    with pytest.raises(ZeroVector):
        divisibility((0, 0), gram)
