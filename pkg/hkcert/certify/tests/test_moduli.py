"""Test components, degrees and strange duality."""

# License: MIT

import math

import pytest
from sklearn.utils import check_random_state

from hkcert.certify import (
    monodromy_index,
    non_empty_components,
    normalize_label,
    og10_t_of,
    strange_duality,
    t_of,
)
from hkcert.exceptions import EmptyQuery, NonIntegralT


def _brute_force_labels(n, d, gamma):
    if (2 * (n - 1)) % gamma or (2 * d) % gamma:
        return set()
    return {
        normalize_label(a, gamma)
        for a in range(2 * gamma)
        if math.gcd(a, gamma) == 1
        and (2 * d // gamma + 2 * (n - 1) // gamma * a * a) % (2 * gamma) == 0
    }


@pytest.mark.parametrize("d", range(1, 60))
def test_non_empty_k32_gamma2(d):
    components = non_empty_components("k3n", 2, d, 2)
    assert (not components.is_empty) == (d % 4 == 3)


@pytest.mark.parametrize("n, d", [(2, 1), (7, 10), (26, 1001)])
def test_non_empty_gamma1(n, d):
    assert non_empty_components("k3n", n, d, 1).labels == (0,)


@pytest.mark.parametrize("d", [150, 225])
def test_non_empty_worked_example(d):
    components = non_empty_components("k3n", 26, d, 5)
    assert components.labels == (1, 2)
    assert 2 in components and len(components) == 2


def test_non_empty_components_brute_force():
    rng = check_random_state(0)
    for _ in range(400):
        gamma = int(rng.randint(1, 51))
        n = int(rng.randint(2, 300))
        d = int(rng.randint(1, 3000))
        labels = set(non_empty_components("k3n", n, d, gamma).labels)
        assert labels == _brute_force_labels(n, d, gamma), (n, d, gamma)


@pytest.mark.parametrize(
    "d, gamma, labels",
    [(564, 3, (1,)), (33, 3, (1,)), (30, 3, ()), (30, 1, (0,)), (30, 2, ())],
)
def test_non_empty_og10(d, gamma, labels):
    assert non_empty_components("og10", None, d, gamma).labels == labels


@pytest.mark.parametrize(
    "n, d, gamma, a, t",
    [(26, 225, 5, 1, 10), (26, 150, 5, 2, 10), (9, 17, 1, 0, 17), (2, 51, 2, 1, 13)],
)
def test_t_of(n, d, gamma, a, t):
    assert t_of(n, d, gamma, a) == t


def test_t_of_non_integral():
    with pytest.raises(NonIntegralT, match="not divisible"):
        t_of(26, 226, 5, 1)


def test_og10_t_of():
    assert og10_t_of(564) == 63
    assert og10_t_of(33) == 4
    with pytest.raises(NonIntegralT):
        og10_t_of(30)


@pytest.mark.parametrize(
    "n, gamma, index", [(2, 2, 1), (2, 1, 1), (3, 1, 2), (3, 2, 2), (7, 3, 1)]
)
def test_monodromy_index(n, gamma, index):
    assert monodromy_index(n, gamma) == index


def test_strange_duality_examples():
    assert strange_duality(10, 3, 1, 0) == (4, 9, 1, 0)
    assert strange_duality(26, 150, 5, 2) == (151, 25, 5, 2)
    assert strange_duality(2, 51, 2, 1) == (52, 1, 2, 1)


def test_strange_duality_empty():
    with pytest.raises(EmptyQuery, match="not a component"):
        strange_duality(26, 155, 5, 1)


def test_strange_duality_involution_and_non_emptiness():
    rng = check_random_state(0)
    n_checked = 0
    while n_checked < 300:
        gamma = int(rng.randint(1, 30))
        n = int(rng.randint(2, 200))
        d = int(rng.randint(1, 2000))
        components = non_empty_components("k3n", n, d, gamma)
        if components.is_empty:
            continue
        a = components.labels[int(rng.randint(len(components)))]
        dual = strange_duality(n, d, gamma, a)
        assert dual[3] in non_empty_components("k3n", dual[0], dual[1], gamma)
        assert strange_duality(*dual) == (n, d, gamma, a)
        n_checked += 1
