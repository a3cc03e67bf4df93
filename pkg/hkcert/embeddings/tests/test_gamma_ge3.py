"""Test the divisibility >= 3 recipe."""

# License: MIT

import pytest
from sklearn.utils import check_random_state

from hkcert.embeddings import embed_gamma_ge3, omega_for
from hkcert.embeddings._gamma_ge3 import EXCLUDED_M
from hkcert.exceptions import HypothesisViolated


@pytest.mark.parametrize(
    "M, omega", [(10, 0), (50, 0), (18, 2), (22, 2), (102, 2), (12, 1), (104, 3)]
)
def test_omega_for(M, omega):
    assert omega_for(M) == omega


def test_embed_gamma_ge3_worked_example():
    embedding, selection = embed_gamma_ge3(50, -10, 20)
    assert selection.alphas == (7, 1, 0)
    assert selection.xs == (-1, -3, 1)
    assert (selection.omega, selection.theta, selection.S) == (0, 0, 9)
    assert selection.case_label == "case1"
    v1, v2 = embedding.images
    assert v1.doubled == (14, 2, 0, 0, 0, 0, 0, 0)
    assert v2.doubled == (-2, -6, 2, 0, 0, 4, 4, 2)
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert (count.integral, count.fractional) == (8, 0)


def test_embed_gamma_ge3_second_component():
    embedding, selection = embed_gamma_ge3(50, -20, 20)
    assert selection.xs == (-3, 1, 1)
    assert sum(x * x for x in selection.xs) == 11
    assert embedding.gram_reproduced() and embedding.is_primitive()
    assert 2 <= embedding.root_count().total <= 14


@pytest.mark.parametrize(
    "M, N, P, case, counts",
    [
        (10, 0, 1000, "case1", (4, 0)),
        (10, 0, 24, "case2", (8, 0)),
        (10, 1, 12, "case3", (8, 0)),
        (10, 0, 22, "case4", (10, 0)),
        (10, 1, 22, "case5", (8, 0)),
        (10, 1, 26, "case6", (8, 0)),
        (10, 0, 46, "case2", (4, 0)),
        (12, 0, 24, "case1", (2, 2)),
    ],
)
def test_embed_gamma_ge3_cases(M, N, P, case, counts):
    embedding, selection = embed_gamma_ge3(M, N, P)
    assert selection.case_label == case
    assert embedding.construction_tag == case
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert (count.integral, count.fractional) == counts


def test_embed_gamma_ge3_case2_xi():
    _, selection = embed_gamma_ge3(10, 0, 46)
    assert selection.xi == 3
    _, selection = embed_gamma_ge3(10, 0, 24)
    assert selection.xi == 2


@pytest.mark.parametrize(
    "M, N, P, check_name",
    [
        (20, 0, 100, "M_excluded"),
        (24, 0, 100, "M_excluded"),
        (8, 0, 100, "M_too_small"),
        (10, 20, 10, "not_positive_definite"),
        (50, -10, 18, "S_too_small"),
        (12, 0, 20, "S_excluded"),
    ],
)
def test_embed_gamma_ge3_hypotheses(M, N, P, check_name):
    with pytest.raises(HypothesisViolated) as excinfo:
        embed_gamma_ge3(M, N, P)
    assert excinfo.value.check_name == check_name


def test_embed_gamma_ge3_random_premises():
    random_state = check_random_state(0)
    n_built, n_tried = 0, 0
    while n_built < 1000 and n_tried < 20000:
        n_tried += 1
        M = 2 * int(random_state.randint(5, 60))
        if M in EXCLUDED_M:
            continue
        N = int(random_state.randint(-M // 2, 1))
        P = 2 * int(random_state.randint(M, 4 * M))
        try:
            embedding, _ = embed_gamma_ge3(M, N, P)
        except HypothesisViolated:
            continue
        n_built += 1
        assert embedding.gram_reproduced(), (M, N, P)
        assert embedding.is_primitive(), (M, N, P)
        assert 2 <= embedding.root_count().total <= 14, (M, N, P)
    assert n_built == 1000
