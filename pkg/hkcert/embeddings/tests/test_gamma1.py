"""Test the divisibility one recipe."""

# License: MIT

import pytest

from hkcert.embeddings import check_gamma1_premises, embed_gamma1
from hkcert.embeddings._gamma1 import reorder_alphas
from hkcert.exceptions import HypothesisViolated
from hkcert.lattice import is_in_vminus, is_in_vplus, roots_in_vminus_orthogonal_to


@pytest.mark.parametrize(
    "parts, expected",
    [((3, 2, 1), (2, 3, 1)), ((2, 2, 1), (2, 1, 2)), ((4, 3, 1), (4, 3, 1))],
)
def test_reorder_alphas(parts, expected):
    assert reorder_alphas(parts) == expected


@pytest.mark.parametrize(
    "n, d, counts, vminus",
    [(15, 5, (6, 4), 6), (10, 3, (4, 4), 2)],
)
def test_embed_gamma1_examples(n, d, counts, vminus):
    embedding, vpm = embed_gamma1(n, d)
    v1, v2 = embedding.images
    assert is_in_vminus(v1)
    assert is_in_vplus(v2)
    assert v2.norm == 2 * d
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert (count.integral, count.fractional) == counts
    assert roots_in_vminus_orthogonal_to(v1) == vminus
    assert vpm.is_orthogonal()


@pytest.mark.parametrize(
    "n, d, check_name",
    [
        (5, 3, "n_minus_1_small"),
        (8, 5, "n_minus_1_residue"),
        (12, 5, "n_minus_1_residue"),
        (11, 3, "n_minus_1_excluded"),
        (26, 3, "n_minus_1_excluded"),
        (15, 2, "d_small"),
        (15, 4, "d_residue"),
    ],
)
def test_check_gamma1_premises(n, d, check_name):
    with pytest.raises(HypothesisViolated) as excinfo:
        check_gamma1_premises(n, d)
    assert excinfo.value.check_name == check_name
    with pytest.raises(HypothesisViolated):
        embed_gamma1(n, d)


@pytest.mark.parametrize("n", [10, 15, 18, 19, 22, 23, 27, 30, 34])
def test_embed_gamma1_properties(n):
    for d in range(3, 60):
        if d % 4 == 0:
            continue
        embedding, _ = embed_gamma1(n, d)
        v1 = embedding.images[0]
        assert embedding.gram_reproduced()
        assert embedding.is_primitive()
        total = embedding.root_count().total
        assert 2 <= total <= 14, (n, d)
        # the cusp check needs an odd number of root pairs in V_-
        assert (roots_in_vminus_orthogonal_to(v1) // 2) % 2 == 1
