"""Test the OG10 divisibility three embeddings."""

# License: MIT

import pytest

from sklearn.utils import check_random_state

from hkcert.embeddings import embed_og10_div3, og10_theta, og10_window
from hkcert.exceptions import LiteratureCase, OpenCase


@pytest.mark.parametrize("t, expected", [(8, (0, 15)), (34, (2, 51)), (100, (6, 79))])
def test_og10_window(t, expected):
    assert og10_window(t) == expected


@pytest.mark.parametrize(
    "R, theta", [(79, 1), (33, 2), (177, 2), (19, 1), (15, 1), (20, 0), (41, 0)]
)
def test_og10_theta(R, theta):
    assert og10_theta(R) == theta


@pytest.mark.parametrize(
    "t, tag, counts",
    [
        (5, "appendix", (12, 2)),
        (6, "appendix", (6, 4)),
        (8, "appendix", (2, 6)),
        (28, "appendix", (0, 2)),
        (63, "appendix", (4, 4)),
        (100, "og10", (2, 0)),
    ],
)
def test_embed_og10_div3_counts(t, tag, counts):
    embedding = embed_og10_div3(t)
    assert embedding.construction_tag == tag
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert (count.integral, count.fractional) == counts


def test_embed_og10_div3_recipe_vector():
    v3 = embed_og10_div3(100).images[2]
    assert v3.coordinates == (6, 6, 7, 1, 1, 8, 3, 2)


@pytest.mark.parametrize("t", [7, 12, 13])
def test_embed_og10_div3_replaces_invalid_rows(t):
    with pytest.warns(UserWarning, match="invalid"):
        embedding = embed_og10_div3(t)
    assert embedding.construction_tag == "search"
    assert "replaced" in embedding.params
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    assert 2 <= embedding.root_count().total <= 16


@pytest.mark.filterwarnings("ignore:Tabulated embedding")
@pytest.mark.parametrize("t", range(5, 67))
def test_embed_og10_div3_low_degrees(t):
    embedding = embed_og10_div3(t)
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    assert 2 <= embedding.root_count().total <= 16


def test_embed_og10_div3_recipe_degrees():
    rng = check_random_state(0)
    for t in rng.randint(67, 1500, size=30):
        embedding = embed_og10_div3(int(t))
        assert embedding.construction_tag == "og10"
        assert embedding.gram_reproduced()
        assert embedding.is_primitive()
        count = embedding.root_count()
        assert 2 <= count.total <= 16, t
        params = embedding.params
        if 3 * params["x1"] + 1 > 2 * params["theta"] + sum(params["parts"]):
            assert count.fractional == 0, t


def test_embed_og10_div3_literature():
    with pytest.raises(LiteratureCase) as excinfo:
        embed_og10_div3(4)
    assert excinfo.value.citation == "GHS11"


@pytest.mark.parametrize("t", [1, 3])
def test_embed_og10_div3_open(t):
    with pytest.raises(OpenCase):
        embed_og10_div3(t)
