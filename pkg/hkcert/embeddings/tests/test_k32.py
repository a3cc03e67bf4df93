"""Test the K3^[2] divisibility two embeddings."""

# License: MIT

import pytest

from hkcert.embeddings import K32_APPENDIX, embed_k32_div2, k32_window
from hkcert.embeddings._appendix import K32_NO_FRACTIONAL
from hkcert.exceptions import LiteratureCase, OpenCase


@pytest.mark.parametrize("t, expected", [(13, (2, 13)), (16, (3, 7)), (34, (5, 7))])
def test_k32_window(t, expected):
    assert k32_window(t) == expected


@pytest.mark.parametrize(
    "t, tag, counts",
    [
        (13, "appendix", (10, 4)),
        (14, "appendix", (6, 8)),
        (21, "k32-half-integer", (6, 8)),
        (34, "k32", (10, 0)),
    ],
)
def test_embed_k32_div2_counts(t, tag, counts):
    embedding = embed_k32_div2(t)
    assert embedding.construction_tag == tag
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert (count.integral, count.fractional) == counts


def test_embed_k32_div2_t34_parts():
    embedding = embed_k32_div2(34)
    assert embedding.params["x1"] == 5
    assert embedding.params["R"] == 7
    assert embedding.params["parts"] == [2, 1, 1, 1]


@pytest.mark.parametrize("t", range(13, 34))
def test_embed_k32_div2_low_degrees(t):
    embedding = embed_k32_div2(t)
    assert embedding.gram_reproduced()
    assert embedding.is_primitive()
    count = embedding.root_count()
    assert 2 <= count.total <= 14
    if t in K32_APPENDIX:
        assert embedding.construction_tag == "appendix"
        assert count.fractional == K32_APPENDIX[t][4]
    elif t in K32_NO_FRACTIONAL:
        assert count.fractional == 0


def test_embed_k32_div2_no_fractional_roots_from_34():
    for t in range(34, 121):
        embedding = embed_k32_div2(t)
        count = embedding.root_count()
        assert count.fractional == 0, t
        assert 2 <= count.total <= 14, t
        assert embedding.is_primitive()


@pytest.mark.parametrize("t", [10, 12])
def test_embed_k32_div2_literature(t):
    with pytest.raises(LiteratureCase) as excinfo:
        embed_k32_div2(t)
    assert excinfo.value.citation == "GHS13"


@pytest.mark.parametrize("t", [1, 9, 11])
def test_embed_k32_div2_open(t):
    with pytest.raises(OpenCase, match="t_open"):
        embed_k32_div2(t)
