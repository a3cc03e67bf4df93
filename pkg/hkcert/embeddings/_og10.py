"""Embeddings of the rank-3 OG10 lattice for divisibility 3."""

# License: MIT

import logging
import warnings

from ..arithmetic import three_squares_distinct_coprime
from ..base import OG10_WINDOW
from ..exceptions import DependentVectors, HypothesisViolated, LiteratureCase, OpenCase
from ..lattice import E8Vector, gram_qt_og10
from ..utils._validation_param import check_positive_int
from ._appendix import OG10_APPENDIX, OG10_EXPLICIT
from ._search import search_og10_embedding
from .base import Embedding

logger = logging.getLogger(__name__)

THETA2_R = frozenset({33, 57, 177})
THETA1_R = frozenset({19, 27, 43, 51, 67, 99, 123, 163, 187, 267, 627})


def og10_window(t):
    """Even ``x_1`` with ``2 x_1^2 + (x_1+1)^2 + 12 < 2t < 2 (x_1+2)^2 +
    (x_1+3)^2 + 12`` and ``R = 2t - 2 x_1^2 - (x_1+1)^2``."""
    if 2 * t <= 13:
        raise HypothesisViolated("t_window", f"t={t} is below the first window")
    x1 = 0
    while 2 * (x1 + 2) ** 2 + (x1 + 3) ** 2 + 12 < 2 * t:
        x1 += 2
    return x1, 2 * t - 2 * x1 * x1 - (x1 + 1) ** 2


def og10_theta(R):
    if R in THETA2_R:
        return 2
    if R % 8 == 7 or R in THETA1_R:
        return 1
    return 0


def _v3(x1, theta, parts):
    return E8Vector(tuple(2 * c for c in (x1, x1, x1 + 1, theta, theta) + parts))


def _validate(embedding):
    if not embedding.gram_reproduced():
        return "Gram matrix not reproduced"
    try:
        if not embedding.is_primitive():
            return "not primitive"
    except DependentVectors:
        return "images are dependent"
    total = embedding.root_count().total
    low, high = OG10_WINDOW
    if not low <= total <= high:
        return f"{total} roots outside [{low}, {high}]"
    return None


def _stored_row(t, gram, v1, v2):
    if t in OG10_EXPLICIT:
        coefficients, integral, fractional = OG10_EXPLICIT[t]
        params = {"t": t, "v3": list(coefficients)}
    else:
        x1, theta, parts, integral, fractional = OG10_APPENDIX[t]
        params = {"t": t, "x1": x1, "theta": theta, "parts": list(parts)}
        coefficients = (x1, x1, x1 + 1, theta, theta) + parts
    params["tabulated"] = [integral, fractional]
    try:
        v3 = E8Vector(tuple(2 * c for c in coefficients))
    except ValueError as exc:
        return None, params, str(exc)
    embedding = Embedding(gram, (v1, v2, v3), "appendix", params)
    return embedding, params, _validate(embedding)


def embed_og10_div3(t, budget=None):
    """Primitive embedding of the OG10 lattice ``[[2, -1, 0], [-1, 2, 1],
    [0, 1, 2t]]`` into E8.

    ``v_1 = e_2 - e_1``, ``v_2 = e_3 - e_2`` and ``v_3 = x_1 (e_1 + e_2) +
    (x_1 + 1) e_3 + theta (e_4 + e_5) + x_6 e_6 + x_7 e_7 + x_8 e_8``. For
    ``t <= 66`` the tabulated row is used; a row that is not a valid
    embedding is replaced by :func:`search_og10_embedding` with a warning.

    Parameters
    ----------
    t : int

    budget : int, default=None
        Node budget of the replacement search.

    Returns
    -------
    embedding : Embedding

    Raises
    ------
    LiteratureCase
        For ``t = 4``.

    OpenCase
        For ``t < 4``.
    """
    t = check_positive_int(t, "t")
    if t == 4:
        raise LiteratureCase("GHS11", "t=4")
    if t < 4:
        raise OpenCase("t_open", f"t={t} is not covered")
    gram = gram_qt_og10(t)
    v1 = E8Vector((-2, 2, 0, 0, 0, 0, 0, 0))
    v2 = E8Vector((0, -2, 2, 0, 0, 0, 0, 0))

    if t in OG10_EXPLICIT or t in OG10_APPENDIX:
        embedding, params, problem = _stored_row(t, gram, v1, v2)
        if problem is None:
            return embedding
        warnings.warn(
            f"Tabulated embedding for t={t} is invalid ({problem}); "
            f"searching for a replacement."
        )
        found = search_og10_embedding(t, budget=budget)
        if found is None:
            raise HypothesisViolated("og10_search_failed", f"t={t}")
        embedding = found[0]
        return Embedding(
            gram, embedding.images, "search", {**params, "replaced": problem}
        )

    x1, R = og10_window(t)
    theta = og10_theta(R)
    S = R - 2 * theta * theta
    decomposition = three_squares_distinct_coprime(S)
    if decomposition is None:
        raise HypothesisViolated("S_not_representable", f"t={t} R={R} S={S}")
    parts = decomposition.parts
    logger.debug(f"og10 t={t}: x1={x1} R={R} theta={theta} parts={parts}")
    return Embedding(
        gram,
        (v1, v2, _v3(x1, theta, parts)),
        "og10",
        {"t": t, "x1": x1, "R": R, "theta": theta, "parts": list(parts)},
    )
