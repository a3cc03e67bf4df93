"""Embeddings of ``Q_t = [[2, -1], [-1, 2t]]`` for K3^[2] type and
divisibility 2."""

# License: MIT

import logging

from ..arithmetic import four_squares_constrained
from ..exceptions import HypothesisViolated, LiteratureCase, OpenCase
from ..lattice import E8Vector, gram_qt_k32
from ..utils._validation_param import check_positive_int
from ._appendix import K32_APPENDIX, K32_T21
from .base import Embedding

logger = logging.getLogger(__name__)

K32_LITERATURE_T = frozenset({10, 12})


def k32_window(t):
    """The unique ``x_1`` with ``x_1^2 + (x_1+1)^2 + 6 < 2t <
    (x_1+1)^2 + (x_1+2)^2 + 6`` and the remainder ``R``."""
    x1 = 0
    while (x1 + 1) ** 2 + (x1 + 2) ** 2 + 6 <= 2 * t:
        x1 += 1
    low = x1 * x1 + (x1 + 1) ** 2 + 6
    # both ends of the window are odd
    assert low != 2 * t and (x1 + 1) ** 2 + (x1 + 2) ** 2 + 6 != 2 * t
    if low > 2 * t:
        raise HypothesisViolated("t_window", f"2t={2 * t} is below every window")
    return x1, 2 * t - x1 * x1 - (x1 + 1) ** 2


def embed_k32_div2(t):
    """Primitive embedding of ``[[2, -1], [-1, 2t]]`` into E8.

    ``v_1 = e_1 + e_2`` and ``v_2 = x_1 e_1 - (x_1 + 1) e_2 + x_5 e_5 + ..
    + x_8 e_8``, except at ``t = 21`` where a half-integer ``v_2`` is used.

    Parameters
    ----------
    t : int
        ``t >= 13``.

    Returns
    -------
    embedding : Embedding

    Raises
    ------
    LiteratureCase
        For ``t`` in ``{10, 12}``.

    OpenCase
        For ``t = 11`` and ``t < 10``.
    """
    t = check_positive_int(t, "t")
    if t in K32_LITERATURE_T:
        raise LiteratureCase("GHS13", f"t={t}")
    if t < 13:
        raise OpenCase("t_open", f"t={t} is not covered")
    gram = gram_qt_k32(t)

    if t == 21:
        return Embedding(
            gram=gram,
            images=(E8Vector(K32_T21["v1"]), E8Vector(K32_T21["v2"])),
            construction_tag="k32-half-integer",
            params={"t": t},
        )

    x1, R = k32_window(t)
    parts = four_squares_constrained(R, "k32").parts
    tag = "k32"
    row = K32_APPENDIX.get(t)
    if row is not None and row[:3] == (x1, R, parts):
        tag = "appendix"
    logger.debug(f"k32 t={t}: x1={x1} R={R} parts={parts} ({tag})")
    v1 = E8Vector((2, 2, 0, 0, 0, 0, 0, 0))
    v2 = E8Vector(tuple(2 * c for c in (x1, -(x1 + 1), 0, 0) + parts))
    return Embedding(
        gram=gram,
        images=(v1, v2),
        construction_tag=tag,
        params={"t": t, "x1": x1, "R": R, "parts": list(parts)},
    )
