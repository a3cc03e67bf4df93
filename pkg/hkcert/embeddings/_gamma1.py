"""Embeddings for divisibility one, split along ``V_-`` and ``V_+``."""

# License: MIT

import logging

from ..arithmetic import four_squares_constrained, three_squares_positive_coprime
from ..exceptions import HypothesisViolated
from ..lattice import E8Vector, gram_qh_k3n
from ..utils._validation_param import check_positive_int
from .base import Embedding, VPlusMinus

logger = logging.getLogger(__name__)

N_MINUS_1_EXCLUDED = frozenset({10, 13, 25, 37, 58, 85, 130})


def reorder_alphas(parts):
    """Put the largest even part first and the largest odd part second."""
    parts = sorted(parts, reverse=True)
    even = next(p for p in parts if p % 2 == 0)
    parts.remove(even)
    odd = next(p for p in parts if p % 2 == 1)
    parts.remove(odd)
    return (even, odd, parts[0])


def check_gamma1_premises(n, d):
    """Raise :class:`HypothesisViolated` unless ``(n, d)`` fits the recipe."""
    m = n - 1
    if m <= 6:
        raise HypothesisViolated("n_minus_1_small", f"n-1={m} must exceed 6")
    if m % 4 not in (1, 2):
        raise HypothesisViolated("n_minus_1_residue", f"n-1={m} is {m % 4} mod 4")
    if m in N_MINUS_1_EXCLUDED:
        raise HypothesisViolated(
            "n_minus_1_excluded", f"n-1={m} is in {sorted(N_MINUS_1_EXCLUDED)}"
        )
    if d < 3:
        raise HypothesisViolated("d_small", f"d={d} must be at least 3")
    if d % 4 == 0:
        raise HypothesisViolated("d_residue", f"d={d} is divisible by 4")


def embed_gamma1(n, d):
    """Embedding of ``Q_h = [[2(n-1), 0], [0, 2d]]`` with ``v_1`` in ``V_-``
    and ``v_2`` in ``V_+``.

    ``v_1 = (a_1, a_2, a_3, 0, -a_1, -a_2, -a_3, 0)`` for three positive
    coprime squares of ``n - 1`` and ``v_2 = (x_1, .., x_4, x_1, .., x_4)``
    for the ``"gamma1"`` four-square decomposition of ``d``.

    Parameters
    ----------
    n : int

    d : int

    Returns
    -------
    embedding : Embedding

    vpm : VPlusMinus

    Raises
    ------
    HypothesisViolated
        Checks ``n_minus_1_small``, ``n_minus_1_residue``,
        ``n_minus_1_excluded``, ``d_small`` or ``d_residue``.
    """
    n = check_positive_int(n, "n", 2)
    d = check_positive_int(d, "d")
    check_gamma1_premises(n, d)
    alphas = reorder_alphas(three_squares_positive_coprime(n - 1).parts)
    decomposition = four_squares_constrained(d, "gamma1")
    if decomposition is None:
        raise HypothesisViolated("d_not_representable", f"d={d}")
    xs = decomposition.parts
    logger.debug(f"gamma1 n={n} d={d}: alphas={alphas} x={xs}")

    v1 = E8Vector(tuple(2 * c for c in alphas + (0,) + tuple(-a for a in alphas) + (0,)))
    v2 = E8Vector(tuple(2 * c for c in xs + xs))
    vpm = VPlusMinus.standard()
    embedding = Embedding(
        gram=gram_qh_k3n(n, 1, 0, d),
        images=(v1, v2),
        construction_tag="gamma1",
        params={"alphas": list(alphas), "xs": list(xs)},
    )
    return embedding, vpm
