"""Budgeted exhaustive searches for embeddings into E8.

Both searches walk candidates in a fixed order and stop at the first
primitive embedding whose orthogonal complement has a root count inside the
requested window.
"""

# License: MIT

import logging
import math

from ..base import OG10_WINDOW, get_search_budget
from ..exceptions import DependentVectors
from ..lattice import (
    E8Vector,
    gram_mnp,
    gram_qt_og10,
    is_primitive_embedding,
    iter_canonical_tails,
    roots_orthogonal_to,
)
from ..utils._validation_param import check_integer, check_positive_int
from .base import Embedding

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


class _Budget:
    def __init__(self, budget):
        self.remaining = get_search_budget(budget)

    def spend(self, n=1):
        self.remaining -= n
        if self.remaining < 0:
            raise _BudgetExhausted


def _accept(images, window):
    try:
        if not is_primitive_embedding(images):
            return None
    except DependentVectors:
        return None
    count = roots_orthogonal_to(images)
    low, high = window
    return count if low <= count.total <= high else None


def _iter_partners(v1, square_sum, dot4, budget):
    """Doubled ``c`` of one parity with ``|c|^2 = square_sum`` and
    ``v1 . c = dot4``, pruned by Cauchy-Schwarz on the remaining coordinates."""
    a = v1.doubled
    suffix = [0] * 9
    for i in range(7, -1, -1):
        suffix[i] = suffix[i + 1] + a[i] * a[i]

    def walk(i, prefix, rest, dot_rest, parity):
        budget.spend()
        if i == 8:
            if rest == 0 and dot_rest == 0 and sum(prefix) % 4 == 0:
                yield tuple(prefix)
            return
        if rest < (8 - i) * parity:
            return
        if dot_rest * dot_rest > suffix[i] * rest:
            return
        top = math.isqrt(rest)
        for c in range(top, -top - 1, -1):
            if c % 2 != parity:
                continue
            prefix.append(c)
            yield from walk(i + 1, prefix, rest - c * c, dot_rest - a[i] * c, parity)
            prefix.pop()

    for parity in (0, 1):
        yield from walk(0, [], square_sum, dot4, parity)


def search_rank2_embedding(M, N, P, window, budget=None):
    """Exhaustive search for ``[[M, N], [N, P]] -> E8``.

    ``v_1`` runs over Weyl-canonical vectors of square ``M`` and ``v_2``
    over all vectors with the right square and product.

    Parameters
    ----------
    M, N, P : int
        Entries of a positive definite even Gram matrix.

    window : tuple (int, int)
        Accepted range of the orthogonal root count.

    budget : int, default=None
        Node budget, see :func:`hkcert.base.get_search_budget`.

    Returns
    -------
    result : tuple (Embedding, RootCount) or None
        None when the space is exhausted or the budget runs out.
    """
    M, N, P = (check_integer(x, name) for x, name in ((M, "M"), (N, "N"), (P, "P")))
    gram = gram_mnp(M, N, P)
    counter = _Budget(budget)
    try:
        for c1 in iter_canonical_tails(4 * M, 8):
            v1 = E8Vector(c1)
            for c2 in _iter_partners(v1, 4 * P, 4 * N, counter):
                v2 = E8Vector(c2)
                count = _accept((v1, v2), window)
                if count is not None:
                    logger.debug(f"exhaustive search found {v1}, {v2}")
                    return (
                        Embedding(gram, (v1, v2), "exhaustive", {"window": list(window)}),
                        count,
                    )
    except _BudgetExhausted:
        logger.debug(f"search budget exhausted for M={M} N={N} P={P}")
    return None


def search_og10_embedding(t, window=OG10_WINDOW, budget=None):
    """Search ``v_3`` for the OG10 lattice with ``v_1 = e_2 - e_1`` and
    ``v_2 = e_3 - e_2`` fixed.

    ``v_3`` has doubled coordinates ``(c, c, c + 2, c_4, .., c_8)`` with the
    tail in Weyl-canonical form. Smaller ``|c|`` is tried first.

    Returns
    -------
    result : tuple (Embedding, RootCount) or None
    """
    t = check_positive_int(t, "t")
    gram = gram_qt_og10(t)
    v1 = E8Vector((-2, 2, 0, 0, 0, 0, 0, 0))
    v2 = E8Vector((0, -2, 2, 0, 0, 0, 0, 0))
    counter = _Budget(budget)
    limit = math.isqrt(8 * t)
    order = sorted(range(-limit, limit + 1), key=lambda c: (abs(c), -c))
    try:
        for c in order:
            rest = 8 * t - 2 * c * c - (c + 2) ** 2
            if rest < 0:
                continue
            for tail in iter_canonical_tails(rest, 5, c % 2, 3 * c + 2):
                counter.spend()
                v3 = E8Vector((c, c, c + 2) + tail)
                count = _accept((v1, v2, v3), window)
                if count is not None:
                    logger.debug(f"og10 t={t}: search found v3={v3}")
                    return Embedding(gram, (v1, v2, v3), "search", {"t": t}), count
    except _BudgetExhausted:
        logger.debug(f"og10 t={t}: search budget exhausted")
    return None
