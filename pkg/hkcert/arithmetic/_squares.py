"""Constrained sums of three and four squares.

The exception tables below are unconditional for inputs under
:data:`hkcert.base.STAR_BOUND`. Above it they depend on an unresolved
integer, so every public search refuses such inputs.
"""

# License: MIT

import logging
import math
from dataclasses import dataclass
from functools import reduce

from ..base import STAR_BOUND
from ..exceptions import StarDomainExceeded
from ..utils._validation_param import check_in_choices, check_positive_int

logger = logging.getLogger(__name__)

THREE_POSITIVE_COPRIME_EXCEPTIONS = frozenset({1, 2, 5, 10, 13, 25, 37, 58, 85, 130})

THREE_DISTINCT_COPRIME_EXCEPTIONS = frozenset(
    {1, 2, 3, 6, 9, 11, 18, 19, 22, 27, 33, 43, 51, 57, 67,
     99, 102, 123, 163, 177, 187, 267, 627}
)  # fmt: skip

# odd n only
FOUR_DISTINCT_POSITIVE_COPRIME_EXCEPTIONS = frozenset(range(1, 38, 2)) | frozenset(
    {41, 43, 45, 47, 49, 55, 59, 61, 67, 69, 73, 77, 83, 89, 97, 101, 103, 115, 157}
)

# odd n only
FOUR_POSITIVE_COPRIME_EXCEPTIONS = frozenset({1, 3, 5, 9, 11, 17, 29, 41})

# even n such that neither n nor n - 2 is a sum of three distinct coprime squares
N_OR_N_MINUS_2_EXCEPTIONS = frozenset({2, 4, 6, 8, 18, 20, 22, 24, 102, 104})

FOUR_SQUARES_MODES = ("coprime", "gamma1", "k32")


@dataclass(frozen=True)
class SquaresDecomposition:
    """``target = sum(p ** 2 for p in parts)`` with recorded constraint flags.

    Attributes
    ----------
    parts : tuple of int
        Non-negative parts. Descending unless ``descending`` is False, in
        which case the order carries meaning for the caller.

    target : int
        The represented integer.

    pairwise_distinct, coprime, all_positive : bool
        Constraint flags, computed from ``parts`` at construction.

    descending : bool, default=True
    """

    parts: tuple
    target: int
    pairwise_distinct: bool
    coprime: bool
    all_positive: bool
    descending: bool = True

    @classmethod
    def from_parts(cls, parts, descending=True):
        parts = tuple(int(p) for p in parts)
        return cls(
            parts=parts,
            target=sum(p * p for p in parts),
            pairwise_distinct=len(set(parts)) == len(parts),
            coprime=reduce(math.gcd, parts, 0) == 1,
            all_positive=all(p > 0 for p in parts),
            descending=descending,
        )

    def verify(self):
        """Re-check every recorded field against ``parts``."""
        if any(p < 0 for p in self.parts):
            return False
        if self.descending and list(self.parts) != sorted(self.parts, reverse=True):
            return False
        return self == SquaresDecomposition.from_parts(self.parts, self.descending)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _check_star(n, name="n"):
    n = check_positive_int(n, name)
    if n >= STAR_BOUND:
        raise StarDomainExceeded(
            f"'{name}'={n} is >= {STAR_BOUND}; the exception lists are not "
            f"unconditional there."
        )
    return n


def is_sum_of_three_squares(n):
    """Legendre: ``n >= 0`` is a sum of three squares iff it is not
    ``4^a (8b + 7)``."""
    n = check_positive_int(n, "n", 0)
    while n and n % 4 == 0:
        n //= 4
    return n % 8 != 7


def iter_three_squares(n, distinct=False, coprime=False, positive=False):
    """Yield ``(a, b, c)`` with ``a >= b >= c >= 0`` and ``a^2 + b^2 + c^2 = n``
    in lexicographically decreasing order.

    Parameters
    ----------
    n : int
        Non-negative target.

    distinct : bool, default=False
        Require ``a > b > c``.

    coprime : bool, default=False
        Require ``gcd(a, b, c) = 1``.

    positive : bool, default=False
        Require ``c >= 1``.
    """
    n = check_positive_int(n, "n", 0)
    a = math.isqrt(n)
    while 3 * a * a >= n:
        rest_a = n - a * a
        b = min(a, math.isqrt(rest_a))
        while 2 * b * b >= rest_a:
            rest_b = rest_a - b * b
            c = math.isqrt(rest_b)
            if c * c == rest_b and c <= b:
                ok = not distinct or a > b > c
                ok = ok and (not positive or c > 0)
                ok = ok and (not coprime or math.gcd(a, b, c) == 1)
                if ok:
                    yield (a, b, c)
            b -= 1
            if b < 0:
                break
        a -= 1
        if a < 0:
            break


def _first(iterator):
    return next(iterator, None)


def three_squares_distinct_coprime(n, enumerate_all=False):
    """Three pairwise distinct coprime squares summing to ``n``.

    Parameters
    ----------
    n : int
        Positive target below the star bound.

    enumerate_all : bool, default=False
        Return every decomposition instead of the canonical one.

    Returns
    -------
    decomposition : SquaresDecomposition or None, or list of them
        The canonical pick is the lexicographically largest
        ``a > b > c >= 0``.
    """
    n = _check_star(n)
    if n % 8 in (0, 4, 7):
        return [] if enumerate_all else None
    found = (
        SquaresDecomposition.from_parts(p)
        for p in iter_three_squares(n, distinct=True, coprime=True)
    )
    if enumerate_all:
        return list(found)
    result = _first(found)
    logger.debug(f"three distinct coprime squares of {n}: {result and result.parts}")
    return result


def three_squares_positive_coprime(n):
    """Lexicographically largest ``a >= b >= c >= 1`` with ``gcd = 1``."""
    n = _check_star(n)
    if n % 8 in (0, 4, 7):
        return None
    return _first(
        SquaresDecomposition.from_parts(p)
        for p in iter_three_squares(n, coprime=True, positive=True)
    )


def three_distinct_coprime_of_n_or_n_minus_2(n):
    """Write ``n`` or else ``n - 2`` as three distinct coprime squares.

    Returns
    -------
    result : tuple (int, SquaresDecomposition) or None
        The chosen target and its decomposition.
    """
    n = _check_star(n)
    if n % 2:
        raise ValueError(f"'n' must be even, got {n}.")
    for target in (n, n - 2):
        if target < 1:
            continue
        decomposition = three_squares_distinct_coprime(target)
        if decomposition is not None:
            return target, decomposition
    return None


def iter_four_squares(n, positive=False, max_zeros=4):
    """Yield descending ``(a, b, c, e)`` with ``a^2 + b^2 + c^2 + e^2 = n``
    in lexicographically decreasing order."""
    n = check_positive_int(n, "n", 0)
    low = 1 if positive else 0
    for a in range(math.isqrt(n), -1, -1):
        if 4 * a * a < n:
            break
        rest_a = n - a * a
        for b in range(min(a, math.isqrt(rest_a)), low - 1, -1):
            if 3 * b * b < rest_a:
                break
            rest_b = rest_a - b * b
            for c in range(min(b, math.isqrt(rest_b)), low - 1, -1):
                if 2 * c * c < rest_b:
                    break
                rest_c = rest_b - c * c
                e = math.isqrt(rest_c)
                if e * e == rest_c and low <= e <= c:
                    parts = (a, b, c, e)
                    if sum(p == 0 for p in parts) <= max_zeros:
                        yield parts


def four_squares_distinct_positive_coprime(n):
    """Lexicographically largest ``a > b > c > e >= 1`` with ``gcd = 1``."""
    n = _check_star(n)
    for parts in iter_four_squares(n, positive=True):
        if len(set(parts)) == 4 and math.gcd(*parts) == 1:
            return SquaresDecomposition.from_parts(parts)
    return None


def _four_coprime(d):
    # descending, at most one zero
    if d % 4 == 0:
        return None
    for parts in iter_four_squares(d, max_zeros=1):
        if math.gcd(*parts) == 1:
            return SquaresDecomposition.from_parts(parts)
    return None


_GAMMA1_NO_ZERO_X1 = frozenset({10, 13, 25, 37, 58, 85, 130})


def _gamma1_from_triple(x1, triple):
    # x4 takes the smallest odd part, x2 >= x3 the other two
    odd = [i for i, p in enumerate(triple) if p % 2]
    if not odd:
        return None
    i4 = odd[-1]
    x2, x3 = (p for i, p in enumerate(triple) if i != i4)
    return (x1, x2, x3, triple[i4])


def _four_gamma1(d):
    if d < 3 or d % 4 == 0:
        return None
    if d == 5:
        return SquaresDecomposition.from_parts((0, 0, 2, 1), descending=False)
    if d % 8 != 7 and d not in _GAMMA1_NO_ZERO_X1:
        triple = _first(iter_three_squares(d, coprime=True, positive=True))
        if triple is not None:
            return SquaresDecomposition.from_parts(
                _gamma1_from_triple(0, triple), descending=False
            )
    top = math.isqrt(d - 3)
    for x1 in range(top - top % 2, 1, -2):
        rest = d - x1 * x1
        for triple in iter_three_squares(rest, positive=True):
            if math.gcd(x1, *triple) != 1:
                continue
            parts = _gamma1_from_triple(x1, triple)
            if parts is not None:
                return SquaresDecomposition.from_parts(parts, descending=False)
    return None


_K32_THREE_SQUARE_ESCAPES = frozenset({9, 11, 17, 29, 41})


def _four_k32(r):
    for parts in iter_four_squares(r, positive=True):
        if math.gcd(*parts) == 1:
            return SquaresDecomposition.from_parts(parts)
    if r in _K32_THREE_SQUARE_ESCAPES:
        triple = _first(iter_three_squares(r, coprime=True, positive=True))
        return SquaresDecomposition.from_parts(triple + (0,))
    return None


def four_squares_constrained(d, mode):
    """Four squares summing to ``d`` under one of three constraint sets.

    Parameters
    ----------
    d : int
        Positive target below the star bound.

    mode : {"coprime", "gamma1", "k32"}
        - ``"coprime"``: descending, coprime, at most one zero part.
        - ``"gamma1"``: ordered ``(x1, x2, x3, x4)`` with ``x1`` even,
          ``x2 >= x3``, ``x2, x3, x4 > 0``, ``x4`` odd and gcd one. ``x1 = 0``
          is preferred when possible; ``d = 5`` gives ``(0, 0, 2, 1)``.
        - ``"k32"``: descending, coprime and positive, except that
          ``d`` in ``{9, 11, 17, 29, 41}`` uses a zero last part.

    Returns
    -------
    decomposition : SquaresDecomposition or None
    """
    d = _check_star(d, "d")
    mode = check_in_choices(mode, "mode", FOUR_SQUARES_MODES)
    result = {"coprime": _four_coprime, "gamma1": _four_gamma1, "k32": _four_k32}[
        mode
    ](d)
    logger.debug(f"four squares of {d} in mode {mode}: {result and result.parts}")
    return result


def brute_force_three_squares(n, distinct=False, coprime=False, positive=False):
    """All descending decompositions of ``n`` by a plain triple loop.

    Used as an oracle in tests; slow.
    """
    out = []
    r = math.isqrt(n)
    for a in range(r, -1, -1):
        for b in range(a, -1, -1):
            for c in range(b, -1, -1):
                if a * a + b * b + c * c != n:
                    continue
                if distinct and not a > b > c:
                    continue
                if positive and c == 0:
                    continue
                if coprime and math.gcd(a, b, c) != 1:
                    continue
                out.append((a, b, c))
    return out
