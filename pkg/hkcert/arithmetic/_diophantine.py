"""Parity-constrained linear Diophantine equations in three unknowns.

Solves ``a1 x1 + a2 x2 + a3 x3 = K`` where either every ``x_i`` is odd
(``K`` even) or exactly one ``x_i`` is even (``K`` odd), returning the
solution of smallest Euclidean norm.
"""

# License: MIT

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy.core.intfunc import igcdex

from ..exceptions import BadParityMode, DivisibilityViolation, NoSolution
from ..utils._validation_param import check_int_vector, check_integer

logger = logging.getLogger(__name__)


class ParityMode(Enum):
    """Parity pattern of a solution."""

    ALL_ODD = "all_odd"
    ONE_EVEN = "one_even"

    @classmethod
    def for_rhs(cls, K):
        """The only mode compatible with the right-hand side ``K``."""
        return cls.ALL_ODD if check_integer(K, "K") % 2 == 0 else cls.ONE_EVEN


@dataclass(frozen=True)
class DiophantineSolution:
    """Minimal-norm solution of a parity-constrained equation.

    Attributes
    ----------
    xs : tuple of int

    norm : int
        ``sum(x ** 2 for x in xs)``.

    max_abs : int
        ``max(abs(x) for x in xs)``.

    bound : int
        :func:`bfrt_bound` of the transformed equation.

    mode : ParityMode
    """

    xs: tuple
    norm: int
    max_abs: int
    bound: int
    mode: ParityMode

    def satisfies(self, alphas, K):
        if sum(a * x for a, x in zip(alphas, self.xs)) != K:
            return False
        if any(a == 0 and x != 1 for a, x in zip(alphas, self.xs)):
            return False
        n_even = sum(x % 2 == 0 for x in self.xs)
        return n_even == (0 if self.mode is ParityMode.ALL_ODD else 1)


def _check_alphas(alphas):
    alphas = check_int_vector(alphas, "alphas", 3)
    if any(a < 0 for a in alphas):
        raise ValueError(f"'alphas' must be non-negative, got {alphas}.")
    if math.gcd(*alphas) != 1:
        raise DivisibilityViolation(f"'alphas' {alphas} must be coprime.")
    if sum(a % 2 == 0 for a in alphas) != 1:
        raise BadParityMode(f"Exactly one of {alphas} must be even.")
    return alphas


def _patterns(alphas, mode):
    """Residues ``p`` with ``x = 2y + p`` for each admissible parity pattern."""
    if mode is ParityMode.ALL_ODD:
        return [(1, 1, 1)]
    # the even unknown sits on an odd coefficient
    return [
        tuple(0 if j == i else 1 for j in range(3))
        for i, a in enumerate(alphas)
        if a % 2
    ]


def _transformed_rhs(alphas, K, pattern):
    return (K - sum(a * p for a, p in zip(alphas, pattern))) // 2


def bfrt_bound(alphas, K, transformed=False, mode=None):
    """Bound on the smallest solution of the transformed equation.

    Any solvable ``a . y = K'`` with ``gcd(a) = 1`` has a solution with
    ``max |y_i| <= max(|a_1|, |a_2|, |a_3|, |K'|)``.

    Parameters
    ----------
    alphas : sequence of 3 int

    K : int
        Right-hand side, already transformed when ``transformed=True``.

    transformed : bool, default=False
        Otherwise ``K`` is rewritten through ``x = 2y + p``: all odd for
        even ``K``, first odd coefficient's unknown even for odd ``K``.

    mode : ParityMode, default=None
        Defaults to :meth:`ParityMode.for_rhs`.

    Returns
    -------
    bound : int
    """
    alphas = check_int_vector(alphas, "alphas", 3)
    K = check_integer(K, "K")
    if not transformed:
        mode = ParityMode.for_rhs(K) if mode is None else mode
        patterns = _patterns(alphas, mode)
        if not patterns:
            raise BadParityMode(f"No parity pattern fits {alphas} with K={K}.")
        K = _transformed_rhs(alphas, K, patterns[0])
    return max(max(abs(a) for a in alphas), abs(K))


def _gauss_reduce(u, v):
    """Lagrange-Gauss reduction of a basis of a rank-2 lattice."""

    def dot(x, y):
        return sum(a * b for a, b in zip(x, y))

    if dot(u, u) > dot(v, v):
        u, v = v, u
    while True:
        q = round(Fraction(dot(u, v), dot(u, u)))
        v = tuple(b - q * a for a, b in zip(u, v))
        if dot(v, v) >= dot(u, u):
            return u, v
        u, v = v, u


def _isqrt_ceil(n):
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _int_range(a, b, c, limit):
    """Integers ``z`` with ``a z^2 + b z + c <= limit`` (``a > 0``)."""
    disc = b * b - 4 * a * (c - limit)
    if disc < 0:
        return range(0)
    root = _isqrt_ceil(disc)
    low = (-b - root) // (2 * a) - 1
    high = (-b + root) // (2 * a) + 1
    return range(low, high + 1)


def _lattice_coset(alphas, K, pattern):
    """Base point and generators of ``{x = 2y + p : a . y = K'}``."""
    K_prime = _transformed_rhs(alphas, K, pattern)
    free = [i for i in range(3) if alphas[i] != 0]
    if len(free) == 2:
        i, j = free
        s, t, _ = igcdex(alphas[i], alphas[j])
        y = [0, 0, 0]
        y[i], y[j] = int(s) * K_prime, int(t) * K_prime
        k = [0, 0, 0]
        k[i], k[j] = alphas[j], -alphas[i]
        gens = [tuple(k)]
    else:
        a1, a2, a3 = alphas
        s, t, g = (int(x) for x in igcdex(a1, a2))
        s2, t2, _ = (int(x) for x in igcdex(g, a3))
        y = [K_prime * s * s2, K_prime * t * s2, K_prime * t2]
        k1 = (a2 // g, -a1 // g, 0)
        k2 = (a3 * s, a3 * t, -g)
        gens = list(_gauss_reduce(k1, k2))
    base = tuple(2 * yi + pi for yi, pi in zip(y, pattern))
    gens = [tuple(2 * c for c in k) for k in gens]
    return base, gens


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _shift(x, k, z):
    return tuple(a + z * b for a, b in zip(x, k))


def _babai(base, gens):
    """Round the base point towards the origin along the generators."""
    if len(gens) == 1:
        (k,) = gens
        z = round(Fraction(-_dot(base, k), _dot(k, k)))
        return _shift(base, k, z)
    k1, k2 = gens
    g11, g12, g22 = _dot(k1, k1), _dot(k1, k2), _dot(k2, k2)
    b1, b2 = -_dot(base, k1), -_dot(base, k2)
    det = g11 * g22 - g12 * g12
    z1 = round(Fraction(b1 * g22 - b2 * g12, det))
    z2 = round(Fraction(g11 * b2 - g12 * b1, det))
    return _shift(_shift(base, k1, z1), k2, z2)


def _points_within(base, gens, limit):
    """Every ``base + sum z_i gens_i`` of squared norm at most ``limit``."""
    if len(gens) == 1:
        (k,) = gens
        a, b, c = _dot(k, k), 2 * _dot(base, k), _dot(base, base)
        for z in _int_range(a, b, c, limit):
            x = _shift(base, k, z)
            if _dot(x, x) <= limit:
                yield x
        return
    k1, k2 = gens
    a = _dot(k1, k1)
    # 4a |base + v k2|^2 - (2 k1.(base + v k2))^2 is quadratic in v
    g12, g22 = _dot(k1, k2), _dot(k2, k2)
    bk1, bk2, bb = _dot(base, k1), _dot(base, k2), _dot(base, base)
    qa = 4 * a * g22 - 4 * g12 * g12
    qb = 8 * a * bk2 - 8 * bk1 * g12
    qc = 4 * a * bb - 4 * bk1 * bk1
    for v in _int_range(qa, qb, qc, 4 * a * limit):
        w = _shift(base, k2, v)
        for x in _points_within(w, [k1], limit):
            yield x


def solve_parity(alphas, K, mode=None):
    """Minimal-norm solution of ``alphas . x = K`` under a parity mode.

    A zero coefficient pins its unknown to 1. Among all solutions of
    smallest ``sum(x_i^2)`` the lexicographically largest is returned.

    Parameters
    ----------
    alphas : sequence of 3 int
        Non-negative, coprime, exactly one even.

    K : int

    mode : ParityMode, default=None
        Must match the parity of ``K``. Inferred when omitted.

    Returns
    -------
    solution : DiophantineSolution

    Raises
    ------
    BadParityMode
        If ``mode`` disagrees with ``K`` or the coefficients have the wrong
        parities.
    """
    alphas = _check_alphas(alphas)
    K = check_integer(K, "K")
    expected = ParityMode.for_rhs(K)
    if mode is None:
        mode = expected
    elif not isinstance(mode, ParityMode):
        mode = ParityMode(mode)
    if mode is not expected:
        raise BadParityMode(f"Mode {mode.value} does not match K={K}.")

    cosets = [_lattice_coset(alphas, K, p) for p in _patterns(alphas, mode)]
    witnesses = [_babai(base, gens) for base, gens in cosets]
    limit = min(_dot(w, w) for w in witnesses)
    best = None
    for base, gens in cosets:
        for x in _points_within(base, gens, limit):
            key = (_dot(x, x), tuple(-c for c in x))
            if best is None or key < best[0]:
                best = (key, x)
    if best is None:
        raise NoSolution(f"No solution of {alphas} . x = {K} in mode {mode.value}.")
    xs = best[1]
    solution = DiophantineSolution(
        xs=xs,
        norm=_dot(xs, xs),
        max_abs=max(abs(x) for x in xs),
        bound=bfrt_bound(alphas, K, mode=mode),
        mode=mode,
    )
    if not solution.satisfies(alphas, K):
        raise NoSolution(f"Solution {xs} fails {alphas} . x = {K}.")
    logger.debug(f"solve {alphas} . x = {K}: {xs} (norm {solution.norm})")
    return solution
