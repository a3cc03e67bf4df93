"""The E8 lattice in doubled coordinates, its 240 roots, primitivity of
sublattices and the brute-force root counting oracle."""

# License: MIT

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
import sympy
from sympy.utilities.iterables import multiset_permutations

from ..exceptions import DependentVectors, NotInVminus, ZeroVector
from ..utils._validation_param import check_int_vector, check_positive_int
from ._snf import smith_normal_form

logger = logging.getLogger(__name__)


def is_in_e8(doubled):
    """Whether doubled coordinates ``c_i = 2 x_i`` describe a vector of E8.

    All ``c_i`` share one parity and ``sum(c_i) = 0 mod 4``.
    """
    try:
        c = check_int_vector(doubled, "doubled", 8)
    except (TypeError, ValueError):
        return False
    parity = c[0] % 2
    return all(x % 2 == parity for x in c) and sum(c) % 4 == 0


@dataclass(frozen=True, order=True)
class E8Vector:
    """Element of E8 stored with doubled coordinates.

    Parameters
    ----------
    doubled : sequence of 8 int
        ``2 x_i`` for the coordinates ``x_i`` of the vector.
    """

    doubled: tuple

    def __post_init__(self):
        c = check_int_vector(self.doubled, "doubled", 8)
        if not is_in_e8(c):
            raise ValueError(f"{c} (doubled coordinates) is not a vector of E8.")
        object.__setattr__(self, "doubled", c)

    @classmethod
    def from_coordinates(cls, coordinates):
        """Build from actual coordinates (ints, Fractions or strings like "1/2")."""
        coordinates = tuple(Fraction(x) for x in coordinates)
        doubled = []
        for x in coordinates:
            y = 2 * x
            if y.denominator != 1:
                raise ValueError(f"Coordinate {x} is not a half-integer.")
            doubled.append(int(y))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls):
        return cls((0,) * 8)

    @property
    def coordinates(self):
        return tuple(Fraction(c, 2) for c in self.doubled)

    @property
    def is_integral(self):
        return all(c % 2 == 0 for c in self.doubled)

    @property
    def norm(self):
        return self.dot(self)

    def dot(self, other):
        return sum(c * d for c, d in zip(self.doubled, other.doubled)) // 4

    def __add__(self, other):
        return E8Vector(tuple(c + d for c, d in zip(self.doubled, other.doubled)))

    def __sub__(self, other):
        return E8Vector(tuple(c - d for c, d in zip(self.doubled, other.doubled)))

    def __neg__(self):
        return E8Vector(tuple(-c for c in self.doubled))

    def __mul__(self, k):
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return E8Vector(tuple(k * c for c in self.doubled))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.doubled)

    def __str__(self):
        if self.is_integral:
            return "(" + ", ".join(str(c // 2) for c in self.doubled) + ")"
        return "1/2(" + ", ".join(str(c) for c in self.doubled) + ")"


def e8_vector(*coordinates):
    """Shorthand for :meth:`E8Vector.from_coordinates`."""
    return E8Vector.from_coordinates(coordinates)


# Simple roots: 1/2(e1-e2-...-e7+e8), e1+e2, e2-e1, e3-e2, ..., e7-e6.
_BASIS_DOUBLED = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


def e8_basis():
    """The fixed unimodular Z-basis of E8 used for coordinate solves."""
    return tuple(E8Vector(row) for row in _BASIS_DOUBLED)


@lru_cache(maxsize=None)
def _basis_inverse():
    return sympy.Matrix(_BASIS_DOUBLED).inv()


def coordinates_in_basis(v):
    """Integer coefficients of ``v`` in :func:`e8_basis`."""
    row = sympy.Matrix([list(v.doubled)]) * _basis_inverse()
    coefficients = []
    for x in row:
        if not x.is_integer:
            raise ValueError(f"{v} has non-integral basis coordinates.")
        coefficients.append(int(x))
    return tuple(coefficients)


@lru_cache(maxsize=None)
def all_roots():
    """The 240 roots of E8, sorted in decreasing doubled-coordinate order.

    Returns
    -------
    roots : tuple of E8Vector
        112 integral roots ``+-e_i +- e_j`` and 128 fractional roots
        ``1/2 sum +-e_i`` with an even number of minus signs.
    """
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            c = [0] * 8
            c[i], c[j] = si, sj
            roots.append(tuple(c))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(signs)
    return tuple(E8Vector(c) for c in sorted(roots, reverse=True))


# |r . v| <= 16 max|v_i| for doubled roots, so int64 products stay exact below this
_INT64_SAFE = 2**58


@lru_cache(maxsize=None)
def _root_table():
    table = np.array([r.doubled for r in all_roots()], dtype=np.int64)
    table.setflags(write=False)
    return table


def _root_products(v):
    """Doubled products of every root with ``v`` (four times the true ones)."""
    table = _root_table()
    if max(abs(c) for c in v.doubled) < _INT64_SAFE:
        return table @ np.array(v.doubled, dtype=np.int64)
    return table.astype(object) @ np.array(v.doubled, dtype=object)


@dataclass(frozen=True)
class RootCount:
    """Roots of E8 orthogonal to a set of vectors.

    Attributes
    ----------
    integral : int
        Number of orthogonal roots with integer coordinates.

    fractional : int
        Number of orthogonal roots with half-integer coordinates.

    roots : tuple of E8Vector
        The roots themselves, in the order of :func:`all_roots`.
    """

    integral: int
    fractional: int
    roots: tuple = field(default=(), compare=False, repr=False)

    @property
    def total(self):
        return self.integral + self.fractional

    def as_dict(self):
        return {
            "integral": self.integral,
            "fractional": self.fractional,
            "total": self.total,
        }


def roots_orthogonal_to(vs):
    """Count the roots of E8 orthogonal to every vector of ``vs``.

    Parameters
    ----------
    vs : sequence of E8Vector

    Returns
    -------
    count : RootCount
    """
    vs = tuple(vs)
    mask = np.ones(len(_root_table()), dtype=bool)
    for v in vs:
        mask &= _root_products(v) == 0
    roots = tuple(r for r, keep in zip(all_roots(), mask) if keep)
    integral = sum(1 for r in roots if r.is_integral)
    logger.debug(f"{len(roots)} roots orthogonal to {len(vs)} vector(s)")
    return RootCount(integral=integral, fractional=len(roots) - integral, roots=roots)


def is_primitive_embedding(vs):
    """Whether ``vs`` spans a primitive sublattice of E8.

    The images are written in :func:`e8_basis`; the span is primitive iff
    every Smith invariant factor of the coordinate matrix equals one.

    Raises
    ------
    DependentVectors
        If the vectors are linearly dependent.
    """
    vs = tuple(vs)
    if not vs:
        return True
    coordinates = [coordinates_in_basis(v) for v in vs]
    if sympy.Matrix(coordinates).rank() < len(vs):
        raise DependentVectors(f"The {len(vs)} vectors are linearly dependent.")
    diag = smith_normal_form(coordinates).diag
    return all(d == 1 for d in diag)


def is_in_vminus(v):
    """Membership in ``V_- = <e_i - e_{i+4} : i = 1..4>``."""
    c = v.doubled
    return v.is_integral and all(c[i + 4] == -c[i] for i in range(4))


def is_in_vplus(v):
    """Membership in ``V_+ = <e_i + e_{i+4} : i = 1..4>``."""
    c = v.doubled
    return v.is_integral and all(c[i + 4] == c[i] for i in range(4))


@lru_cache(maxsize=None)
def vminus_roots():
    """The 8 roots ``+-(e_i - e_{i+4})`` of ``V_-``."""
    return tuple(r for r in all_roots() if is_in_vminus(r))


def roots_in_vminus_orthogonal_to(v1):
    """Number of roots of ``V_-`` orthogonal to ``v1``.

    Raises
    ------
    ZeroVector
        If ``v1`` is zero.

    NotInVminus
        If ``v1`` does not lie in ``V_-``.
    """
    if not v1:
        raise ZeroVector("v1 must be nonzero.")
    if not is_in_vminus(v1):
        raise NotInVminus(f"{v1} is not in V_-.")
    return sum(1 for r in vminus_roots() if r.dot(v1) == 0)


def _iter_tails(length, norm4, parity, cap):
    """Non-increasing non-negative tuples of ``length`` integers of the given
    parity, each at most ``cap``, with squares summing to ``norm4``."""
    if length == 0:
        if norm4 == 0:
            yield ()
        return
    # smallest possible contribution of the remaining entries
    floor_rest = (length - 1) * parity
    top = min(cap, math.isqrt(norm4 - floor_rest) if norm4 >= floor_rest else -1)
    for c in range(top, -1, -1):
        if c % 2 != parity:
            continue
        rest = norm4 - c * c
        if rest > (length - 1) * c * c:
            break
        yield from ((c,) + tail for tail in _iter_tails(length - 1, rest, parity, c))


def iter_canonical_tails(square_sum, length, parity=None, prefix_sum=0):
    """Doubled coordinate tails in Weyl-canonical form.

    Yields tuples ``(c_1 >= ... >= c_{length-1} >= |c_length|)`` of one
    parity with ``sum c_i^2 = square_sum``. Only the last entry may be
    negative. The ``sum = 0 mod 4`` condition of E8 depends on the
    coordinates outside the tail, so tails whose sum is not
    ``-prefix_sum mod 4`` are skipped.

    Parameters
    ----------
    square_sum : int
        Sum of the squares of the doubled coordinates.

    length : int

    parity : {0, 1}, default=None
        Restrict to one parity; both when None.

    prefix_sum : int, default=0
        Sum of the doubled coordinates preceding the tail.
    """
    parities = (0, 1) if parity is None else (parity,)
    for parity in parities:
        for tail in _iter_tails(length, square_sum, parity, square_sum):
            variants = [tail]
            if tail and tail[-1] != 0:
                variants.append(tail[:-1] + (-tail[-1],))
            for variant in variants:
                if (prefix_sum + sum(variant)) % 4 == 0:
                    yield variant


def iter_canonical_vectors_of_norm(norm, length=8, prefix_sum=0):
    """Canonical doubled tails whose coordinates square to ``norm``."""
    return iter_canonical_tails(4 * norm, length, prefix_sum=prefix_sum)


def iter_vectors_of_norm(norm):
    """All vectors of E8 with ``v.v = norm``, in a deterministic order.

    Every Weyl-canonical tail is expanded into its distinct signed
    permutations; those whose coordinate sum is not ``0 mod 4`` are dropped.
    The number of vectors grows quickly, so this is meant for small norms.
    """
    norm = check_positive_int(norm, "norm", 0)
    seen = set()
    for tail in iter_canonical_vectors_of_norm(norm):
        magnitudes = sorted((abs(c) for c in tail), reverse=True)
        for perm in multiset_permutations(magnitudes):
            nonzero = [i for i, c in enumerate(perm) if c]
            for signs in itertools.product((1, -1), repeat=len(nonzero)):
                c = list(perm)
                for i, s in zip(nonzero, signs):
                    c[i] *= s
                c = tuple(c)
                if c not in seen and sum(c) % 4 == 0:
                    seen.add(c)
                    yield E8Vector(c)
