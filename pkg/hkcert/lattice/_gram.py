"""Gram matrices of even lattices and the specific constructors used by the
certifier."""

# License: MIT

import logging
import math
from dataclasses import dataclass
from functools import reduce

import sympy

from ..exceptions import DivisibilityViolation, InvalidGramMatrix, ZeroVector
from ..utils._validation_param import (
    check_int_vector,
    check_integer,
    check_positive_int,
)
from ._snf import smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric even integer matrix with nonzero determinant.

    Parameters
    ----------
    entries : sequence of sequences of int
        Square matrix. Stored as a tuple of tuples of python ints.
    """

    entries: tuple

    def __post_init__(self):
        try:
            rows = tuple(
                check_int_vector(row, f"entries[{i}]")
                for i, row in enumerate(self.entries)
            )
        except TypeError as exc:
            raise InvalidGramMatrix(str(exc)) from exc
        dim = len(rows)
        if dim == 0 or any(len(row) != dim for row in rows):
            raise InvalidGramMatrix("A Gram matrix must be square and non-empty.")
        for i in range(dim):
            if rows[i][i] % 2:
                raise InvalidGramMatrix(
                    f"Diagonal entry {rows[i][i]} at position {i} is odd; "
                    f"the lattice must be even."
                )
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InvalidGramMatrix(
                        f"Entries ({i},{j}) and ({j},{i}) differ: "
                        f"{rows[i][j]} != {rows[j][i]}."
                    )
        object.__setattr__(self, "entries", rows)
        if self.det == 0:
            raise InvalidGramMatrix("The Gram matrix is degenerate.")

    @property
    def dim(self):
        return len(self.entries)

    @property
    def det(self):
        return int(sympy.Matrix(self.entries).det())

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def tolist(self):
        return [list(row) for row in self.entries]

    def negated(self):
        """Gram matrix of the (-1)-twist."""
        return GramMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def apply(self, v):
        """The vector ``g . v``."""
        v = check_int_vector(v, "v", self.dim)
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.entries)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Finite abelian group ``L^vee / L``.

    Attributes
    ----------
    elementary_divisors : tuple of int
        Smith invariant factors larger than one, each dividing the next.

    order : int
        ``|det|`` of the Gram matrix.
    """

    elementary_divisors: tuple
    order: int

    @property
    def is_cyclic(self):
        return len(self.elementary_divisors) <= 1

    @property
    def n_generators(self):
        return len(self.elementary_divisors)


def discriminant_group(gram):
    """Discriminant group of the lattice with Gram matrix ``gram``."""
    diag = smith_normal_form(gram.entries).diag
    divisors = tuple(abs(d) for d in diag if abs(d) > 1)
    order = abs(gram.det)
    if reduce(lambda x, y: x * y, divisors, 1) != order:
        raise InvalidGramMatrix("Smith form disagrees with the determinant.")
    return DiscriminantGroup(elementary_divisors=divisors, order=order)


def is_positive_definite(gram):
    """All leading principal minors are positive (Sylvester)."""
    m = sympy.Matrix(gram.entries)
    return all(m[:k, :k].det() > 0 for k in range(1, gram.dim + 1))


def divisibility(v, gram):
    """Divisibility of ``v``: the positive generator of ``(v, L)``.

    Parameters
    ----------
    v : sequence of int
        Coordinates in the basis of ``gram``.

    gram : GramMatrix

    Returns
    -------
    div : int
    """
    v = check_int_vector(v, "v", gram.dim)
    if not any(v):
        raise ZeroVector("The divisibility of the zero vector is undefined.")
    return math.gcd(*gram.apply(v))


def gram_mnp(M, N, P):
    """The rank-2 Gram matrix ``[[M, N], [N, P]]``."""
    M, N, P = (check_integer(x, name) for x, name in ((M, "M"), (N, "N"), (P, "P")))
    return GramMatrix(((M, N), (N, P)))


def gram_qh_k3n(n, gamma, a, t):
    """Gram matrix of ``Q_h`` for K3^[n] type in the basis ``z_1, z_2``.

    Parameters
    ----------
    n : int
        ``n >= 2``.

    gamma : int
        Divisibility, must divide ``2(n-1)``.

    a : int
        Component label, coprime to ``gamma`` (``a = 0`` only for
        ``gamma = 1``).

    t : int
        Half the square of the ``e + tf`` part, ``t >= 1``.

    Returns
    -------
    gram : GramMatrix
        ``[[2(n-1), -2a(n-1)/gamma], [-2a(n-1)/gamma, 2t]]``.
    """
    n = check_positive_int(n, "n", 2)
    gamma = check_positive_int(gamma, "gamma")
    a = check_positive_int(a, "a", 0)
    t = check_positive_int(t, "t")
    if math.gcd(a, gamma) != 1:
        raise DivisibilityViolation(
            f"The label a={a} must be coprime to gamma={gamma}."
        )
    if (2 * (n - 1)) % gamma:
        raise DivisibilityViolation(
            f"gamma={gamma} does not divide 2(n-1)={2 * (n - 1)}."
        )
    if (2 * a * (n - 1)) % gamma:
        raise DivisibilityViolation(
            f"2a(n-1)/gamma = {2 * a * (n - 1)}/{gamma} is not integral."
        )
    off = -(2 * a * (n - 1)) // gamma
    return GramMatrix(((2 * (n - 1), off), (off, 2 * t)))


def gram_qt_k32(t):
    """``Q_t = [[2, -1], [-1, 2t]]`` for K3^[2] type and divisibility 2."""
    return gram_qh_k3n(2, 2, 1, t)


def gram_qt_og10(t):
    """Positive-definite rank-3 lattice of OG10 type and divisibility 3."""
    t = check_positive_int(t, "t")
    return GramMatrix(((2, -1, 0), (-1, 2, 1), (0, 1, 2 * t)))
