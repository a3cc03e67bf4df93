"""Smith normal form of integer matrices with unimodular transforms."""

# License: MIT

from dataclasses import dataclass

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..utils._validation_param import check_integer


@dataclass(frozen=True)
class SNFResult:
    """Result of :func:`smith_normal_form`.

    ``left @ m @ right`` is the ``rows x cols`` matrix carrying ``diag`` on
    its main diagonal and zeros elsewhere.

    Attributes
    ----------
    left : tuple of tuple of int
        Unimodular ``rows x rows`` matrix.

    diag : tuple of int
        The ``min(rows, cols)`` non-negative diagonal entries, each dividing
        the next.

    right : tuple of tuple of int
        Unimodular ``cols x cols`` matrix.
    """

    left: tuple
    diag: tuple
    right: tuple

    @property
    def invariant_factors(self):
        """Nonzero diagonal entries."""
        return tuple(d for d in self.diag if d != 0)

    @property
    def rank(self):
        return len(self.invariant_factors)

    def diagonal_matrix(self):
        rows, cols = len(self.left), len(self.right)
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(self.diag):
            out[i][i] = d
        return tuple(tuple(row) for row in out)


def _identity(size):
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _as_int_rows(m):
    rows = [list(row) for row in m]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("Matrix rows must all have the same length.")
    return [
        [check_integer(x, f"m[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]


def _to_ints(dm):
    return [[int(x) for x in row] for row in dm.to_list()]


def smith_normal_form(m):
    """Smith normal form ``left @ m @ right = diag``.

    Computed over ``ZZ`` by :func:`sympy.polys.matrices.normalforms.smith_normal_decomp`;
    rows of ``left`` are negated where needed so that ``diag`` is
    non-negative.

    Parameters
    ----------
    m : sequence of sequences of int
        Integer matrix, any shape.

    Returns
    -------
    result : SNFResult
    """
    a = _as_int_rows(m)
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    if n_rows == 0 or n_cols == 0:
        return SNFResult(_identity(n_rows), (), _identity(n_cols))

    dm = DomainMatrix([[ZZ(x) for x in row] for row in a], (n_rows, n_cols), ZZ)
    smf, left, right = (_to_ints(x) for x in smith_normal_decomp(dm))
    diag = [smf[i][i] for i in range(min(n_rows, n_cols))]
    for i, d in enumerate(diag):
        if d < 0:
            diag[i] = -d
            left[i] = [-x for x in left[i]]
    return SNFResult(
        left=tuple(tuple(row) for row in left),
        diag=tuple(diag),
        right=tuple(tuple(row) for row in right),
    )


def invariant_factors(m):
    """Nonzero Smith invariant factors of ``m``."""
    return smith_normal_form(m).invariant_factors
