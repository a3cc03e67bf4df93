"""Components, degrees and strange duality of the moduli spaces."""

# License: MIT

import logging
import math
from dataclasses import dataclass

from sympy import mod_inverse

from ..exceptions import EmptyQuery, NonIntegralT
from ..utils._validation_param import check_family, check_positive_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentSet:
    """Labels ``a`` of the connected components of a moduli space.

    Attributes
    ----------
    family : {"k3n", "og10"}

    n : int or None
        ``None`` for OG10.

    d : int

    gamma : int

    labels : tuple of int
        Representatives in ``{0, .., gamma // 2}``, increasing.
    """

    family: str
    n: int
    d: int
    gamma: int
    labels: tuple = ()

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, a):
        return a in self.labels

    @property
    def is_empty(self):
        return not self.labels


def normalize_label(a, gamma):
    """The representative of ``+-a mod gamma`` in ``{0, .., gamma // 2}``."""
    r = a % gamma
    return min(r, gamma - r) if r else 0


def og10_t_of(d):
    """``t`` with ``2d = 18t - 6`` for OG10 type and divisibility 3."""
    d = check_positive_int(d, "d")
    if (2 * d + 6) % 18:
        raise NonIntegralT(f"2d + 6 = {2 * d + 6} is not divisible by 18.")
    return (2 * d + 6) // 18


def non_empty_components(family, n, d, gamma):
    """Components of the moduli space of the given numerical type.

    For K3^[n] type the labels are the ``a`` in ``{0, .., gamma // 2}``
    coprime to ``gamma`` with ``2d / gamma = -2(n-1) a^2 / gamma mod
    2 gamma``. The OG10 space is irreducible and non-empty exactly for
    ``gamma = 1`` (label 0) and for ``gamma = 3`` with ``2d = 12 mod 18``
    (label 1).

    Parameters
    ----------
    family : {"k3n", "og10"}

    n : int or None
        Ignored for OG10.

    d : int

    gamma : int

    Returns
    -------
    components : ComponentSet
    """
    family = check_family(family)
    d = check_positive_int(d, "d")
    gamma = check_positive_int(gamma, "gamma")
    if family == "og10":
        if gamma == 1:
            labels = (0,)
        elif gamma == 3 and (2 * d) % 18 == 12:
            labels = (1,)
        else:
            labels = ()
        return ComponentSet(family, None, d, gamma, labels)

    n = check_positive_int(n, "n", 2)
    labels = ()
    if (2 * (n - 1)) % gamma == 0 and (2 * d) % gamma == 0:
        k = 2 * (n - 1) // gamma
        d_prime = 2 * d // gamma
        labels = tuple(
            a
            for a in range(gamma // 2 + 1)
            if math.gcd(a, gamma) == 1 and (d_prime + k * a * a) % (2 * gamma) == 0
        )
    logger.debug(f"components of k3n n={n} d={d} gamma={gamma}: {labels}")
    return ComponentSet(family, n, d, gamma, labels)


def t_of(n, d, gamma, a):
    """``t = (d + (n-1) a^2) / gamma^2``.

    Raises
    ------
    NonIntegralT
        If the quotient is not an integer.
    """
    numerator = d + (n - 1) * a * a
    if numerator % (gamma * gamma):
        raise NonIntegralT(
            f"d + (n-1)a^2 = {numerator} is not divisible by gamma^2 = {gamma * gamma}."
        )
    return numerator // (gamma * gamma)


def monodromy_index(n, gamma):
    """Index of the stable orthogonal group in the monodromy group: 1 when
    ``n = 2`` or ``gamma >= 3``, 2 otherwise."""
    n = check_positive_int(n, "n", 2)
    gamma = check_positive_int(gamma, "gamma")
    return 1 if n == 2 or gamma >= 3 else 2


def dual_label(a, gamma):
    """Return ``(a', s)`` with ``a'`` in ``{0, .., gamma // 2}`` and
    ``a a' = s mod gamma`` for ``s`` in ``{1, -1}``."""
    if gamma == 1:
        return 0, 1
    inverse = int(mod_inverse(a, gamma))
    a_dual = normalize_label(inverse, gamma)
    sign = 1 if (a * a_dual) % gamma == 1 % gamma else -1
    return a_dual, sign


def strange_duality(n, d, gamma, a):
    """The dual parameters ``(d + 1, n - 1, gamma, a')``.

    The component ``a`` of the K3^[n] moduli space of degree ``2d`` is
    birational to the component ``a'`` of the K3^[d+1] moduli space of
    degree ``2(n-1)``, where ``a a' = +-1 mod gamma``.

    Raises
    ------
    EmptyQuery
        If ``a`` is not a component of the query.
    """
    components = non_empty_components("k3n", n, d, gamma)
    if a not in components:
        raise EmptyQuery(
            f"a={a} is not a component of the K3^[{n}] moduli space with "
            f"d={d} and gamma={gamma}."
        )
    a_dual, _ = dual_label(a, gamma)
    return d + 1, n - 1, gamma, a_dual
