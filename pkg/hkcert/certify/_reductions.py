"""Reductions between moduli spaces as explicit lattice morphisms.

Every step maps the basis ``z_1, z_2`` of the ``Q_h`` lattice of its source
into the ``Q_h`` lattice of its target. A step is valid when the images have
the Gram matrix of the source; a strange duality step must moreover be an
isometry.
"""

# License: MIT

import math
from dataclasses import dataclass

from ..base import REDUCTION_STEPS
from ..exceptions import DivisibilityViolation, MalformedCertificate
from ..lattice import gram_qh_k3n
from ..utils._validation_param import check_in_choices, check_positive_int
from ._moduli import dual_label, strange_duality, t_of


def qh_gram(n, d, gamma, a):
    """Gram matrix of ``Q_h`` for the component ``a``."""
    return gram_qh_k3n(n, gamma, a, t_of(n, d, gamma, a))


@dataclass(frozen=True)
class ReductionStep:
    """One reduction in a certificate.

    Attributes
    ----------
    name : str
        One of :data:`hkcert.base.REDUCTION_STEPS`.

    param : int or None
        ``r`` for the square divisions, ``e`` for ``four_power_strip``.

    source, target : tuple (n, d, gamma, a)

    morphism : tuple of tuple of int
        Row ``i`` holds the coordinates of the image of ``z_i`` in the
        target basis.
    """

    name: str
    param: int
    source: tuple
    target: tuple
    morphism: tuple

    def __post_init__(self):
        check_in_choices(self.name, "name", REDUCTION_STEPS)

    def source_gram(self):
        return qh_gram(*self.source)

    def target_gram(self):
        return qh_gram(*self.target)

    def image_gram(self):
        g = self.target_gram().entries
        m = self.morphism
        return tuple(
            tuple(
                sum(m[i][k] * g[k][l] * m[j][l] for k in range(2) for l in range(2))
                for j in range(2)
            )
            for i in range(2)
        )

    def check(self):
        """Whether the morphism preserves the Gram matrix of the source."""
        try:
            preserved = self.image_gram() == self.source_gram().entries
        except (DivisibilityViolation, ValueError):
            return False
        if self.name == "strange_duality":
            m = self.morphism
            preserved = preserved and abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) == 1
        return preserved

    def to_dict(self):
        return {
            "name": self.name,
            "param": self.param,
            "source": list(self.source),
            "target": list(self.target),
            "morphism": [list(row) for row in self.morphism],
            "valid": self.check(),
        }

    @classmethod
    def from_dict(cls, record):
        try:
            return cls(
                name=record["name"],
                param=record["param"],
                source=tuple(record["source"]),
                target=tuple(record["target"]),
                morphism=tuple(tuple(row) for row in record["morphism"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificate(f"Bad reduction step {record!r}: {exc}") from exc


def divide_d_by_square(n, d, r):
    """``(n, d r^2) -> (n, d)`` for divisibility one: ``z_1 -> z_1``,
    ``z_2 -> r z_2``."""
    r = check_positive_int(r, "r")
    if d % (r * r):
        raise DivisibilityViolation(f"r^2={r * r} does not divide d={d}.")
    return ReductionStep(
        "divide_d_by_square", r, (n, d, 1, 0), (n, d // (r * r), 1, 0), ((1, 0), (0, r))
    )


def four_power_strip(n, d, e):
    """``(n, 4^e m) -> (n, m)`` for divisibility one."""
    e = check_positive_int(e, "e")
    r = 2**e
    if d % (r * r):
        raise DivisibilityViolation(f"4^{e} does not divide d={d}.")
    return ReductionStep(
        "four_power_strip", e, (n, d, 1, 0), (n, d // (r * r), 1, 0), ((1, 0), (0, r))
    )


def divide_n_by_square(n, d, r):
    """``((n-1) r^2 + 1, d) -> (n, d)`` for divisibility one: ``z_1 -> r z_1``."""
    r = check_positive_int(r, "r")
    if (n - 1) % (r * r):
        raise DivisibilityViolation(f"r^2={r * r} does not divide n-1={n - 1}.")
    target_n = (n - 1) // (r * r) + 1
    if target_n < 2:
        raise DivisibilityViolation(f"n-1={n - 1} is not a proper multiple of {r * r}.")
    return ReductionStep(
        "divide_n_by_square", r, (n, d, 1, 0), (target_n, d, 1, 0), ((r, 0), (0, 1))
    )


def gamma2_to_n2(n, d):
    """``(k^2 + 1, d)`` with ``k`` odd and divisibility two ``-> (2, d)``.

    The target is written with the label ``a = 1``: ``z_1 -> k w_1`` and
    ``z_2 -> w_2 - (k-1)/2 w_1``.
    """
    k = math.isqrt(n - 1)
    if n < 2 or k * k != n - 1 or k % 2 == 0:
        raise DivisibilityViolation(f"n-1={n - 1} is not an odd square.")
    c = (k - 1) // 2
    return ReductionStep(
        "gamma2_to_n2", None, (n, d, 2, 1), (2, d, 2, 1), ((k, 0), (-c, 1))
    )


def strange_duality_step(n, d, gamma, a):
    """The isometry ``Q_h -> Q_h'`` onto the dual component:
    ``z_1 -> a' z_1' + gamma z_2'`` and ``z_2 -> -(s z z_1' + a z_2')`` with
    ``a a' = s (1 + z gamma)``."""
    target = strange_duality(n, d, gamma, a)
    a_dual, sign = dual_label(a, gamma)
    z = (a * a_dual * sign - 1) // gamma
    return ReductionStep(
        "strange_duality",
        None,
        (n, d, gamma, a),
        target,
        ((a_dual, gamma), (-sign * z, -a)),
    )


_BUILDERS = {
    "divide_d_by_square": lambda s, p: divide_d_by_square(s[0], s[1], p),
    "four_power_strip": lambda s, p: four_power_strip(s[0], s[1], p),
    "divide_n_by_square": lambda s, p: divide_n_by_square(s[0], s[1], p),
    "gamma2_to_n2": lambda s, p: gamma2_to_n2(s[0], s[1]),
    "strange_duality": lambda s, p: strange_duality_step(*s),
}


def rebuild_step(name, source, param):
    """Recompute a step from its name, source and parameter."""
    name = check_in_choices(name, "name", REDUCTION_STEPS)
    return _BUILDERS[name](tuple(source), param)
