"""Base types shared by the embedding constructors."""

# License: MIT

import math
from dataclasses import dataclass, field

from ..base import CONSTRUCTION_TAGS
from ..lattice import (
    E8Vector,
    GramMatrix,
    e8_vector,
    is_primitive_embedding,
    roots_orthogonal_to,
)
from ..utils._validation_param import check_in_choices, check_positive_int


@dataclass(frozen=True)
class Embedding:
    """A map ``Q -> E8`` given by the images of a basis of ``Q``.

    Parameters
    ----------
    gram : GramMatrix
        Gram matrix of ``Q`` in the chosen basis.

    images : tuple of E8Vector
        One image per basis vector.

    construction_tag : str
        Recipe or case that produced the embedding, one of
        :data:`hkcert.base.CONSTRUCTION_TAGS`.

    params : dict, default={}
        Recipe parameters, recorded in certificates.
    """

    gram: GramMatrix
    images: tuple
    construction_tag: str
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        check_in_choices(self.construction_tag, "construction_tag", CONSTRUCTION_TAGS)
        images = tuple(self.images)
        if len(images) != self.gram.dim:
            raise ValueError(
                f"Expected {self.gram.dim} images, got {len(images)}."
            )
        object.__setattr__(self, "images", images)

    @property
    def rank(self):
        return self.gram.dim

    def image_gram(self):
        return tuple(
            tuple(u.dot(v) for v in self.images) for u in self.images
        )

    def gram_reproduced(self):
        """Whether the images have exactly the Gram matrix ``gram``."""
        return self.image_gram() == self.gram.entries

    def is_primitive(self):
        return is_primitive_embedding(self.images)

    def root_count(self):
        """Roots of E8 orthogonal to the image."""
        return roots_orthogonal_to(self.images)

    def to_dict(self):
        return {
            "gram": self.gram.tolist(),
            "images": [list(v.doubled) for v in self.images],
            "construction_tag": self.construction_tag,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, record):
        return cls(
            gram=GramMatrix(tuple(tuple(row) for row in record["gram"])),
            images=tuple(E8Vector(tuple(v)) for v in record["images"]),
            construction_tag=record["construction_tag"],
            params=dict(record.get("params", {})),
        )


@dataclass(frozen=True)
class OmegaThetaSelection:
    """Parameters picked by the ``gamma >= 3`` recipe.

    Attributes
    ----------
    omega : int
        Coefficient of ``e_4`` and ``e_5`` in ``v_1``.

    theta : int
        Coefficient of ``e_4`` and ``e_5`` in ``v_2`` before the case split.

    S : int
        ``P - |x|^2 - 2 theta^2``, the square left for the tail of ``v_2``.

    case_label : str
        ``"case1"`` to ``"case6"``.

    alphas : tuple of int
        Decomposition ``M - 2 omega^2 = a_1^2 + a_2^2 + a_3^2``.

    xs : tuple of int
        Solution of ``a . x = N - 2 omega theta``.

    xi : int or None
        Replacement coefficient of ``e_4, e_5`` in the second case.
    """

    omega: int
    theta: int
    S: int
    case_label: str
    alphas: tuple
    xs: tuple
    xi: int = None

    def to_dict(self):
        return {
            "omega": self.omega,
            "theta": self.theta,
            "S": self.S,
            "case": self.case_label,
            "alphas": list(self.alphas),
            "xs": list(self.xs),
            "xi": self.xi,
        }


@dataclass(frozen=True)
class VPlusMinus:
    """The sublattices ``V_+`` and ``V_-`` of E8, each isometric to ``A_1^4``.

    Attributes
    ----------
    vplus_gens : tuple of E8Vector
        ``e_i + e_{i+4}`` for ``i = 1..4``.

    vminus_gens : tuple of E8Vector
        ``e_i - e_{i+4}`` for ``i = 1..4``.
    """

    vplus_gens: tuple
    vminus_gens: tuple

    @classmethod
    def standard(cls):
        plus, minus = [], []
        for i in range(4):
            c = [0] * 8
            c[i] = c[i + 4] = 1
            plus.append(e8_vector(*c))
            c[i + 4] = -1
            minus.append(e8_vector(*c))
        return cls(vplus_gens=tuple(plus), vminus_gens=tuple(minus))

    def is_orthogonal(self):
        return all(u.dot(v) == 0 for u in self.vplus_gens for v in self.vminus_gens)

    def grams(self):
        """Gram matrices of ``V_+`` and ``V_-``."""
        return tuple(
            tuple(tuple(u.dot(v) for v in gens) for u in gens)
            for gens in (self.vplus_gens, self.vminus_gens)
        )


def uniform_degree_bound(n, gamma):
    """Smallest integer ``d >= 6 gamma^2 (n + 3 + sqrt(2(n-1)))^2``.

    Every component of the moduli space of K3^[n] type with divisibility
    ``gamma >= 3`` is of general type from this degree on. Computed exactly:
    the square expands to ``A + B sqrt(m)`` with integers ``A`` and ``B``.
    """
    n = check_positive_int(n, "n", 2)
    gamma = check_positive_int(gamma, "gamma")
    m = 2 * (n - 1)
    A = 6 * gamma**2 * ((n + 3) ** 2 + m)
    B = 12 * gamma**2 * (n + 3)
    x = B * B * m
    r = math.isqrt(x)
    return A + (r if r * r == x else r + 1)


def known_unirational(n_max):
    """Families of K3^[n] type known to be unirational from cubic fourfolds.

    For every ``k = a^2 - ab + b^2 <= n_max`` the table holds
    ``(n, d, gamma) = (k + 1, k / 3, 2k / 3)`` when ``3 | k`` and
    ``(k + 1, 3k, 2k)`` otherwise. Informational only.

    Returns
    -------
    rows : list of tuple (n, d, gamma)
    """
    n_max = check_positive_int(n_max, "n_max")
    loeschian = set()
    for a in range(0, math.isqrt(4 * n_max // 3) + 2):
        for b in range(0, a + 1):
            k = a * a - a * b + b * b
            if 1 <= k <= n_max:
                loeschian.add(k)
    rows = []
    for k in sorted(loeschian):
        if k % 3 == 0:
            rows.append((k + 1, k // 3, 2 * k // 3))
        else:
            rows.append((k + 1, 3 * k, 2 * k))
    return rows
