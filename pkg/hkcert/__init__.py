"""Certificates for the Kodaira dimension of moduli of hyperkähler varieties.

``hkcert`` rebuilds the lattice embeddings into E8 that show moduli spaces
of polarized hyperkähler varieties of K3^[n] and OG10 type are of general
type, counts the roots they leave behind, and writes every verdict as a
certificate that can be re-checked from scratch.

Subpackages
-----------
lattice
    Module which provides Smith normal forms, Gram matrices and the E8
    lattice with its roots.
arithmetic
    Module which provides sums of squares and parity-constrained linear
    Diophantine equations.
embeddings
    Module which provides the constructors of primitive embeddings into E8.
certify
    Module which turns a moduli space into a verdict with a certificate.
utils
    Module including various utilities.
exceptions
    Module including custom error classes used across hkcert.
"""

from . import lattice
from . import arithmetic
from . import embeddings
from . import certify
from . import utils
from . import exceptions

from .certify import ModuliQuery
from .certify import verify_certificate

from ._version import __version__

__all__ = [
    "lattice",
    "arithmetic",
    "embeddings",
    "certify",
    "utils",
    "exceptions",
    "ModuliQuery",
    "verify_certificate",
    "__version__",
]
