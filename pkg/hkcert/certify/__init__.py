"""
The :mod:`hkcert.certify` submodule turns a numerical type of moduli space
into a verdict with a verifiable certificate: components, reductions,
theorem dispatch and independent verification.
"""

from . import _moduli
from . import _reductions
from . import _certificate
from . import _checks
from . import _verify
from . import _dispatch

from ._moduli import ComponentSet
from ._moduli import non_empty_components
from ._moduli import normalize_label
from ._moduli import t_of
from ._moduli import og10_t_of
from ._moduli import monodromy_index
from ._moduli import dual_label
from ._moduli import strange_duality

from ._reductions import ReductionStep
from ._reductions import divide_d_by_square
from ._reductions import divide_n_by_square
from ._reductions import four_power_strip
from ._reductions import gamma2_to_n2
from ._reductions import strange_duality_step

from ._certificate import ModuliQuery
from ._certificate import Check
from ._certificate import Certificate
from ._certificate import write_certificate
from ._certificate import read_certificate

from ._checks import derive_verdict

from ._verify import verify_certificate

from ._dispatch import certify
from ._dispatch import certify_all
from ._dispatch import gamma1_reduction_chains

__all__ = [
    "ComponentSet",
    "non_empty_components",
    "normalize_label",
    "t_of",
    "og10_t_of",
    "monodromy_index",
    "dual_label",
    "strange_duality",
    "ReductionStep",
    "divide_d_by_square",
    "divide_n_by_square",
    "four_power_strip",
    "gamma2_to_n2",
    "strange_duality_step",
    "ModuliQuery",
    "Check",
    "Certificate",
    "write_certificate",
    "read_certificate",
    "derive_verdict",
    "verify_certificate",
    "certify",
    "certify_all",
    "gamma1_reduction_chains",
]
