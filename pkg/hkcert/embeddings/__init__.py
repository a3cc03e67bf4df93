"""
The :mod:`hkcert.embeddings` submodule provides the constructors of
primitive embeddings of the relevant rank 2 and rank 3 lattices into E8.
"""

from . import base
from . import _appendix
from . import _gamma_ge3
from . import _gamma1
from . import _k32
from . import _og10
from . import _search

from .base import Embedding
from .base import OmegaThetaSelection
from .base import VPlusMinus
from .base import uniform_degree_bound
from .base import known_unirational

from ._appendix import K32_APPENDIX
from ._appendix import OG10_APPENDIX
from ._appendix import OG10_EXPLICIT

from ._gamma_ge3 import embed_gamma_ge3
from ._gamma_ge3 import omega_for
from ._gamma1 import embed_gamma1
from ._gamma1 import check_gamma1_premises
from ._k32 import embed_k32_div2
from ._k32 import k32_window
from ._og10 import embed_og10_div3
from ._og10 import og10_window
from ._og10 import og10_theta
from ._search import search_rank2_embedding
from ._search import search_og10_embedding

__all__ = [
    "Embedding",
    "OmegaThetaSelection",
    "VPlusMinus",
    "uniform_degree_bound",
    "known_unirational",
    "K32_APPENDIX",
    "OG10_APPENDIX",
    "OG10_EXPLICIT",
    "embed_gamma_ge3",
    "omega_for",
    "embed_gamma1",
    "check_gamma1_premises",
    "embed_k32_div2",
    "k32_window",
    "embed_og10_div3",
    "og10_window",
    "og10_theta",
    "search_rank2_embedding",
    "search_og10_embedding",
]
