"""
Includes all possible values of the certifier's verdicts, families and
numeric windows.
"""

# License: MIT

import os

FAMILIES = ("k3n", "og10")

# Strongest first. ``Empty`` is not part of the ordering.
VERDICT_ORDER = (
    "GeneralType",
    "GeneralTypeLiterature",
    "NonNegativeKodaira",
    "OpenCase",
    "Inconclusive",
)

VERDICTS = VERDICT_ORDER + ("Empty",)

EXIT_CODES = {
    "GeneralType": 0,
    "GeneralTypeLiterature": 0,
    "NonNegativeKodaira": 2,
    "OpenCase": 3,
    "Inconclusive": 3,
    "Empty": 4,
}

REDUCTION_STEPS = (
    "strange_duality",
    "divide_d_by_square",
    "divide_n_by_square",
    "gamma2_to_n2",
    "four_power_strip",
)

CONSTRUCTION_TAGS = (
    "case1",
    "case2",
    "case3",
    "case4",
    "case5",
    "case6",
    "gamma1",
    "k32",
    "k32-half-integer",
    "og10",
    "appendix",
    "search",
    "exhaustive",
)

# |R(Q^perp)| windows: general type, and non-negative Kodaira dimension.
GENERAL_TYPE_WINDOW = (2, 14)
NON_NEGATIVE_WINDOW = (2, 16)
# counts proving only non-negative Kodaira dimension
BORDERLINE_WINDOW = (15, 16)
OG10_WINDOW = (2, 16)

# Ramification vanishes for embeddings with at most this many roots.
RAMIFICATION_ROOT_BOUND = 54

STAR_BOUND = 5 * 10**10

CERTIFICATE_SCHEMA_VERSION = 1
CSV_SCHEMA_VERSION = 1

BUDGET_ENV = "HKCERT_BUDGET"
DEFAULT_SEARCH_BUDGET = 200_000


def get_search_budget(budget=None):
    """Node budget of the exhaustive searches.

    An explicit ``budget`` wins, then the ``HKCERT_BUDGET`` environment
    variable, then :data:`DEFAULT_SEARCH_BUDGET`.
    """
    if budget is not None:
        budget = int(budget)
    else:
        raw = os.environ.get(BUDGET_ENV)
        budget = int(raw) if raw else DEFAULT_SEARCH_BUDGET
    if budget <= 0:
        raise ValueError(f"Search budget must be positive, got {budget}.")
    return budget


def verdict_rank(verdict):
    """Position of ``verdict`` in :data:`VERDICT_ORDER` (lower is stronger)."""
    if verdict == "Empty":
        return len(VERDICT_ORDER)
    return VERDICT_ORDER.index(verdict)
