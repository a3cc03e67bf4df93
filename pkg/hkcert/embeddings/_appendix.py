"""Tabulated low-degree embeddings.

Each K3^[2] row is ``t: (x_1, R, (x_5, x_6, x_7, x_8), integral, fractional)``
and each OG10 row is ``t: (x_1, Theta, (x_6, x_7, x_8), integral,
fractional)``; ``None`` marks a count the table does not state. OG10 rows in
``OG10_EXPLICIT`` give the coefficients of ``v_3`` directly.
"""

# License: MIT

from types import MappingProxyType

K32_APPENDIX = MappingProxyType(
    {
        13: (2, 13, (2, 2, 2, 1), 10, 4),
        14: (2, 15, (3, 2, 1, 1), 6, 8),
        15: (2, 17, (3, 2, 2, 0), None, 0),
        16: (3, 7, (2, 1, 1, 1), None, 0),
        17: (3, 9, (2, 2, 1, 0), None, 0),
        18: (3, 11, (3, 1, 1, 0), None, 0),
        19: (3, 13, (2, 2, 2, 1), None, 4),
        20: (3, 15, (3, 2, 1, 1), None, 4),
        22: (3, 19, (4, 1, 1, 1), None, 4),
        23: (3, 21, (3, 2, 2, 2), None, 0),
        31: (4, 21, (3, 2, 2, 2), None, 4),
        32: (4, 23, (3, 3, 2, 1), None, 4),
        33: (4, 25, (4, 2, 2, 1), None, 4),
    }
)

# t = 24..30 follow the window recipe with no fractional roots
K32_NO_FRACTIONAL = frozenset(range(24, 31))

# half-integer embedding for t = 21, doubled coordinates
K32_T21 = MappingProxyType(
    {
        "v1": (-2, 2, 0, 0, 0, 0, 0, 0),
        "v2": (1, -1, 11, 5, 3, 3, 1, 1),
        "integral": 6,
        "fractional": 8,
    }
)

OG10_APPENDIX = MappingProxyType(
    {
        8: (0, 1, (3, 2, 0), None, 12),
        9: (0, 0, (4, 1, 0), None, 0),
        10: (0, 1, (4, 1, 0), None, 2),
        11: (0, 0, (4, 2, 1), None, 4),
        14: (0, 1, (4, 3, 0), None, 12),
        15: (2, 0, (3, 2, 0), None, 0),
        16: (2, 1, (3, 2, 0), None, 2),
        17: (2, 0, (4, 1, 0), None, 0),
        18: (2, 1, (4, 1, 0), None, 2),
        19: (2, 0, (4, 2, 1), None, 4),
        20: (2, 3, (2, 1, 0), 2, 2),
        21: (0, 0, (6, 2, 1), 4, 4),
        22: (2, 1, (4, 3, 0), None, 4),
        23: (2, 0, (4, 3, 2), None, 0),
        24: (2, 1, (5, 2, 0), None, 4),
        25: (2, 2, (4, 3, 0), None, 4),
        26: (2, 0, (5, 3, 1), None, 4),
        27: (2, 4, (2, 1, 0), 2, 2),
        29: (2, 0, (5, 4, 0), None, 0),
        30: (2, 1, (5, 4, 0), None, 2),
        31: (2, 0, (5, 4, 2), None, 4),
        32: (2, 1, (5, 4, 2), None, 4),
        33: (2, 0, (6, 3, 2), None, 4),
        34: (2, 5, (1, 0, 0), 6, 0),
        45: (4, 2, (4, 3, 0), None, 0),
        50: (4, 1, (6, 2, 1), None, 0),
        52: (4, 1, (5, 4, 2), None, 0),
        54: (4, 1, (6, 3, 2), None, 0),
        55: (4, 0, (7, 2, 0), None, 0),
        56: (4, 1, (7, 2, 0), None, 0),
        57: (4, 2, (6, 3, 2), None, 0),
        58: (4, 0, (7, 3, 1), None, 0),
        59: (4, 0, (6, 5, 0), None, 0),
        60: (4, 1, (6, 5, 0), None, 0),
        61: (4, 0, (7, 4, 0), None, 0),
        62: (4, 1, (7, 4, 0), None, 0),
        63: (4, 0, (7, 4, 2), None, 4),
        64: (4, 1, (7, 4, 2), None, 4),
        65: (4, 0, (8, 3, 0), None, 0),
        66: (4, 0, (7, 5, 1), None, 4),
    }
)

# v_3 given by its integer coefficients, with the tabulated counts
OG10_EXPLICIT = MappingProxyType(
    {
        5: ((1, 1, 2, 0, 1, 1, 1, 1), 12, 0),
        6: ((1, 1, 2, 0, 0, 2, 1, 1), 6, 0),
        7: ((1, 1, 2, 2, 1, 1, 1, 1), 12, 0),
        12: ((1, 1, 2, 0, 0, 4, 1, 0), 12, 0),
        13: ((1, 1, 2, 1, 1, 4, 1, 0), 6, 2),
        28: ((2, 2, 3, 5, 3, 2, 1, 0), 0, 2),
    }
)

# t in 35..53 without a row use the window recipe with no fractional roots
OG10_RECIPE_RANGE = frozenset(range(35, 54)) - frozenset(OG10_APPENDIX)
