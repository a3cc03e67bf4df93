"""Utilities for parameter validation."""

# License: MIT

import numbers

from ..base import FAMILIES


def check_integer(param, param_name: str):
    """Accept python and numpy integers (but not bool), return an ``int``."""
    if isinstance(param, bool) or not isinstance(param, numbers.Integral):
        raise TypeError(
            f"'{param_name}' should be of type `int`, got {type(param)}."
        )
    return int(param)


def check_positive_int(param, param_name: str, minimum: int = 1):
    param = check_integer(param, param_name)
    if param < minimum:
        raise ValueError(
            f"'{param_name}' must be an integer >= {minimum}, got {param}."
        )
    return param


def check_in_choices(param, param_name: str, choices):
    if param not in choices:
        raise ValueError(
            f"'{param_name}' must be one of {tuple(choices)}, got {param!r}."
        )
    return param


def check_family(family):
    return check_in_choices(family, "family", FAMILIES)


def check_int_vector(vector, param_name: str, length: int = None):
    """Validate a sequence of integers and return it as a tuple of ints."""
    try:
        values = tuple(vector)
    except TypeError:
        raise TypeError(
            f"'{param_name}' should be a sequence of integers, got {type(vector)}."
        )
    values = tuple(check_integer(v, f"{param_name}[{i}]") for i, v in enumerate(values))
    if length is not None and len(values) != length:
        raise ValueError(
            f"'{param_name}' must have length {length}, got {len(values)}."
        )
    return values
