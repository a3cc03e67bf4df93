"""Utilities for docstring in hkcert.
"""

# License: MIT


class Substitution:
    """Decorate a function's or a class' docstring to perform string
    substitution on it.

    This decorator should be robust even if obj.__doc__ is None
    (for example, if -OO was passed to the interpreter)
    """

    def __init__(self, *args, **kwargs):
        if args and kwargs:
            raise AssertionError("Only positional or keyword args are allowed")

        self.params = args or kwargs

    def __call__(self, obj):
        if obj.__doc__:
            obj.__doc__ = obj.__doc__.format(**self.params)
        return obj


_degree_docstring = """d : int
        Half the degree of the polarization, i.e. the polarization has
        square ``2d``."""

_gamma_docstring = """gamma : int
        Divisibility of the polarization in the lattice."""

_budget_docstring = """budget : int, default=None
        Maximum number of search nodes. ``None`` reads the ``HKCERT_BUDGET``
        environment variable and falls back to the package default."""
