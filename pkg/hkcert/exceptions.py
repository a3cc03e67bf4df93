"""
The :mod:`hkcert.exceptions` module includes all custom error classes and
helper functions used across hkcert.
"""

# License: MIT


def raise_isinstance_error(variable_name, possible_type, variable):
    raise ValueError(
        f"{variable_name} has to be one of {possible_type}. "
        f"Got {type(variable)} instead."
    )


class DivisibilityViolation(ValueError):
    """A quantity that must be integral (e.g. ``2a(n-1)/gamma``) is not."""


class InvalidGramMatrix(ValueError):
    """The entries do not define a non-degenerate even symmetric form."""


class ZeroVector(ValueError):
    """A nonzero vector was required."""


class DependentVectors(ValueError):
    """Embedding images are linearly dependent."""


class NotInVminus(ValueError):
    """The vector does not lie in the sublattice V_-."""


class StarDomainExceeded(ValueError):
    """Input at or above the bound where the sums-of-squares exception lists
    are no longer unconditional."""


class BadParityMode(ValueError):
    """The requested parity mode is inconsistent with the equation."""


class NoSolution(ArithmeticError):
    """A linear Diophantine equation has no solution of the requested shape."""


class NonIntegralT(ValueError):
    """``(d + (n-1)a^2) / gamma^2`` is not an integer."""


class EmptyQuery(ValueError):
    """The moduli space of the query has no component."""


class MalformedCertificate(ValueError):
    """A certificate record is missing fields or has the wrong shape."""


class HypothesisViolated(Exception):
    """A premise of an embedding recipe fails.

    Parameters
    ----------
    check_name : str
        Stable identifier of the failed premise. Certificates record it as
        the name of a failed check.

    detail : str, default=""
        Human readable explanation.
    """

    def __init__(self, check_name, detail=""):
        self.check_name = check_name
        self.detail = detail
        message = check_name if not detail else f"{check_name}: {detail}"
        super().__init__(message)


class OpenCase(HypothesisViolated):
    """The parameters fall in a case that is open in the literature."""


class LiteratureCase(HypothesisViolated):
    """The parameters are settled by a published result, not by a recipe.

    Parameters
    ----------
    citation : str
        Short citation key, e.g. ``"GHS13"``.
    """

    def __init__(self, citation, detail=""):
        self.citation = citation
        super().__init__("literature", detail or f"settled by {citation}")
