"""Rank-2 embeddings ``[[M, N], [N, P]] -> E8`` for divisibility at least 3.

``v_1 = a_1 e_1 + a_2 e_2 + a_3 e_3 + omega (e_4 + e_5)`` and ``v_2`` starts
with a minimal solution ``x`` of ``a . x = N - 2 omega theta``; the rest of
``v_2`` depends on ``S = P - |x|^2 - 2 theta^2`` through six cases.
"""

# License: MIT

import logging

from ..arithmetic import (
    solve_parity,
    three_squares_distinct_coprime,
    three_squares_positive_coprime,
)
from ..exceptions import HypothesisViolated
from ..lattice import E8Vector, gram_mnp, is_positive_definite
from ..utils._validation_param import check_integer
from .base import Embedding, OmegaThetaSelection

logger = logging.getLogger(__name__)

EXCLUDED_M = frozenset({20, 24})

# S values with no three-positive-coprime decomposition, handled separately
_CASE2_S_THETA0 = frozenset({13, 25, 37, 58, 85, 130})
_CASE2_S_THETA1 = frozenset({33, 57, 102, 177})
_EXCLUDED_S_OMEGA_NONZERO = frozenset({6, 9, 18, 22, 33, 57, 102, 177})

# fixed tails on e_4..e_8
_TAILS = {
    "case3": (1, 1, 2, 2, 0),
    "case4": (0, 0, 3, 1, 1),
    "case5": (1, 1, 3, 3, 0),
    "case6": (1, 1, 3, 3, 2),
}


def omega_for(M):
    """Coefficient ``omega`` with ``M - 2 omega^2`` a sum of three distinct
    coprime squares."""
    if M % 4 == 2:
        return 2 if M in (18, 22, 102) else 0
    return 3 if M == 104 else 1


def theta_for(P):
    return 0 if P % 4 == 0 else 1


def _excluded_S(S, omega, theta):
    if omega == 0 and theta == 0:
        return S == 8
    if omega == 0:
        return S == 6
    return S in _EXCLUDED_S_OMEGA_NONZERO


def _require(decomposition, target):
    if decomposition is None:
        raise HypothesisViolated(
            "tail_not_representable", f"{target} has no admissible decomposition"
        )
    return decomposition


def _tail(S, omega, theta):
    """Return ``(case_label, xi, coefficients of e_4..e_8)`` for ``S``."""
    if omega == 0 and theta == 0:
        if S == 10:
            return "case3", None, _TAILS["case3"]
        if S in _CASE2_S_THETA0:
            return _case2(S, theta, xi=2)
        y = _require(three_squares_positive_coprime(S), S)
        return "case1", None, (0, 0) + y.parts
    if omega == 0 and theta == 1:
        if S == 9:
            return "case4", None, _TAILS["case4"]
        if S == 18:
            return "case5", None, _TAILS["case5"]
        if S == 22:
            return "case6", None, _TAILS["case6"]
        if S in _CASE2_S_THETA1:
            return _case2(S, theta, xi=3)
    y = _require(three_squares_distinct_coprime(S), S)
    return "case1", None, (theta, theta) + y.parts


def _case2(S, theta, xi):
    R = S + 2 * theta - 2 * xi * xi
    y = _require(three_squares_distinct_coprime(R), R)
    return "case2", xi, (xi, xi) + y.parts


def embed_gamma_ge3(M, N, P):
    """Primitive embedding of ``Q = [[M, N], [N, P]]`` into E8.

    Parameters
    ----------
    M : int
        Even, ``M > 8`` and ``M`` not in ``{20, 24}``.

    N : int

    P : int
        Even.

    Returns
    -------
    embedding : Embedding

    selection : OmegaThetaSelection

    Raises
    ------
    HypothesisViolated
        Named after the first premise that fails: ``not_positive_definite``,
        ``M_too_small``, ``M_excluded``, ``S_too_small`` or ``S_excluded``.
        The ``S`` premises are only reported once every decomposition of
        ``M - 2 omega^2`` has been tried.
    """
    M, N, P = (check_integer(x, name) for x, name in ((M, "M"), (N, "N"), (P, "P")))
    gram = gram_mnp(M, N, P)
    if not is_positive_definite(gram):
        raise HypothesisViolated("not_positive_definite", f"{gram.tolist()}")
    if M <= 8:
        raise HypothesisViolated("M_too_small", f"M={M} must exceed 8")
    if M in EXCLUDED_M:
        raise HypothesisViolated("M_excluded", f"M={M} is in {sorted(EXCLUDED_M)}")

    omega = omega_for(M)
    theta = theta_for(P)
    K = N - 2 * omega * theta
    decompositions = three_squares_distinct_coprime(
        M - 2 * omega * omega, enumerate_all=True
    )
    failure = None
    for alphas in decompositions:
        solution = solve_parity(alphas.parts, K)
        S = P - solution.norm - 2 * theta * theta
        logger.debug(
            f"M={M} N={N} P={P}: alphas={alphas.parts} x={solution.xs} S={S}"
        )
        if S <= 5:
            failure = failure or HypothesisViolated("S_too_small", f"S={S} <= 5")
            continue
        if _excluded_S(S, omega, theta):
            failure = HypothesisViolated(
                "S_excluded", f"S={S} with omega={omega}, theta={theta}"
            )
            continue
        case_label, xi, tail = _tail(S, omega, theta)
        v1 = E8Vector(tuple(2 * c for c in alphas.parts + (omega, omega, 0, 0, 0)))
        v2 = E8Vector(tuple(2 * c for c in solution.xs + tail))
        selection = OmegaThetaSelection(
            omega=omega,
            theta=theta,
            S=S,
            case_label=case_label,
            alphas=alphas.parts,
            xs=solution.xs,
            xi=xi,
        )
        embedding = Embedding(
            gram=gram,
            images=(v1, v2),
            construction_tag=case_label,
            params=selection.to_dict(),
        )
        return embedding, selection
    raise failure
