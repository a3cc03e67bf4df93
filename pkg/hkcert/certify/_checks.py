"""Named checks, the recipes they re-run and the verdict they imply.

Each check name maps to an evaluator computing ``(observed, passed)`` from a
:class:`CheckContext`. Certification and verification use the same
evaluators, so a stored check can be recomputed from the certificate alone.
"""

# License: MIT

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from ..base import (
    BORDERLINE_WINDOW,
    GENERAL_TYPE_WINDOW,
    NON_NEGATIVE_WINDOW,
    OG10_WINDOW,
    RAMIFICATION_ROOT_BOUND,
)
from ..embeddings import (
    embed_gamma1,
    embed_gamma_ge3,
    embed_k32_div2,
    embed_og10_div3,
    search_rank2_embedding,
    uniform_degree_bound,
)
from ..exceptions import DependentVectors, HypothesisViolated
from ..lattice import (
    gram_qt_og10,
    is_in_vminus,
    is_in_vplus,
    roots_in_vminus_orthogonal_to,
    roots_orthogonal_to,
)
from ._certificate import Check
from ._moduli import monodromy_index, non_empty_components
from ._reductions import qh_gram

logger = logging.getLogger(__name__)

ROOT_WINDOWS = {
    "root_window": GENERAL_TYPE_WINDOW,
    "root_window_og10": OG10_WINDOW,
    "root_window_nonneg": NON_NEGATIVE_WINDOW,
}

# 2d / gamma values for which irregular cusps cannot be ruled out
_CUSP_DEGREES = frozenset({1, 2, 4, 8})

# rank of the standard V_- in E8
_VMINUS_RANK = 4


@dataclass(frozen=True)
class CheckContext:
    """Everything an evaluator may look at.

    ``target`` is ``(n, d, gamma, a)`` of the space carrying the embedding
    (``n`` is None for OG10) and ``t`` its ``t``.
    """

    query: object
    target: tuple
    t: int = None
    chain: tuple = ()
    embedding: object = None
    root_count: object = None
    citation: str = None


def literature_status(family, target, t):
    """``("literature", citation)``, ``("open", detail)`` or None."""
    n, d, gamma, _ = target
    if family == "og10":
        if gamma == 3 and t == 4:
            return "literature", "GHS11"
        if gamma == 3 and t is not None and t < 4:
            return "open", f"t={t}"
        return None
    if n == 2 and gamma == 1 and d >= 12:
        return "literature", "GHS10"
    if n == 2 and gamma == 2:
        if t in (10, 12):
            return "literature", "GHS13"
        if t is not None and t < 13:
            return "open", f"t={t}"
    return None


def prime_witness(n, d):
    """Whether ``d`` is an odd prime ``= 3 mod 4`` with ``(n-1) d = 2, 3 mod 4``."""
    return d % 4 == 3 and isprime(d) and ((n - 1) * d) % 4 in (2, 3)


def run_recipe(recipe, target, t, budget=None):
    """Run an embedding recipe on ``target``.

    Returns
    -------
    embedding : Embedding or None

    outcome : str
        ``"ok"`` or the name of the premise that failed.
    """
    n, d, gamma, a = target
    try:
        if recipe == "gamma_ge3":
            M = 2 * (n - 1)
            embedding, _ = embed_gamma_ge3(M, -(2 * a * (n - 1)) // gamma, 2 * t)
        elif recipe == "gamma1":
            embedding, _ = embed_gamma1(n, d)
        elif recipe == "k32":
            embedding = embed_k32_div2(t)
        elif recipe == "og10":
            embedding = embed_og10_div3(t, budget=budget)
        elif recipe == "exhaustive":
            M, N, P = (qh_gram(n, d, gamma, a)[i, j] for i, j in ((0, 0), (0, 1), (1, 1)))
            found = search_rank2_embedding(M, N, P, GENERAL_TYPE_WINDOW, budget=budget)
            if found is None:
                found = search_rank2_embedding(M, N, P, BORDERLINE_WINDOW, budget=budget)
            if found is None:
                return None, "not_found"
            embedding = found[0]
        else:
            return None, "no_recipe"
    except HypothesisViolated as exc:
        logger.debug(f"recipe {recipe} on {target}: {exc}")
        return None, exc.check_name
    return embedding, "ok"


def _expected_gram(ctx):
    if ctx.query.family == "og10":
        return gram_qt_og10(ctx.t)
    return qh_gram(*ctx.target)


def _total(ctx):
    return roots_orthogonal_to(ctx.embedding.images).total


def _non_empty(ctx):
    q = ctx.query
    labels = list(non_empty_components(q.family, q.n, q.d, q.gamma))
    return labels, q.a in labels


def _reduction_chain(ctx):
    observed = [step.check() for step in ctx.chain]
    return observed, all(observed)


def _literature(ctx):
    status = literature_status(ctx.query.family, ctx.target, ctx.t)
    citation = status[1] if status and status[0] == "literature" else None
    return citation, citation is not None and citation == ctx.citation


def _open_case(ctx):
    status = literature_status(ctx.query.family, ctx.target, ctx.t)
    detail = status[1] if status and status[0] == "open" else None
    return detail, detail is None


def _rq_guard(ctx):
    n, d, gamma, _ = ctx.target
    value = Fraction(d * (n - 1), gamma * gamma)
    return str(value), value > 4


def _irregular_cusp_guard(ctx):
    n, d, gamma, _ = ctx.target
    value = Fraction(4 * d * (n - 1), gamma * gamma)
    return str(value), value > 16


def _monodromy(ctx):
    n, _, gamma, _ = ctx.target
    index = monodromy_index(n, gamma)
    return index, index == 1


def _uniform_bound(ctx):
    q = ctx.query
    bound = uniform_degree_bound(q.n, q.gamma)
    return bound, q.d >= bound


def _gram_reproduced(ctx):
    expected = _expected_gram(ctx)
    observed = ctx.embedding.gram == expected and ctx.embedding.gram_reproduced()
    return observed, observed


def _primitive(ctx):
    try:
        observed = ctx.embedding.is_primitive()
    except DependentVectors:
        observed = False
    return observed, observed


def _window(name):
    low, high = ROOT_WINDOWS[name]

    def evaluate(ctx):
        total = _total(ctx)
        return total, low <= total <= high

    return evaluate


def _root_bound_54(ctx):
    total = _total(ctx)
    return total, total <= RAMIFICATION_ROOT_BOUND


def _vminus_membership(ctx):
    v1, v2 = ctx.embedding.images
    observed = [is_in_vminus(v1), is_in_vplus(v2)]
    return observed, all(observed)


def _vminus_parity(ctx):
    half = roots_in_vminus_orthogonal_to(ctx.embedding.images[0]) // 2
    return half, (_VMINUS_RANK + half) % 2 == 1


def _fcusp_ramification(ctx):
    n, d, _, _ = ctx.target
    observed = {
        "half_roots_even": (_total(ctx) // 2) % 2 == 0,
        "prime_witness": bool(prime_witness(n, d)),
    }
    return observed, any(observed.values())


def _cusp_degree(ctx):
    _, d, gamma, _ = ctx.target
    value = Fraction(2 * d, gamma)
    return str(value), value not in _CUSP_DEGREES


EVALUATORS = {
    "non_empty": _non_empty,
    "reduction_chain": _reduction_chain,
    "literature": _literature,
    "open_case": _open_case,
    "rq_guard": _rq_guard,
    "irregular_cusp_guard": _irregular_cusp_guard,
    "monodromy_index": _monodromy,
    "uniform_bound": _uniform_bound,
    "gram_reproduced": _gram_reproduced,
    "primitive": _primitive,
    "root_window": _window("root_window"),
    "root_window_og10": _window("root_window_og10"),
    "root_window_nonneg": _window("root_window_nonneg"),
    "root_bound_54": _root_bound_54,
    "vminus_membership": _vminus_membership,
    "vminus_parity": _vminus_parity,
    "fcusp_ramification": _fcusp_ramification,
    "cusp_degree": _cusp_degree,
}

_EXPECTED = {
    "non_empty": True,
    "reduction_chain": True,
    "open_case": None,
    "rq_guard": "> 4",
    "irregular_cusp_guard": "> 16",
    "monodromy_index": 1,
    "uniform_bound": "d >= bound",
    "gram_reproduced": True,
    "primitive": True,
    "root_window": list(GENERAL_TYPE_WINDOW),
    "root_window_og10": list(OG10_WINDOW),
    "root_window_nonneg": list(NON_NEGATIVE_WINDOW),
    "root_bound_54": f"<= {RAMIFICATION_ROOT_BOUND}",
    "vminus_membership": [True, True],
    "vminus_parity": "odd",
    "fcusp_ramification": "either",
    "cusp_degree": "not in {1, 2, 4, 8}",
}


def evaluate(name, ctx, required=True):
    """Evaluate the check ``name`` and wrap it in a :class:`Check`."""
    observed, passed = EVALUATORS[name](ctx)
    note = None
    if name == "fcusp_ramification" and passed and not observed["half_roots_even"]:
        note = "witness: partial"
    expected = ctx.citation if name == "literature" else _EXPECTED[name]
    return Check(name, expected, observed, bool(passed), required, note)


def recipe_check(recipe, outcome, budget=None):
    expected = {"recipe": recipe}
    if budget is not None:
        expected["budget"] = budget
    return Check("recipe", expected, outcome, outcome == "ok")


def recheck(check, ctx):
    """Recompute a stored check; False when it does not match."""
    if check.name == "recipe":
        if not isinstance(check.expected, dict) or "recipe" not in check.expected:
            return False
        _, outcome = run_recipe(
            check.expected["recipe"], ctx.target, ctx.t, check.expected.get("budget")
        )
        return outcome == check.observed and (outcome == "ok") == check.passed
    if check.name not in EVALUATORS:
        return False
    needs_embedding = check.name in _EMBEDDING_CHECKS
    if needs_embedding and ctx.embedding is None:
        return False
    fresh = evaluate(check.name, ctx, check.required)
    return (
        fresh.observed == check.observed
        and fresh.passed == check.passed
        and fresh.expected == check.expected
        and fresh.note == check.note
    )


_EMBEDDING_CHECKS = frozenset(
    {
        "gram_reproduced",
        "primitive",
        "root_window",
        "root_window_og10",
        "root_window_nonneg",
        "root_bound_54",
        "vminus_membership",
        "vminus_parity",
        "fcusp_ramification",
    }
)


_EMBEDDING_PLANS = {
    "gamma_ge3": (
        "monodromy_index", "gram_reproduced", "primitive", "root_window", "root_bound_54"
    ),
    "k32": (
        "monodromy_index", "gram_reproduced", "primitive", "root_window", "root_bound_54"
    ),
    "gamma1": (
        "gram_reproduced",
        "primitive",
        "vminus_membership",
        "root_window",
        "vminus_parity",
        "fcusp_ramification",
        "cusp_degree",
    ),
    "og10": ("gram_reproduced", "primitive", "root_window_og10"),
}  # fmt: skip

# paths that consult the literature before running a recipe
_STATUS_PATHS = frozenset({"og10", "k32", "gamma1"})

PATH_RECIPES = {
    "gamma_ge3": ("gamma_ge3", "exhaustive"),
    "k32": ("k32",),
    "gamma2": ("gamma2",),
    "gamma1": ("gamma1",),
    "og10": ("og10",),
    "og10_split": ("og10_split",),
}


def recipe_path(family, target):
    """Which construction a certificate with this target follows."""
    n, _, gamma, _ = target
    if family == "og10":
        return "og10_split" if gamma == 1 else "og10"
    if gamma >= 3:
        return "gamma_ge3"
    if gamma == 2:
        return "k32" if n == 2 else "gamma2"
    return "gamma1"


def check_plan(query, target, t, chained, recipe=None, total=None):
    """Ordered ``(name, required)`` pairs a certificate must carry.

    Certification evaluates exactly these checks and verification rejects
    any certificate whose checks differ from them.

    Parameters
    ----------
    query : ModuliQuery

    target : tuple
        ``(n, d, gamma, a)`` at the end of the reduction chain.

    t : int

    chained : bool
        Whether the certificate carries a reduction chain.

    recipe : str, default=None
        The recipe that was run.

    total : int, default=None
        Root count of the embedding; None when there is none.

    Returns
    -------
    plan : list of tuple (str, bool)
    """
    plan = [("non_empty", True)]
    if chained:
        plan.append(("reduction_chain", True))
    path = recipe_path(query.family, target)
    if path in _STATUS_PATHS:
        status = literature_status(query.family, target, t)
        if status is not None:
            plan.append(("literature" if status[0] == "literature" else "open_case", True))
            return plan
    if path in ("og10", "k32"):
        plan.append(("open_case", True))
    if path in ("gamma_ge3", "k32"):
        plan += [("rq_guard", True), ("irregular_cusp_guard", True)]
    if path == "gamma_ge3" and query.n >= 6 and query.n not in (11, 13):
        plan.append(("uniform_bound", False))
    plan.append(("recipe", True))
    if total is None:
        return plan
    names = _EMBEDDING_PLANS.get(path, ())
    low, high = BORDERLINE_WINDOW
    if recipe == "exhaustive" and low <= total <= high:
        names = tuple("root_window_nonneg" if x == "root_window" else x for x in names)
    return plan + [(name, True) for name in names]


def derive_verdict(checks, citation=None, annotations=None):
    """The verdict implied by a list of checks.

    Empty when ``non_empty`` fails; the literature verdict when a citation
    is present and every required check passes; otherwise GeneralType or
    NonNegativeKodaira when every required check passes and the matching
    root window is among them; OpenCase when ``open_case`` fails; else
    Inconclusive.
    """
    annotations = annotations or {}
    by_name = {c.name: c for c in checks}
    if "non_empty" in by_name and not by_name["non_empty"].passed:
        return "Empty"
    if annotations.get("self_verification") is False:
        return "Inconclusive"
    all_required = bool(checks) and all(c.passed for c in checks if c.required)
    if all_required and citation is not None and "literature" in by_name:
        return "GeneralTypeLiterature"
    if all_required:
        if "root_window" in by_name or "root_window_og10" in by_name:
            return "GeneralType"
        if "root_window_nonneg" in by_name:
            return "NonNegativeKodaira"
    if "open_case" in by_name and not by_name["open_case"].passed:
        return "OpenCase"
    return "Inconclusive"
