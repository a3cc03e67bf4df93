"""Independent verification of certificates."""

# License: MIT

import logging

from ..exceptions import HypothesisViolated, MalformedCertificate
from ..lattice import roots_orthogonal_to
from ._certificate import Certificate
from ._checks import (
    PATH_RECIPES,
    CheckContext,
    check_plan,
    derive_verdict,
    literature_status,
    recheck,
    recipe_path,
)
from ._moduli import og10_t_of, t_of
from ._reductions import rebuild_step

logger = logging.getLogger(__name__)


def _fail(reason):
    logger.info(f"certificate rejected: {reason}")
    return False


def _query_t(query):
    if query.family == "og10":
        return og10_t_of(query.d) if query.gamma == 3 else query.d
    return t_of(query.n, query.d, query.gamma, query.a)


def _recipe_check(certificate):
    for check in certificate.checks:
        if check.name == "recipe" and isinstance(check.expected, dict):
            return check
    return None


def _verify(certificate, stored_validity):
    query = certificate.query
    if certificate.verdict == "Empty":
        ctx = CheckContext(query=query, target=(query.n, query.d, query.gamma, query.a))
        carried = (
            certificate.embedding,
            certificate.reduction_chain or None,
            certificate.root_count,
            certificate.t,
            certificate.citation,
        )
        if any(x is not None for x in carried):
            return _fail("an empty space carries an embedding, t or citation")
        plan = [("non_empty", True)]
    else:
        if certificate.t != _query_t(query):
            return _fail(f"t={certificate.t} does not match the query")
        source = (query.n, query.d, query.gamma, query.a)
        for i, step in enumerate(certificate.reduction_chain):
            if tuple(step.source) != source:
                return _fail(f"reduction step {i} does not start at {source}")
            if rebuild_step(step.name, step.source, step.param) != step:
                return _fail(f"reduction step {i} is not the canonical {step.name}")
            valid = step.check()
            if not valid or (stored_validity and stored_validity[i] is not valid):
                return _fail(f"reduction step {i} does not preserve the Gram matrix")
            source = tuple(step.target)
        target = certificate.target
        t = _query_t(query) if query.family == "og10" else t_of(*target)
        total = None
        if certificate.embedding is not None:
            count = roots_orthogonal_to(certificate.embedding.images)
            if certificate.root_count is None or (
                (count.integral, count.fractional)
                != (certificate.root_count.integral, certificate.root_count.fractional)
            ):
                return _fail("root count does not match")
            total = count.total
        elif certificate.root_count is not None:
            return _fail("root count without an embedding")

        recipe = _recipe_check(certificate)
        recipe_name = recipe.expected.get("recipe") if recipe is not None else None
        plan = check_plan(
            query, target, t, bool(certificate.reduction_chain), recipe_name, total
        )
        if ("recipe", True) in plan:
            path = recipe_path(query.family, target)
            if recipe_name not in PATH_RECIPES[path]:
                return _fail(f"recipe {recipe_name!r} does not apply to {path}")
            if (recipe.observed == "ok") != (certificate.embedding is not None):
                return _fail("embedding does not match the recipe outcome")
        elif certificate.embedding is not None:
            return _fail("embedding without a recipe")
        citation = None
        if ("literature", True) in plan:
            _, citation = literature_status(query.family, target, t)
        if certificate.citation != citation:
            return _fail(f"citation {certificate.citation!r} is not {citation!r}")
        ctx = CheckContext(
            query=query,
            target=target,
            t=t,
            chain=certificate.reduction_chain,
            embedding=certificate.embedding,
            citation=certificate.citation,
        )

    carried = [(c.name, c.required) for c in certificate.checks]
    if carried != plan:
        return _fail(f"checks {carried} differ from the required {plan}")
    for check in certificate.checks:
        if not recheck(check, ctx):
            return _fail(f"check {check.name} does not recompute")
    verdict = derive_verdict(
        certificate.checks, certificate.citation, certificate.annotations
    )
    if verdict != certificate.verdict:
        return _fail(f"checks imply {verdict}, not {certificate.verdict}")
    return True


def verify_certificate(certificate):
    """Recompute a certificate from scratch.

    Gram matrices, primitivity, root counts, every named check and every
    reduction step are recomputed; the verdict must follow from the
    recomputed checks. The names and ``required`` flags of the checks must
    be exactly those :func:`check_plan` prescribes for the certificate's
    family, reduction chain and recipe, so no failing check can be dropped
    or demoted.

    Parameters
    ----------
    certificate : Certificate or dict
        A dict is parsed with :meth:`Certificate.from_dict` and the stored
        validity flags of its reduction steps are compared as well.

    Returns
    -------
    ok : bool

    Raises
    ------
    MalformedCertificate
        If ``certificate`` does not have the shape of a certificate.
    """
    stored_validity = None
    if isinstance(certificate, dict):
        try:
            stored_validity = [
                step.get("valid") for step in certificate.get("reduction_chain") or []
            ]
        except AttributeError as exc:
            raise MalformedCertificate(f"Bad reduction chain: {exc}") from exc
        certificate = Certificate.from_dict(certificate)
    elif not isinstance(certificate, Certificate):
        raise MalformedCertificate(
            f"Expected a Certificate or a dict, got {type(certificate)}."
        )
    try:
        return _verify(certificate, stored_validity)
    except (ValueError, ArithmeticError, HypothesisViolated) as exc:
        return _fail(repr(exc))
