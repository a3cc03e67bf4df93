"""Queries, check records and certificates with their JSON form."""

# License: MIT

import json
import os
import tempfile
from dataclasses import dataclass, field

from ..base import CERTIFICATE_SCHEMA_VERSION, VERDICTS
from ..embeddings import Embedding
from ..exceptions import DivisibilityViolation, MalformedCertificate, raise_isinstance_error
from ..lattice import RootCount
from ..utils._validation_param import check_family, check_integer, check_positive_int
from ._reductions import ReductionStep


@dataclass(frozen=True)
class ModuliQuery:
    """Numerical type of a moduli space, optionally with a component.

    Parameters
    ----------
    family : {"k3n", "og10"}

    n : int or None
        ``n >= 2`` for K3^[n] type, ``None`` for OG10.

    d : int
        Half the degree ``2d``.

    gamma : int
        Divisibility. Must divide ``2(n-1)`` for K3^[n] type and lie in
        ``{1, 3}`` for OG10.

    a : int, default=None
        Component label. ``None`` lets :func:`certify` pick.
    """

    family: str
    n: int
    d: int
    gamma: int
    a: int = None

    def __post_init__(self):
        check_family(self.family)
        object.__setattr__(self, "d", check_positive_int(self.d, "d"))
        object.__setattr__(self, "gamma", check_positive_int(self.gamma, "gamma"))
        if self.a is not None:
            if isinstance(self.a, bool) or not isinstance(self.a, int):
                raise_isinstance_error("a", [int, None], self.a)
            object.__setattr__(self, "a", check_positive_int(self.a, "a", 0))
        if self.family == "og10":
            object.__setattr__(self, "n", None)
            if self.gamma not in (1, 3):
                raise ValueError(f"OG10 divisibility must be 1 or 3, got {self.gamma}.")
            return
        object.__setattr__(self, "n", check_positive_int(self.n, "n", 2))
        if (2 * (self.n - 1)) % self.gamma:
            raise DivisibilityViolation(
                f"gamma={self.gamma} does not divide 2(n-1)={2 * (self.n - 1)}."
            )

    @property
    def key(self):
        """Sort key used by sweeps."""
        a = -1 if self.a is None else self.a
        return (self.family, self.n or 0, self.gamma, a, self.d)

    def with_label(self, a):
        return ModuliQuery(self.family, self.n, self.d, self.gamma, a)

    def to_dict(self):
        return {
            "family": self.family,
            "n": self.n,
            "d": self.d,
            "two_d": 2 * self.d,
            "gamma": self.gamma,
            "a": self.a,
        }

    @classmethod
    def from_dict(cls, record):
        return cls(
            family=record["family"],
            n=record.get("n"),
            d=record["d"],
            gamma=record["gamma"],
            a=record.get("a"),
        )


@dataclass(frozen=True)
class Check:
    """A named hypothesis with the value that was expected and observed.

    ``required=False`` marks informational checks that never change the
    verdict.
    """

    name: str
    expected: object
    observed: object
    passed: bool
    required: bool = True
    note: str = None

    def to_dict(self):
        record = {
            "name": self.name,
            "expected": self.expected,
            "observed": self.observed,
            "pass": bool(self.passed),
            "required": self.required,
        }
        if self.note is not None:
            record["note"] = self.note
        return record

    @classmethod
    def from_dict(cls, record):
        return cls(
            name=record["name"],
            expected=record["expected"],
            observed=record["observed"],
            passed=record["pass"],
            required=record.get("required", True),
            note=record.get("note"),
        )


@dataclass(frozen=True)
class Certificate:
    """Audit trail of a verdict.

    Attributes
    ----------
    query : ModuliQuery
        The query with its component label resolved.

    t : int or None
        ``t`` of the query, ``None`` when the space is empty.

    verdict : str
        One of :data:`hkcert.base.VERDICTS`.

    reduction_chain : tuple of ReductionStep
        Applied in order; the last target carries the embedding.

    embedding : Embedding or None

    root_count : RootCount or None

    checks : tuple of Check

    citation : str or None
        Literature key for ``GeneralTypeLiterature``.

    annotations : dict
        Informational entries, never used to derive the verdict except
        ``self_verification``.
    """

    query: ModuliQuery
    t: int
    verdict: str
    reduction_chain: tuple = ()
    embedding: Embedding = None
    root_count: RootCount = None
    checks: tuple = ()
    citation: str = None
    annotations: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"Unknown verdict {self.verdict!r}.")

    @property
    def target(self):
        """``(n, d, gamma, a)`` of the space carrying the embedding."""
        if self.reduction_chain:
            return tuple(self.reduction_chain[-1].target)
        q = self.query
        return (q.n, q.d, q.gamma, q.a)

    def check(self, name):
        """The first check called ``name`` or None."""
        return next((c for c in self.checks if c.name == name), None)

    @property
    def failed_checks(self):
        return [c.name for c in self.checks if c.required and not c.passed]

    def to_dict(self):
        return {
            "schema_version": CERTIFICATE_SCHEMA_VERSION,
            "query": self.query.to_dict(),
            "t": self.t,
            "verdict": self.verdict,
            "citation": self.citation,
            "reduction_chain": [step.to_dict() for step in self.reduction_chain],
            "embedding": None if self.embedding is None else self.embedding.to_dict(),
            "root_count": None if self.root_count is None else self.root_count.as_dict(),
            "checks": [c.to_dict() for c in self.checks],
            "annotations": dict(self.annotations),
        }

    @classmethod
    def from_dict(cls, record):
        """Rebuild a certificate; shape errors raise MalformedCertificate."""
        if not isinstance(record, dict):
            raise MalformedCertificate(f"Expected a JSON object, got {type(record)}.")
        if record.get("schema_version") != CERTIFICATE_SCHEMA_VERSION:
            raise MalformedCertificate(
                f"Unsupported schema_version {record.get('schema_version')!r}."
            )
        try:
            root_count = record["root_count"]
            if root_count is not None:
                root_count = RootCount(
                    check_integer(root_count["integral"], "integral"),
                    check_integer(root_count["fractional"], "fractional"),
                )
            embedding = record["embedding"]
            if embedding is not None:
                embedding = Embedding.from_dict(embedding)
            return cls(
                query=ModuliQuery.from_dict(record["query"]),
                t=record["t"],
                verdict=record["verdict"],
                reduction_chain=tuple(
                    ReductionStep.from_dict(step) for step in record["reduction_chain"]
                ),
                embedding=embedding,
                root_count=root_count,
                checks=tuple(Check.from_dict(c) for c in record["checks"]),
                citation=record.get("citation"),
                annotations=dict(record.get("annotations") or {}),
            )
        except MalformedCertificate:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificate(f"Malformed certificate: {exc!r}") from exc

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(f"Invalid JSON: {exc}") from exc
        return cls.from_dict(record)


def write_certificate(certificate, path):
    """Write ``certificate`` as UTF-8 JSON, atomically replacing ``path``."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hkcert-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(certificate.to_json())
            f.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def read_certificate(path):
    with open(path, encoding="utf-8") as f:
        return Certificate.from_json(f.read())
