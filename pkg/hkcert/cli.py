"""Command line interface of hkcert.

Examples
--------
Certify one component and keep the certificate::

    hkcert certify --family k3n --n 26 --d 225 --gamma 5 --a 1 --json cert.json
    hkcert verify cert.json

Reproduce the low-degree tables and sweep a grid of degrees::

    hkcert table --family og10 --t-min 4 --t-max 66
    hkcert sweep --family k3n --n 26 --gamma 5 --d 1:400 --jobs 4 -o sweep.csv
"""

# License: MIT

import argparse
import json
import logging
import os
import sys
import warnings
from dataclasses import dataclass
from functools import partial

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from ._version import __version__
from .arithmetic import (
    ParityMode,
    four_squares_constrained,
    four_squares_distinct_positive_coprime,
    solve_parity,
    three_distinct_coprime_of_n_or_n_minus_2,
    three_squares_distinct_coprime,
    three_squares_positive_coprime,
)
from .base import CSV_SCHEMA_VERSION, EXIT_CODES
from .certify import (
    ModuliQuery,
    certify,
    non_empty_components,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from .embeddings import (
    K32_APPENDIX,
    OG10_APPENDIX,
    OG10_EXPLICIT,
    embed_k32_div2,
    embed_og10_div3,
)
from .embeddings._appendix import K32_NO_FRACTIONAL, K32_T21, OG10_RECIPE_RANGE
from .exceptions import (
    HypothesisViolated,
    LiteratureCase,
    MalformedCertificate,
    NoSolution,
    OpenCase,
)
from .utils import show_versions

logger = logging.getLogger(__name__)

USAGE_ERROR = 1
NOT_FOUND = 3
REJECTED = 3

CERTIFIED = ("GeneralType", "GeneralTypeLiterature")

TABLE_COLUMNS = (
    "t",
    "status",
    "tag",
    "x1",
    "R",
    "theta",
    "parts",
    "integral",
    "fractional",
    "total",
    "primitive",
    "expected_fractional",
    "matches_appendix",
)

SWEEP_COLUMNS = (
    "family",
    "n",
    "gamma",
    "a",
    "d",
    "two_d",
    "t",
    "verdict",
    "roots",
    "chain",
    "citation",
    "first_certified_d",
    "error",
)

_NULLABLE_INT_COLUMNS = ("n", "t", "roots", "first_certified_d")

DECOMPOSE_MODES = {
    "three-positive-coprime": three_squares_positive_coprime,
    "three-distinct-coprime": three_squares_distinct_coprime,
    "four-distinct-positive-coprime": four_squares_distinct_positive_coprime,
    "coprime": partial(four_squares_constrained, mode="coprime"),
    "gamma1": partial(four_squares_constrained, mode="gamma1"),
    "k32": partial(four_squares_constrained, mode="k32"),
}


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def parse_int_range(text):
    """Parse ``"a"``, ``"a:b"`` or ``"a:b:step"`` into an inclusive range."""
    try:
        values = [int(v) for v in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    if len(values) == 1:
        values = values * 2
    if len(values) not in (2, 3) or (len(values) == 3 and values[2] < 1):
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    start, stop = values[:2]
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return range(start, stop + 1, values[2] if len(values) == 3 else 1)


def _write_csv(frame, path, comment):
    header = f"# {comment} csv_schema={CSV_SCHEMA_VERSION}\n"
    if path is None or path == "-":
        sys.stdout.write(header)
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(header)
        frame.to_csv(f, index=False, lineterminator="\n")


def _query_degree(args):
    if args.two_d is not None:
        if args.two_d % 2:
            raise ValueError(f"--two-d must be even, got {args.two_d}.")
        return args.two_d // 2
    return args.d


def cmd_certify(args):
    query = ModuliQuery(args.family, args.n, _query_degree(args), args.gamma, args.a)
    certificate = certify(query, exhaustive=args.exhaustive, budget=args.budget)
    if args.json is not None:
        write_certificate(certificate, args.json)
        logger.info(f"certificate written to {args.json}")
    print(certificate.to_json())
    return EXIT_CODES[certificate.verdict]


# --- table -------------------------------------------------------------------


def _expected_fractional(family, t, params):
    if family == "k32":
        if t == 21:
            return K32_T21["fractional"]
        if t in K32_APPENDIX:
            return K32_APPENDIX[t][4]
        if t in K32_NO_FRACTIONAL or t >= 34:
            return 0
        return None
    if t in OG10_EXPLICIT:
        return OG10_EXPLICIT[t][2]
    if t in OG10_APPENDIX:
        return OG10_APPENDIX[t][4]
    if t in OG10_RECIPE_RANGE:
        return 0
    if "theta" in params and 3 * params["x1"] + 1 > 2 * params["theta"] + sum(
        params["parts"]
    ):
        return 0
    return None


def table_row(family, t, budget=None):
    """One row of the low-degree table of ``family`` in ``{"k32", "og10"}``."""
    row = dict.fromkeys(TABLE_COLUMNS)
    row["t"] = t
    try:
        if family == "k32":
            embedding = embed_k32_div2(t)
        else:
            embedding = embed_og10_div3(t, budget=budget)
    except LiteratureCase as exc:
        row["status"] = f"literature:{exc.citation}"
        return row
    except OpenCase:
        row["status"] = "open"
        return row
    except HypothesisViolated as exc:
        row["status"] = f"failed:{exc.check_name}"
        return row

    params = embedding.params
    count = embedding.root_count()
    row.update(
        status="ok",
        tag=embedding.construction_tag,
        x1=params.get("x1"),
        R=params.get("R"),
        theta=params.get("theta"),
        parts=" ".join(str(p) for p in params.get("parts", params.get("v3", []))),
        integral=count.integral,
        fractional=count.fractional,
        total=count.total,
        primitive=embedding.is_primitive(),
    )
    if embedding.construction_tag != "search":
        expected = _expected_fractional(family, t, params)
        row["expected_fractional"] = expected
        if expected is not None:
            row["matches_appendix"] = expected == count.fractional
    return row


def cmd_table(args):
    if args.t_max < args.t_min:
        raise ValueError(f"--t-max={args.t_max} is below --t-min={args.t_min}.")
    ts = range(args.t_min, args.t_max + 1)
    with warnings.catch_warnings():
        if not args.verbose:
            warnings.filterwarnings("ignore", message="Tabulated embedding")
        rows = [
            table_row(args.family, t, args.budget)
            for t in tqdm(ts, desc=f"{args.family} table", disable=None)
        ]
    frame = pd.DataFrame(rows, columns=TABLE_COLUMNS)
    _write_csv(frame, args.output, f"hkcert-table family={args.family}")
    return 0


# --- sweep -------------------------------------------------------------------


@dataclass
class SweepSpec:
    """A grid of moduli spaces to certify.

    Parameters
    ----------
    family : {"k3n", "og10"}

    n_values : range
        Ignored for OG10.

    gamma_values : range

    d_values : range

    n_jobs : int, default=1

    budget : int, default=None

    exhaustive : bool, default=False

    certificate_dir : str, default=None
        Directory receiving one JSON certificate per component.
    """

    family: str
    n_values: range
    gamma_values: range
    d_values: range
    n_jobs: int = 1
    budget: int = None
    exhaustive: bool = False
    certificate_dir: str = None

    def __post_init__(self):
        if self.n_jobs < 1:
            raise ValueError(f"'n_jobs' must be at least 1, got {self.n_jobs}.")

    def queries(self):
        """Every non-empty component of the grid, sorted by query key."""
        queries = []
        ns = (None,) if self.family == "og10" else self.n_values
        for n in ns:
            for gamma in self.gamma_values:
                if n is not None and (2 * (n - 1)) % gamma:
                    continue
                for d in self.d_values:
                    for a in non_empty_components(self.family, n, d, gamma):
                        queries.append(ModuliQuery(self.family, n, d, gamma, a))
        return sorted(queries, key=lambda q: q.key)


def _certificate_name(query):
    n = "" if query.n is None else f"_n{query.n}"
    return f"{query.family}{n}_g{query.gamma}_a{query.a}_d{query.d}.json"


def sweep_one(query, exhaustive=False, budget=None, certificate_dir=None):
    """Certify one component and summarise it as a sweep row."""
    row = dict.fromkeys(SWEEP_COLUMNS)
    row.update(
        family=query.family,
        n=query.n,
        gamma=query.gamma,
        a=query.a,
        d=query.d,
        two_d=2 * query.d,
    )
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            certificate = certify(query, exhaustive=exhaustive, budget=budget)
        if certificate_dir is not None:
            write_certificate(
                certificate, os.path.join(certificate_dir, _certificate_name(query))
            )
    except (ValueError, ArithmeticError, OSError) as exc:
        logger.warning(f"sweep query {query} failed: {exc!r}")
        row["verdict"] = "Error"
        row["error"] = repr(exc)
        return row
    row.update(
        t=certificate.t,
        verdict=certificate.verdict,
        roots=None if certificate.root_count is None else certificate.root_count.total,
        chain=">".join(step.name for step in certificate.reduction_chain),
        citation=certificate.citation,
    )
    return row


def run_sweep(spec):
    """Certify every query of ``spec`` and return the summary table.

    Rows come out sorted by query key whatever ``spec.n_jobs`` is, and carry
    the first certified degree of their component.
    """
    queries = spec.queries()
    logger.info(f"sweeping {len(queries)} components with {spec.n_jobs} workers")
    if spec.certificate_dir is not None:
        os.makedirs(spec.certificate_dir, exist_ok=True)
    rows = Parallel(n_jobs=spec.n_jobs)(
        delayed(sweep_one)(q, spec.exhaustive, spec.budget, spec.certificate_dir)
        for q in tqdm(queries, desc="sweep", disable=None)
    )

    first = {}
    for row in rows:
        key = (row["family"], row["n"], row["gamma"], row["a"])
        if row["verdict"] in CERTIFIED and key not in first:
            first[key] = row["d"]
    for row in rows:
        row["first_certified_d"] = first.get(
            (row["family"], row["n"], row["gamma"], row["a"])
        )
    frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    return frame.astype({c: "Int64" for c in _NULLABLE_INT_COLUMNS})


def cmd_sweep(args):
    if args.family == "og10" and args.t is not None:
        d_values = range(9 * args.t.start - 3, 9 * args.t.stop - 3, 9 * args.t.step)
    elif args.d is not None:
        d_values = args.d
    else:
        raise ValueError("sweep needs --d (or --t for og10).")
    if args.family == "k3n" and args.n is None:
        raise ValueError("sweep over k3n needs --n.")
    spec = SweepSpec(
        family=args.family,
        n_values=args.n if args.n is not None else range(0),
        gamma_values=args.gamma,
        d_values=d_values,
        n_jobs=args.jobs,
        budget=args.budget,
        exhaustive=args.exhaustive,
        certificate_dir=args.certificates,
    )
    frame = run_sweep(spec)
    _write_csv(frame, args.output, f"hkcert-sweep family={args.family}")
    n_errors = int((frame["verdict"] == "Error").sum())
    if n_errors:
        logger.warning(f"{n_errors} sweep rows failed")
    return 0


# --- utilities -----------------------------------------------------------------


def cmd_decompose(args):
    if args.mode == "n-or-n-minus-2":
        found = three_distinct_coprime_of_n_or_n_minus_2(args.value)
        target, decomposition = found if found is not None else (None, None)
    else:
        target, decomposition = args.value, DECOMPOSE_MODES[args.mode](args.value)
    record = {
        "value": args.value,
        "mode": args.mode,
        "target": target,
        "parts": None if decomposition is None else list(decomposition.parts),
    }
    print(json.dumps(record, sort_keys=True))
    return 0 if decomposition is not None else NOT_FOUND


def cmd_solve(args):
    mode = None if args.mode is None else ParityMode(args.mode)
    try:
        solution = solve_parity(args.alphas, args.K, mode)
    except NoSolution as exc:
        print(json.dumps({"alphas": args.alphas, "K": args.K, "solution": None}))
        logger.info(f"no solution: {exc}")
        return NOT_FOUND
    record = {
        "alphas": args.alphas,
        "K": args.K,
        "solution": {
            "xs": list(solution.xs),
            "norm": solution.norm,
            "max_abs": solution.max_abs,
            "bound": solution.bound,
            "mode": solution.mode.value,
        },
    }
    print(json.dumps(record, sort_keys=True))
    return 0


def cmd_verify(args):
    certificate = read_certificate(args.path)
    ok = verify_certificate(certificate)
    print(f"{args.path}: {'verified' if ok else 'rejected'} ({certificate.verdict})")
    return 0 if ok else REJECTED


def cmd_show_versions(args):
    show_versions(github=args.github)
    return 0


def build_parser():
    """The ``hkcert`` argument parser with one subcommand per task."""
    parser = _ArgumentParser(
        prog="hkcert",
        description="Certify Kodaira dimension verdicts for moduli of "
        "polarized hyperkaehler varieties of K3^[n] and OG10 type.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more logging, repeatable"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("certify", help="certify one moduli space")
    p.add_argument("--family", choices=("k3n", "og10"), required=True)
    p.add_argument("--n", type=int, help="K3^[n] type; omitted for og10")
    degree = p.add_mutually_exclusive_group(required=True)
    degree.add_argument("--d", type=int, help="half the degree 2d")
    degree.add_argument("--two-d", type=int, help="the degree 2d")
    p.add_argument("--gamma", type=int, required=True, help="divisibility")
    p.add_argument("--a", type=int, help="component label")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--json", metavar="PATH", help="also write the certificate")
    p.set_defaults(func=cmd_certify)

    p = subparsers.add_parser("table", help="reproduce the low-degree tables")
    p.add_argument("--family", choices=("k32", "og10"), required=True)
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = subparsers.add_parser("sweep", help="certify a grid of moduli spaces")
    p.add_argument("--family", choices=("k3n", "og10"), required=True)
    p.add_argument("--n", type=parse_int_range, metavar="RANGE")
    p.add_argument("--gamma", type=parse_int_range, required=True, metavar="RANGE")
    p.add_argument("--d", type=parse_int_range, metavar="RANGE")
    p.add_argument("--t", type=parse_int_range, metavar="RANGE", help="og10 only")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--certificates", metavar="DIR")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = subparsers.add_parser("decompose", help="sums of squares")
    p.add_argument("value", type=int)
    p.add_argument(
        "--mode",
        choices=tuple(DECOMPOSE_MODES) + ("n-or-n-minus-2",),
        default="three-distinct-coprime",
    )
    p.set_defaults(func=cmd_decompose)

    p = subparsers.add_parser("solve", help="parity-constrained linear equation")
    p.add_argument("--alphas", type=int, nargs=3, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in ParityMode])
    p.set_defaults(func=cmd_solve)

    p = subparsers.add_parser("verify", help="re-check a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser("show-versions", help="print dependency versions")
    p.add_argument("--github", action="store_true")
    p.set_defaults(func=cmd_show_versions)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (MalformedCertificate, OSError) as exc:
        print(f"hkcert: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ArithmeticError) as exc:
        print(f"hkcert {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
