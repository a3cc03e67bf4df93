"""Environment report for bug reports: system, dependencies and the
certifier settings that change what a run certifies."""

# License: MIT

import importlib
import os
import sys

from ..base import (
    BUDGET_ENV,
    CERTIFICATE_SCHEMA_VERSION,
    CSV_SCHEMA_VERSION,
    STAR_BOUND,
    get_search_budget,
)

_DEPENDENCIES = ("pip", "setuptools", "hkcert", "sklearn", "numpy", "sympy", "pandas",
                 "joblib", "tqdm")  # fmt: skip


def _get_deps_info():
    """Installed version of each dependency, None when it is missing.

    Returns
    -------
    deps_info : dict
    """
    deps_info = {}
    for modname in _DEPENDENCIES:
        try:
            mod = sys.modules.get(modname) or importlib.import_module(modname)
        except ImportError:
            deps_info[modname] = None
            continue
        deps_info[modname] = getattr(mod, "__version__", None)
    return deps_info


def _get_settings_info():
    """Search budget, its source and the schema versions of the outputs."""
    raw = os.environ.get(BUDGET_ENV)
    try:
        budget = get_search_budget()
    except ValueError:
        budget = f"invalid {BUDGET_ENV}={raw!r}"
    return {
        "budget": budget,
        "budget_src": BUDGET_ENV if raw else "default",
        "star_bound": STAR_BOUND,
        "cert_schema": CERTIFICATE_SCHEMA_VERSION,
        "csv_schema": CSV_SCHEMA_VERSION,
    }


_SECTIONS = (
    ("System", "System Information"),
    ("Python dependencies", "Python Dependencies"),
    ("Certifier settings", "Certifier Settings"),
)


def show_versions(github=False):
    """Print debugging information.

    Parameters
    ----------
    github : bool, default=False
        Wrap the report in a collapsible GitHub block.
    """
    from sklearn.utils._show_versions import _get_sys_info

    infos = (_get_sys_info(), _get_deps_info(), _get_settings_info())
    if not github:
        for (title, _), info in zip(_SECTIONS, infos):
            print(f"\n{title}:")
            for k, stat in info.items():
                print(f"{k:>11}: {stat}")
        return

    body = ""
    for (_, title), info in zip(_SECTIONS, infos):
        body += f"**{title}**\n\n"
        body += "".join(f"* {k:<11}: `{stat}`\n" for k, stat in info.items())
        body += "\n"
    print(
        "<details>"
        "<summary>System, Dependency and Settings Information</summary>\n\n"
        f"{body}</details>"
    )
