"""Test the environment report."""

# License: MIT

from hkcert.base import BUDGET_ENV, DEFAULT_SEARCH_BUDGET
from hkcert.utils._show_versions import (
    _get_deps_info,
    _get_settings_info,
    show_versions,
)


def test_get_deps_info():
    deps_info = _get_deps_info()
    for name in ("hkcert", "sklearn", "numpy", "sympy", "pandas", "joblib", "tqdm"):
        assert name in deps_info
    assert deps_info["sympy"] is not None


def test_settings_follow_the_budget_variable(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    settings = _get_settings_info()
    assert settings["budget"] == DEFAULT_SEARCH_BUDGET
    assert settings["budget_src"] == "default"
    assert settings["cert_schema"] == 1 and settings["csv_schema"] == 1

    monkeypatch.setenv(BUDGET_ENV, "1234")
    settings = _get_settings_info()
    assert (settings["budget"], settings["budget_src"]) == (1234, BUDGET_ENV)

    monkeypatch.setenv(BUDGET_ENV, "-5")
    assert _get_settings_info()["budget"] == f"invalid {BUDGET_ENV}='-5'"


def test_show_versions_default(capsys):
    show_versions()
    out, _ = capsys.readouterr()
    assert "executable" in out
    assert "Certifier settings:" in out
    assert "sympy" in out
    assert "budget" in out


def test_show_versions_github(capsys):
    show_versions(github=True)
    out, _ = capsys.readouterr()
    assert out.startswith("<details><summary>System, Dependency and Settings")
    assert "**Python Dependencies**" in out
    assert "**Certifier Settings**" in out
    assert "* hkcert" in out
    assert out.rstrip().endswith("</details>")
