"""Test the command line interface."""

# License: MIT

import argparse
import io
import json

import pandas as pd
import pytest

from hkcert import cli
from hkcert.base import VERDICTS
from hkcert.certify import Certificate, ModuliQuery, certify, read_certificate


def _read_csv(text):
    lines = text.splitlines()
    assert lines[0].startswith("# hkcert-") and lines[0].endswith("csv_schema=1")
    return pd.read_csv(io.StringIO("\n".join(lines[1:])))


@pytest.mark.parametrize(
    "argv, code, verdict",
    [
        ("--family k3n --n 26 --d 225 --gamma 5 --a 1", 0, "GeneralType"),
        ("--family k3n --n 26 --two-d 450 --gamma 5 --a 1", 0, "GeneralType"),
        ("--family og10 --d 30 --gamma 3", 4, "Empty"),
        ("--family k3n --n 2 --d 11 --gamma 2", 3, "OpenCase"),
        ("--family og10 --d 33 --gamma 3", 0, "GeneralTypeLiterature"),
    ],
)
def test_certify_exit_codes(capsys, argv, code, verdict):
    assert cli.main(["certify"] + argv.split()) == code
    out, _ = capsys.readouterr()
    record = json.loads(out)
    assert record["verdict"] == verdict
    assert record["query"]["two_d"] == 2 * record["query"]["d"]


@pytest.mark.parametrize("verdict", VERDICTS)
def test_exit_code_contract(monkeypatch, capsys, verdict):
    monkeypatch.setattr(
        cli, "certify", lambda query, **kwargs: Certificate(query, None, verdict)
    )
    code = cli.main(["certify", "--family", "k3n", "--n", "2", "--d", "3", "--gamma", "2"])
    expected = {
        "GeneralType": 0,
        "GeneralTypeLiterature": 0,
        "NonNegativeKodaira": 2,
        "OpenCase": 3,
        "Inconclusive": 3,
        "Empty": 4,
    }
    assert code == expected[verdict]
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv, match",
    [
        (["--family", "k3n", "--n", "26", "--two-d", "451", "--gamma", "5"], "must be even"),
        (["--family", "k3n", "--n", "26", "--d", "225", "--gamma", "7"], "does not divide"),
        (["--family", "og10", "--d", "30", "--gamma", "2"], "must be 1 or 3"),
    ],
)
def test_certify_invalid_query(capsys, argv, match):
    assert cli.main(["certify"] + argv) == 1
    _, err = capsys.readouterr()
    assert match in err


@pytest.mark.parametrize(
    "argv",
    [
        ["certify", "--family", "k3n", "--n", "26", "--d", "225"],
        ["certify", "--family", "k3n", "--d", "2", "--two-d", "4", "--gamma", "1"],
        ["certify", "--family", "k3x", "--d", "2", "--gamma", "1"],
        ["sweep", "--family", "k3n", "--gamma", "1", "--d", "5:2"],
        [],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 1
    _, err = capsys.readouterr()
    assert "usage:" in err


def test_certify_json_and_verify(tmp_path, capsys):
    path = tmp_path / "cert.json"
    argv = ["certify", "--family", "og10", "--d", "564", "--gamma", "3", "--json", str(path)]
    assert cli.main(argv) == 0
    printed = capsys.readouterr().out
    assert read_certificate(path).to_json() == printed.strip()

    assert cli.main(["verify", str(path)]) == 0
    assert "verified (GeneralType)" in capsys.readouterr().out

    record = json.loads(path.read_text())
    record["root_count"]["fractional"] += 2
    path.write_text(json.dumps(record))
    assert cli.main(["verify", str(path)]) == cli.REJECTED
    assert "rejected" in capsys.readouterr().out


def test_verify_truncated_file(tmp_path, capsys):
    path = tmp_path / "cert.json"
    path.write_text(certify(ModuliQuery("k3n", 26, 225, 5, 1)).to_json()[:200])
    assert cli.main(["verify", str(path)]) == 1
    assert "Invalid JSON" in capsys.readouterr().err


def test_verify_missing_file(tmp_path, capsys):
    assert cli.main(["verify", str(tmp_path / "absent.json")]) == 1
    assert "error" in capsys.readouterr().err


def test_table_k32(capsys):
    assert cli.main(["table", "--family", "k32", "--t-min", "9", "--t-max", "14"]) == 0
    frame = _read_csv(capsys.readouterr().out).set_index("t")
    assert list(frame.columns) == list(cli.TABLE_COLUMNS[1:])
    assert frame.loc[9, "status"] == "open"
    assert frame.loc[10, "status"] == "literature:GHS13"
    assert frame.loc[11, "status"] == "open"
    assert frame.loc[12, "status"] == "literature:GHS13"
    assert (frame.loc[13, "tag"], frame.loc[13, "integral"], frame.loc[13, "fractional"]) == (
        "appendix",
        10,
        4,
    )
    assert frame.loc[14, "total"] == 14
    assert frame.loc[[13, 14], "matches_appendix"].tolist() == [True, True]
    assert frame.loc[[13, 14], "primitive"].tolist() == [True, True]


def test_table_k32_half_integer_and_tail(tmp_path):
    path = tmp_path / "k32.csv"
    argv = ["table", "--family", "k32", "--t-min", "21", "--t-max", "40"]
    assert cli.main(argv + ["-o", str(path)]) == 0
    frame = _read_csv(path.read_text()).set_index("t")
    assert frame.loc[21, "tag"] == "k32-half-integer"
    assert frame.loc[21, "fractional"] == 8
    assert (frame.loc[34:40, "fractional"] == 0).all()
    assert frame["matches_appendix"].dropna().astype(bool).all()


def test_table_og10(capsys):
    assert cli.main(["table", "--family", "og10", "--t-min", "3", "--t-max", "6"]) == 0
    frame = _read_csv(capsys.readouterr().out).set_index("t")
    assert frame.loc[3, "status"] == "open"
    assert frame.loc[4, "status"] == "literature:GHS11"
    assert (frame.loc[5, "integral"], frame.loc[5, "fractional"]) == (12, 2)
    assert (frame.loc[6, "integral"], frame.loc[6, "fractional"]) == (6, 4)
    # the tabulated fractional counts for t = 5, 6 are wrong
    assert frame.loc[[5, 6], "expected_fractional"].tolist() == [0, 0]
    assert frame.loc[[5, 6], "matches_appendix"].tolist() == [False, False]


def test_table_og10_matches_appendix(capsys):
    assert cli.main(["table", "--family", "og10", "--t-min", "63", "--t-max", "63"]) == 0
    (row,) = _read_csv(capsys.readouterr().out).to_dict("records")
    assert (row["integral"], row["fractional"]) == (4, 4)
    assert row["matches_appendix"]


def test_table_bad_range(capsys):
    assert cli.main(["table", "--family", "og10", "--t-min", "9", "--t-max", "5"]) == 1


@pytest.mark.parametrize(
    "text, expected",
    [("7", range(7, 8)), ("2:5", range(2, 6)), ("150:225:25", range(150, 226, 25))],
)
def test_parse_int_range(text, expected):
    assert cli.parse_int_range(text) == expected


@pytest.mark.parametrize("text", ["a", "5:2", "0:3", "1:2:0", "1:2:3:4"])
def test_parse_int_range_error(text):
    with pytest.raises(argparse.ArgumentTypeError, match="range"):
        cli.parse_int_range(text)


def test_sweep_first_certified_degree(tmp_path):
    output = tmp_path / "sweep.csv"
    certificates = tmp_path / "certs"
    argv = ["sweep", "--family", "k3n", "--n", "26", "--gamma", "5", "--d", "150:225:25"]
    argv += ["-o", str(output), "--certificates", str(certificates)]
    assert cli.main(argv) == 0
    frame = _read_csv(output.read_text())
    assert len(frame) == 8
    assert frame[["a", "d"]].values.tolist() == [
        [1, 150], [1, 175], [1, 200], [1, 225], [2, 150], [2, 175], [2, 200], [2, 225]
    ]
    first = frame.groupby("a")["first_certified_d"].first().to_dict()
    assert first == {1: 225, 2: 150}
    assert len(list(certificates.iterdir())) == 8
    assert (certificates / "k3n_n26_g5_a1_d225.json").exists()


def test_sweep_is_independent_of_workers(tmp_path):
    outputs = []
    for jobs in ("1", "2", "4"):
        path = tmp_path / f"sweep_{jobs}.csv"
        argv = ["sweep", "--family", "k3n", "--n", "9:11", "--gamma", "1:2", "--d", "3:8"]
        assert cli.main(argv + ["--jobs", jobs, "-o", str(path)]) == 0
        outputs.append(path.read_bytes())
    assert outputs[1:] == outputs[:1] * 2


def test_single_cell_sweep_matches_certify(tmp_path):
    path = tmp_path / "cell.csv"
    argv = ["sweep", "--family", "og10", "--gamma", "3", "--t", "63", "-o", str(path)]
    assert cli.main(argv) == 0
    (row,) = _read_csv(path.read_text()).to_dict("records")
    certificate = certify(ModuliQuery("og10", None, 564, 3))
    assert row["d"] == 564 and row["two_d"] == 1128
    assert row["verdict"] == certificate.verdict
    assert row["roots"] == certificate.root_count.total
    assert row["first_certified_d"] == 564


def test_sweep_one_marks_failures(monkeypatch):
    def broken(query, **kwargs):
        raise ArithmeticError("boom")

    monkeypatch.setattr(cli, "certify", broken)
    row = cli.sweep_one(ModuliQuery("k3n", 2, 12, 1, 0))
    assert row["verdict"] == "Error"
    assert "boom" in row["error"]


@pytest.mark.parametrize(
    "argv, parts",
    [
        (["14", "--mode", "three-positive-coprime"], [3, 2, 1]),
        (["26", "--mode", "n-or-n-minus-2"], [5, 1, 0]),
        (["5", "--mode", "gamma1"], [0, 0, 2, 1]),
    ],
)
def test_decompose(capsys, argv, parts):
    assert cli.main(["decompose"] + argv) == 0
    assert json.loads(capsys.readouterr().out)["parts"] == parts


def test_decompose_not_representable(capsys):
    assert cli.main(["decompose", "7", "--mode", "three-distinct-coprime"]) == cli.NOT_FOUND
    assert json.loads(capsys.readouterr().out)["parts"] is None


def test_solve(capsys):
    assert cli.main(["solve", "--alphas", "7", "1", "0", "--K", "-10"]) == 0
    solution = json.loads(capsys.readouterr().out)["solution"]
    assert solution["xs"] == [-1, -3, 1]
    assert solution["norm"] == 11
    assert solution["mode"] == "all_odd"


def test_solve_bad_mode(capsys):
    argv = ["solve", "--alphas", "7", "1", "0", "--K", "-10", "--mode", "one_even"]
    assert cli.main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_show_versions(capsys):
    assert cli.main(["show-versions"]) == 0
    assert "hkcert" in capsys.readouterr().out
