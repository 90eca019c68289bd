import json
import re
import shlex
from pathlib import Path

import pytest

from lieflag.cli import run

GOLDEN = Path(__file__).parent / "golden"


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _cases():
    cases = []
    for line in (GOLDEN / "manifest.tsv").read_text().splitlines():
        name, argv = line.split("\t")
        cases.append(pytest.param(name, shlex.split(argv), id=name))
    return cases


def _int_tokens(text: str) -> set:
    return set(re.findall(r"\d+", text))


@pytest.mark.parametrize("name,argv", _cases())
def test_golden_text_and_json(capsys, name, argv):
    code, out, err = _run(capsys, argv)
    assert code == 0 and err == ""
    assert out == (GOLDEN / f"{name}.txt").read_text()

    code, out, err = _run(capsys, argv + ["--json"])
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()
    payload = json.loads(out)
    assert json.loads(json.dumps(payload)) == payload

    # every number shown in text mode must appear in the JSON document
    text = (GOLDEN / f"{name}.txt").read_text()
    missing = _int_tokens(text) - _int_tokens(out)
    assert not missing, f"numbers {missing} missing from JSON of {name}"


def test_json_flag_position_irrelevant(capsys):
    _, before, _ = _run(capsys, ["--json", "rmin", "G2"])
    _, after, _ = _run(capsys, ["rmin", "G2", "--json"])
    assert before == after


def test_specific_numbers_agree_between_modes(capsys):
    _, out, _ = _run(capsys, ["rmin", "G2"])
    assert "r=5" in out
    _, out, _ = _run(capsys, ["rmin", "G2", "--json"])
    assert json.loads(out)["r"] == 5
    _, out, _ = _run(capsys, ["weyl-dim", "A1", "--weight", "3", "--json"])
    assert json.loads(out)["dim"] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["no-such-command"],
        ["roots"],
        ["roots", "Z9"],
        ["roots", "A0"],
        ["parabolic", "A2", "--nodes", "1,2,3"],
        ["parabolic", "A2", "--nodes", "x"],
        ["weyl-dim", "A2", "--weight", "1"],
        ["weyl-dim", "A2", "--weight", "1,2,3"],
        ["fano-index", "B2", "--node", "5"],
        ["bwb", "A2", "--nodes", "1", "--weight", "1,0", "--power", "0"],
        ["hilbert", "A2", "--nodes", "1", "--weight", "1,0", "--kmax", "0"],
        ["classify", "--group", "SO", "--param", "4", "--dim", "3"],
        ["orbits", "--variety", "P^n", "--params", "n-4"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 2
    assert out == ""


@pytest.mark.parametrize(
    "argv,error",
    [
        (["weyl-dim", "A2", "--weight=-1,0"], "NonDominantWeight"),
        (["cone-cover", "--c1", "0,0"], "ZeroClass"),
        (["classify", "--group", "SL", "--param", "1", "--dim", "2"], "InvalidGroup"),
        (["classify", "--group", "Sp", "--param", "5", "--dim", "4"], "InvalidGroup"),
        (["classify", "--group", "SL", "--param", "3", "--dim=-1"], "InvalidDimension"),
        (["bwb", "A2", "--nodes", "1", "--weight", "0,1", "--power", "2"], "UnsupportedWeight"),
        (["orbits", "--variety", "W^9", "--params", "n=4"], "UnknownVariety"),
        (["orbits", "--variety", "Q^4", "--params", "n=4"], "UnknownVariety"),
        (
            ["orbits", "--variety", "P(O(m)+O)/P^{n-1}", "--case", "SL", "--params", "n=4,m=0"],
            "ParameterViolation",
        ),
        (["relations", "--variety", "W^9"], "UnknownVariety"),
        (["--db", "/no/such/file", "validate-db"], "DatabaseFormatError"),
    ],
)
def test_domain_errors_exit_1_with_error_name(capsys, argv, error):
    code, out, err = _run(capsys, argv)
    assert code == 1
    assert error in err


def test_validate_db_exit_reflects_violations(capsys, tmp_path):
    bad = tmp_path / "bad.db"
    bad.write_text(
        "record = P^n\ncase = Spin\nsource = Thm4.1\nitem = 1\n"
        "requires = n >= 6\ndim = n\npicard = 1\n"
        "orbit = fixed dim=0\norbit = open dim=n\n"
    )
    code, out, err = _run(capsys, ["--db", str(bad), "validate-db"])
    assert code == 1
    assert "rule=R2" in out


def test_db_env_var_and_flag_precedence(capsys, tmp_path, monkeypatch):
    tiny = tmp_path / "tiny.db"
    tiny.write_text(
        "record = OnlyOne\ncase = SL\nsource = Thm4.1\nitem = 1\n"
        "requires = n >= 2\ndim = n\npicard = 1\norbit = open dim=n\n"
    )
    monkeypatch.setenv("LIEFLAG_DB", str(tiny))
    code, out, err = _run(capsys, ["classify", "--group", "SL", "--param", "4", "--dim", "4"])
    assert code == 0 and "OnlyOne" in out

    # explicit flag wins over the environment
    code, out, err = _run(
        capsys,
        ["--db", str(GOLDEN.parent.parent / "src/lieflag/data/classification.db"),
         "classify", "--group", "SL", "--param", "4", "--dim", "4"],
    )
    assert code == 0 and "OnlyOne" not in out and "Gr(2,4)" in out
