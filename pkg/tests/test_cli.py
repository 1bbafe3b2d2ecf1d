import csv
import json

import pytest

from cli.commands import run
from cli.parser import load_algebra, parse_algebra
from core.errors import InputError


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _write(tmp_path, data, name="algebra.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def _gl2_without_levi(data_dir):
    data = json.loads((data_dir / "gl2.json").read_text())
    data.pop("levi")
    return data


# =========================
# Parsing
# =========================

def test_parse_bundled_sl2(data_dir):
    loaded = parse_algebra(data_dir / "sl2.json")
    assert loaded.algebra.basis == ("f", "h", "e")
    assert loaded.levi is None
    assert loaded.group_action is None


def test_parse_levi_vectors():
    loaded = load_algebra({
        "name": "gl2",
        "basis": ["z", "f", "h", "e"],
        "brackets": [
            {"i": 1, "j": 2, "coeffs": {"1": "2"}},
            {"i": 1, "j": 3, "coeffs": {"2": "-1"}},
            {"i": 2, "j": 3, "coeffs": {"3": "2"}},
        ],
        "levi_vectors": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    })
    assert loaded.levi.coordinate_indices() == [1, 2, 3]


@pytest.mark.parametrize(
    "record, fragment",
    [
        ({"i": 1, "j": 1, "coeffs": {"0": "1"}}, "i = j"),
        ({"i": 1, "j": 0, "coeffs": {"0": "1"}}, "i < j"),
        ({"i": 0, "j": 1, "coeffs": {"0": "1/0"}}, "zero denominator"),
        ({"i": 0, "j": 1, "coeffs": {"0": "0.5"}}, "malformed"),
        ({"i": 0, "j": 5, "coeffs": {}}, "out of range"),
        ({"i": 0, "j": 1}, "missing"),
    ],
)
def test_parse_rejects_bad_records(record, fragment):
    with pytest.raises(InputError) as info:
        load_algebra({"name": "bad", "basis": ["a", "b", "c"], "brackets": [record]})
    assert fragment in str(info.value)
    assert "brackets[0]" in str(info.value)


def test_parse_rejects_duplicate_records():
    record = {"i": 0, "j": 1, "coeffs": {"2": "1"}}
    with pytest.raises(InputError, match="duplicate"):
        load_algebra({"name": "dup", "basis": ["a", "b", "c"], "brackets": [record, record]})


def test_parse_rejects_dim_mismatch():
    with pytest.raises(InputError, match="dim"):
        load_algebra({"name": "d", "dim": 4, "basis": ["a", "b", "c"], "brackets": []})


def test_parse_reports_json_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "name": "x",\n  "basis": [,]\n}\n')
    with pytest.raises(InputError, match="line 3"):
        parse_algebra(path)


# =========================
# Commands
# =========================

@pytest.mark.parametrize(
    "argv, expected",
    [
        (["validate", "sl2.json"], 0),
        (["validate", "gl2.json"], 0),
        (["validate", "heis3.json"], 0),
        (["validate", "abelian3.json"], 0),
        (["validate", "sl2_semidirect_c2.json"], 0),
        (["validate", "broken_jacobi.json"], 1),
        (["classify", "broken_jacobi.json"], 1),
        (["obstruction", "broken_jacobi.json"], 1),
        (["classify", "sl2.json"], 0),
        (["homology", "heis3.json"], 0),
        (["obstruction", "heis3.json"], 0),
        (["obstruction", "sl2_semidirect_c2.json", "--truncate", "2"], 0),
        (["obstruction", "gl2.json", "--levi", "2"], 1),
        (["validate", "missing.json"], 3),
    ],
)
def test_exit_codes(capsys, data_dir, argv, expected):
    command, name, *rest = argv
    code, _, _ = _run(capsys, command, str(data_dir / name), *rest)
    assert code == expected


def test_classify_sl2_human(capsys, data_dir):
    code, out, _ = _run(capsys, "classify", str(data_dir / "sl2.json"))
    assert code == 0
    assert "semisimple, dim radical = 0" in out


def test_validate_broken_reports_the_triple(capsys, data_dir):
    code, out, _ = _run(capsys, "validate", str(data_dir / "broken_jacobi.json"), "--json")
    report = json.loads(out)
    assert code == 1
    assert report["result"]["violation"] == ["f", "h", "e"]
    assert report["result"]["residue"] == {"h": "-1"}


def test_homology_json(capsys, data_dir):
    code, out, _ = _run(capsys, "homology", str(data_dir / "heis3.json"), "--json")
    report = json.loads(out)
    assert code == 0
    assert report["schema"] == "lieamk/1"
    assert report["command"] == "homology"
    assert report["exit_code"] == 0
    assert report["result"]["betti"] == [1, 2, 2, 1]
    assert report["result"]["d_squared_zero"] is True


def test_homology_single_degree_and_adjoint(capsys, data_dir):
    code, out, _ = _run(capsys, "homology", str(data_dir / "sl2.json"), "--degree", "3", "--json")
    assert code == 0
    assert json.loads(out)["result"]["betti"] == [1]

    code, out, _ = _run(capsys, "homology", str(data_dir / "sl2.json"), "--coeffs", "adjoint", "--json")
    assert json.loads(out)["result"]["betti"] == [0, 0, 0, 0]


def test_homology_bad_degree(capsys, data_dir):
    code, _, err = _run(capsys, "homology", str(data_dir / "sl2.json"), "--degree", "7")
    assert code == 3
    assert "degree" in err


def test_obstruction_gl2(capsys, data_dir):
    code, out, _ = _run(capsys, "obstruction", str(data_dir / "gl2.json"), "--levi", "1,2,3", "--truncate", "4")
    assert code == 0
    assert "C1 ✓ C2 ✓ C3 ✓" in out


def test_obstruction_solvable(capsys, data_dir):
    code, out, _ = _run(capsys, "obstruction", str(data_dir / "heis3.json"))
    assert code == 0
    assert "solvable: no obstruction (k=0)" in out


def test_obstruction_mixed_without_levi_is_an_input_error(capsys, tmp_path, data_dir):
    path = _write(tmp_path, _gl2_without_levi(data_dir))
    code, _, err = _run(capsys, "obstruction", path)
    assert code == 3
    assert "Levi" in err


def test_obstruction_json_matches_human_report(capsys, data_dir):
    path = str(data_dir / "sl2.json")
    code, out, _ = _run(capsys, "obstruction", path, "--json")
    report = json.loads(out)
    assert code == 0
    assert report == {
        "schema": "lieamk/1",
        "command": "obstruction",
        "file": path,
        "state": "PASS",
        "result": report["result"],
        "exit_code": 0,
    }
    assert report["result"]["state"] == report["state"]
    assert report["result"]["k"] == 3
    assert report["result"]["xi"] == {"f^h^e": "1"}
    assert all(c["passed"] for c in report["result"]["checks"].values())

    human_code, human, _ = _run(capsys, "obstruction", path)
    assert human_code == report["exit_code"]
    assert "C1 ✓ C2 ✓ C3 ✓" in human
    assert f"{report['state']}: {report['result']['reason']}" in human
    assert f"k = {report['result']['k']}" in human


@pytest.mark.parametrize(
    "argv, state",
    [
        (["homology", "heis3.json"], "COMPUTED"),
        (["obstruction", "heis3.json"], "VACUOUS"),
        (["validate", "broken_jacobi.json"], "INVALID"),
        (["classify", "sl2.json"], "SEMISIMPLE"),
        (["smash-check", "z2_line.json", "--cases", "20"], "PASS"),
    ],
)
def test_json_report_carries_state(capsys, data_dir, argv, state):
    command, name, *rest = argv
    code, out, _ = _run(capsys, command, str(data_dir / name), *rest, "--json")
    report = json.loads(out)
    assert report["state"] == state
    assert report["exit_code"] == code


@pytest.mark.parametrize(
    "record",
    [
        {"i": 1, "j": 1, "coeffs": {"0": "1"}},
        {"i": 0, "j": 1, "coeffs": {"0": "1/0"}},
    ],
)
def test_bad_files_exit_3(capsys, tmp_path, record):
    path = _write(tmp_path, {"name": "bad", "dim": 2, "basis": ["a", "b"], "brackets": [record]})
    code, _, err = _run(capsys, "validate", path)
    assert code == 3
    assert "brackets[0]" in err


def test_usage_error_exit_3(capsys, data_dir):
    code, _, err = _run(capsys, "homology", str(data_dir / "sl2.json"), "--coeffs", "weird")
    assert code == 3
    assert "usage" in err


def test_smash_check_group_fixtures(capsys, data_dir):
    code, out, _ = _run(capsys, "smash-check", str(data_dir / "s3_perm.json"), "--cases", "20", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["group_order"] == 6
    assert all(report["result"]["retraction"].values())
    names = [c["name"] for c in report["result"]["checks"]]
    assert "group_table" in names and "retraction" in names

    code, out, _ = _run(capsys, "smash-check", str(data_dir / "z2_line.json"), "--cases", "20")
    assert code == 0
    assert "✓" in out


def test_smash_check_group_fixture_rejects_levi(capsys, data_dir):
    code, out, err = _run(capsys, "smash-check", str(data_dir / "z2_line.json"), "--levi", "0")
    assert code == 3
    assert out == ""
    assert "--levi" in err


def test_smash_check_levi(capsys, data_dir):
    code, out, _ = _run(capsys, "smash-check", str(data_dir / "gl2.json"), "--truncate", "2", "--cases", "20", "--json")
    report = json.loads(out)
    assert code == 0
    names = [c["name"] for c in report["result"]["checks"]]
    assert "levi_isomorphism" in names
    assert "coassociativity" in names


def test_ledger_appends_rows(capsys, tmp_path, data_dir):
    ledger = tmp_path / "runs" / "all_runs.csv"
    _run(capsys, "validate", str(data_dir / "sl2.json"), "--ledger", str(ledger))
    _run(capsys, "validate", str(data_dir / "broken_jacobi.json"), "--ledger", str(ledger))
    with open(ledger, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["date", "time", "command", "file", "state", "exit_code", "detail"]
    assert [r[4] for r in rows[1:]] == ["VALID", "INVALID"]
    assert [r[5] for r in rows[1:]] == ["0", "1"]
