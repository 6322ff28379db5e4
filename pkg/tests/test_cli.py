import subprocess
import sys
from pathlib import Path

import pytest

from hilbgeom.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden" / "cli"

# (golden file, argv); paths are relative to tests/data
CASES = [
    ("macaulay_growth.txt", ["macaulay", "growth", "76", "5"]),
    ("macaulay_expand.json", ["--json", "macaulay", "expand", "76", "5"]),
    ("macaulay_check.txt", ["macaulay", "check", "1,2,3,1,2"]),
    ("gotzmann_poly.json", ["--json", "gotzmann", "poly", "11", "5"]),
    ("mono_hf.txt", ["mono", "hf", "J.json"]),
    ("mono_socle.json", ["--json", "mono", "socle", "J.json"]),
    ("mono_betti.txt", ["mono", "betti", "lex.json"]),
    ("rnum.json", ["--json", "--tmax", "9", "rnum", "ci334.json", "--m", "2"]),
    ("wlp.txt", ["wlp", "J_lifted.json"]),
    ("truncpoly.json", ["--json", "truncpoly", "J_lifted.json", "--d", "5"]),
    ("alpha.txt", ["alpha", "cd56.json"]),
    ("points_hf.txt", ["points", "hf", "conic.json"]),
    ("points_upp.json", ["--json", "points", "upp", "collinear.json"]),
    ("points_gcd.txt", ["points", "gcd", "conic.json", "--degrees", "2", "3"]),
    ("diagnose_no_flats.json", ["--json", "diagnose", "no_flats.json"]),
    ("fixtures_ci334.txt", ["fixtures", "run", "--only", "ci334"]),
]


def run(argv, capsys, monkeypatch):
    monkeypatch.chdir(DATA)
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("golden, argv", CASES, ids=[c[0] for c in CASES])
def test_golden_output(golden, argv, capsys, monkeypatch):
    code, out, _ = run(argv, capsys, monkeypatch)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_growth_of_76():
    assert (GOLDEN / "macaulay_growth.txt").read_text() == "111\n"


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "hilbgeom", "--json", "--seed", "3", "rnum", "ci334.json", "--m", "1", "--tmax", "9"]
    first = subprocess.run(argv, cwd=DATA, capture_output=True, check=True).stdout
    second = subprocess.run(argv, cwd=DATA, capture_output=True, check=True).stdout
    assert first == second and b'"reduction_number": 7' in first


def test_seed_flag_after_subcommand(capsys, monkeypatch):
    code, out, _ = run(["rnum", "ci334.json", "--m", "3", "--seed", "4"], capsys, monkeypatch)
    assert code == 0 and out == "2\n"


def test_malformed_json_exits_2_with_location(capsys, monkeypatch):
    code, _, err = run(["mono", "hf", "truncated.json"], capsys, monkeypatch)
    assert code == 2
    assert "truncated.json: line 3, column 1" in err


def test_bad_payload_exits_2(capsys, monkeypatch):
    code, _, err = run(["diagnose", "J.json"], capsys, monkeypatch)
    assert code == 2 and "unknown diagnosis fields" in err


def test_domain_error_exits_3_verbatim(capsys, monkeypatch):
    code, _, err = run(["mono", "betti", "J.json"], capsys, monkeypatch)
    assert code == 3
    assert err == "hilbgeom: Eliahou–Kervaire requires stable\n"
    code, _, err = run(["mono", "socle", "not_artinian.json"], capsys, monkeypatch)
    assert code == 3


def test_fixture_list(capsys, monkeypatch):
    code, out, _ = run(["fixtures", "list"], capsys, monkeypatch)
    assert code == 0
    assert len(out.splitlines()) == 16


def test_all_fixtures_pass(capsys, monkeypatch):
    code, out, _ = run(["fixtures", "run"], capsys, monkeypatch)
    assert code == 0
    assert out.count(": PASS") == 16


def test_unknown_fixture(capsys, monkeypatch):
    code, _, err = run(["fixtures", "run", "--only", "nope"], capsys, monkeypatch)
    assert code == 2
