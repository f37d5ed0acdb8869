"""Golden-file tests for the command line.

Regenerate with ``python tests/test_cli.py`` after an intended output change.
"""

import json
import os
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from ybalg.cli import main

GOLDEN = Path(__file__).parent / "golden"
INPUTS = GOLDEN / "inputs"

# name, argv, expected exit code
CASES = [
    ("check_m2q", ["algebra-check", "m2q"], 0),
    ("check_sl2", ["algebra-check", "sl2"], 0),
    ("check_super11", ["algebra-check", "super11"], 0),
    ("check_eq4_counter", ["algebra-check", "eq4_counter"], 0),
    ("check_bad_table", ["algebra-check", "bad_table.json"], 2),
    ("check_float_entry", ["algebra-check", "float_entry.json"], 2),
    ("ybe_braid_m2q_111", ["ybe", "braid", "--family", "assoc", "--algebra", "m2q",
                           "--alpha", "1", "--beta", "1", "--gamma", "1"], 0),
    ("ybe_braid_m2q_123", ["ybe", "braid", "--family", "assoc", "--algebra", "m2q",
                           "--alpha", "1", "--beta", "2", "--gamma", "3"], 1),
    ("ybe_transfer_seed7", ["ybe", "transfer", "--matrix", "random_seed7.mat"], 0),
    ("ybe_qybe_seed7", ["ybe", "qybe", "--matrix", "random_seed7.mat"], 1),
    ("ybe_superlie_h3", ["ybe", "braid", "--family", "superlie", "--algebra", "h3",
                         "--z", "0,0,1", "--alpha", "1/3"], 0),
    ("ybe_superlie_bad_z", ["ybe", "braid", "--family", "superlie", "--algebra", "h3",
                            "--z", "1,0,0", "--alpha", "1"], 2),
    ("ybe_superlie_odd_z", ["ybe", "braid", "--family", "superlie", "--algebra", "super11",
                            "--z", "0,1", "--alpha", "1"], 2),
    ("ybe_no_source", ["ybe", "braid"], 2),
    ("scan_m2gf5", ["scan", "--algebra", "m2q", "--field", "gf:5"], 0),
    ("scan_m2gf5_parallel", ["scan", "--algebra", "m2q", "--field", "gf:5", "--parallel"], 0),
    ("scan_dim1_gf5", ["scan", "--algebra", "field_gf5"], 0),
    ("scan_gf101", ["scan", "--algebra", "m2q", "--field", "gf:101"], 2),
    ("scan_operator_budget", ["scan", "--algebra", "m2q", "--field", "gf:5", "--max-operator", "15"], 2),
    ("gate_cz_bridge", ["gate", "--eta", "0", "--q", "1", "--bridge"], 0),
    ("gate_realize_1_2", ["gate", "--eta", "1", "--q", "2", "--realize", "--columns"], 0),
    ("gate_bridge_inapplicable", ["gate", "--eta", "1", "--q", "1/2", "--bridge"], 0),
    ("gate_realize_excluded", ["gate", "--eta", "1", "--q", "-1", "--realize"], 2),
    ("gate_q0", ["gate", "--eta", "0", "--q", "0"], 2),
    ("tprod_21", ["tprod", "--case", "21"], 0),
    ("tprod_11", ["tprod", "--case", "11"], 0),
    ("tprod_12", ["tprod", "--case", "12"], 0),
    ("tprod_21_kx2", ["tprod", "--case", "21", "--algebra", "kx2", "--assign", "a=x,a'=x,b=x"], 0),
    ("tprod_12_m2q", ["tprod", "--case", "12", "--algebra", "m2q",
                      "--assign", "a=E12,b=E21+2*E11,b'=E22 - 1/2*E12"], 0),
    ("tprod_incomplete", ["tprod", "--case", "21", "--algebra", "kx2", "--assign", "a=x"], 2),
]


def run(argv, as_json):
    runner = CliRunner()
    cwd = os.getcwd()
    os.chdir(INPUTS)
    try:
        result = runner.invoke(main, (["--json"] if as_json else []) + argv, catch_exceptions=False)
    finally:
        os.chdir(cwd)
    return result


def golden_path(name, as_json):
    return GOLDEN / f"{name}.{'json' if as_json else 'txt'}"


@pytest.mark.parametrize("as_json", [False, True], ids=["text", "json"])
@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, as_json):
    result = run(argv, as_json)
    assert result.exit_code == code, result.output
    assert result.stdout == golden_path(name, as_json).read_text(encoding="utf-8")


@pytest.mark.parametrize("name, argv, code", CASES[:3] + CASES[6:10], ids=[c[0] for c in CASES[:3] + CASES[6:10]])
def test_json_byte_stable(name, argv, code):
    first, second = run(argv, True), run(argv, True)
    assert first.stdout_bytes == second.stdout_bytes
    doc = json.loads(first.stdout)
    assert doc["exit"] == code and "time" not in json.dumps(doc)


def test_exit_two_diagnostics_name_the_problem():
    assert "table[1]" in run(["algebra-check", "bad_table.json"], False).stderr
    assert "floating-point" in run(["algebra-check", "float_entry.json"], False).stderr
    assert "triples" in run(["scan", "--algebra", "m2q", "--field", "gf:101"], False).stderr
    assert "operator size" in run(CASES[18][1], False).stderr
    assert "missing a', b" in run(CASES[-1][1], False).stderr


def test_seven_term_expansion_printed():
    out = run(["tprod", "--case", "21"], False).stdout
    assert ("expansion: aa'b ⊗ 1 ⊗ 1 + 1 ⊗ aa'b ⊗ 1 - a ⊗ a'b ⊗ 1 + 1 ⊗ a ⊗ a'b "
            "- aa' ⊗ 1 ⊗ b - 1 ⊗ aa' ⊗ b + a ⊗ a' ⊗ b") in out


def test_scan_summary_lines():
    out = run(["scan", "--algebra", "m2q", "--field", "gf:5"], False).stdout
    assert "rows: 125" in out and "exceptions: 0" in out
    out = run(["scan", "--algebra", "field_gf5"], False).stdout
    assert "exceptions: 0" in out and "extras (unpredicted passers): 68" in out


def test_transfer_booleans_equal():
    doc = json.loads(run(["ybe", "transfer", "--matrix", "random_seed7.mat"], True).stdout)
    assert len(set(doc["transfer"].values())) == 1


def test_algebra_check_m2q_verdicts():
    doc = json.loads(run(["algebra-check", "m2q"], True).stdout)
    holds = {c["prop"]: c["holds"] for c in doc["checks"]}
    assert holds["associative"] and not holds["commutative"]
    assert holds["unified_identity"] and holds["jordan_identity"]
    assert doc["unit"] == "E11 + E22"
    doc = json.loads(run(["algebra-check", "sl2"], True).stdout)
    holds = {c["prop"]: c["holds"] for c in doc["checks"]}
    assert holds["lie"] and holds["unified_identity"] and holds["jordan_identity"]


if __name__ == "__main__":
    for name, argv, code in CASES:
        for as_json in (False, True):
            r = run(argv, as_json)
            if r.exit_code != code:
                sys.exit(f"{name}: exit {r.exit_code}, expected {code}\n{r.output}")
            golden_path(name, as_json).write_text(r.stdout, encoding="utf-8")
    print(f"wrote {2 * len(CASES)} golden files")
