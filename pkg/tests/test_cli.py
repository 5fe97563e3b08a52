import csv
import io
import json
import os
import subprocess
import sys

import pytest

from symadapt.cli import canonical_json, main, parse_state_ops
from symadapt.configs import StateAlphabet

DATA = os.path.join(os.path.dirname(__file__), "data")
ORDER_FILE = os.path.join(DATA, "s3_distinct.ord")


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_state_ops():
    alpha = StateAlphabet("abc")
    assert parse_state_ops("(a b)", alpha) == [[(0, 1)]]
    assert parse_state_ops("(a b),(b c)", alpha) == [[(0, 1)], [(1, 2)]]
    assert parse_state_ops("(a b)+(a c)+(b c)", alpha) == [[(0, 1), (0, 2), (1, 2)]]
    with pytest.raises(ValueError):
        parse_state_ops("(a b)(b c)", alpha)
    with pytest.raises(ValueError):
        parse_state_ops("(a)", alpha)
    with pytest.raises(ValueError):
        parse_state_ops("(a z)", alpha)


def test_basis_aab_text(capsys):
    code, out, err = run_cli(["basis", "--config", "aab"], capsys)
    assert code == 0
    assert "configuration: aab" in out
    assert "complete: yes" in out
    assert "nu=(3,1)" in out and "nu=(0,1)" in out and "nu=(0,-1)" in out
    assert "2/√6 |aab> - 1/√6 |aba> - 1/√6 |baa>" in out
    assert "[1 3]" in out and "[2]" in out  # tableau rows on their own lines


def test_basis_aaa_single_vector(capsys):
    code, out, err = run_cli(["basis", "--config", "aaa"], capsys)
    assert code == 0
    assert "nu=(3,1)" in out
    assert "1 |aaa>" in out


def test_basis_ordering_override_and_state_ops(capsys):
    code, out, err = run_cli(
        ["basis", "--config", "abc", "--order", ORDER_FILE, "--state-ops", "(a b)",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["group"] == "S3"
    assert doc["ordering"] == ["abc", "bac", "cba", "acb", "cab", "bca"]
    assert doc["complete"] is True
    vectors = {
        (tuple(v["nu"]), tuple(v["state_eigenvalues"])): (tuple(v["coeffs"]), v["norm_sq"])
        for v in doc["vectors"]
    }
    assert vectors[(0, 1), (1,)] == ((2, 2, -1, -1, -1, -1), 12)
    assert vectors[(3, 1), (1,)] == ((1, 1, 1, 1, 1, 1), 6)
    assert vectors[(-3, -1), (-1,)] == ((1, -1, -1, -1, 1, 1), 6)


def test_json_roundtrips_byte_identical(capsys):
    code, out, err = run_cli(["basis", "--config", "aabc", "--format", "json"], capsys)
    assert code == 0
    assert canonical_json(json.loads(out)) == out


def test_csv_output_columns(capsys):
    code, out, err = run_cli(["basis", "--config", "aab", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["vector_id", "nu_chain", "tableau", "ket", "coeff_numerator", "norm_sq"]
    assert len(rows) == 1 + 3 * 3  # header + one row per (vector, ket) pair
    assert rows[1] == ["1", "3,1", "[[1,2,3]]", "aab", "1", "3"]
    assert rows[4] == ["2", "0,1", "[[1,2],[3]]", "aab", "2", "6"]


def test_eigenvalues_outputs(capsys):
    code, out, err = run_cli(["eigenvalues", "--config", "abc", "--k", "3"], capsys)
    assert code == 0 and out == "3:1, -3:1, 0:4\n"
    code, out, err = run_cli(["eigenvalues", "--config", "aab", "--k", "3"], capsys)
    assert code == 0 and out == "3:1, 0:2\n"
    code, out, err = run_cli(["eigenvalues", "--config", "ab", "--k", "2"], capsys)
    assert code == 0 and out == "1:1, -1:1\n"


def test_eigenvalues_json(capsys):
    code, out, err = run_cli(
        ["eigenvalues", "--config", "abc", "--k", "3", "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["k"] == 3
    assert doc["eigenvalues"] == [[3, 1], [-3, 1], [0, 4]]


def test_eigenvalues_rejects_bad_k(capsys):
    code, out, err = run_cli(["eigenvalues", "--config", "abc", "--k", "7"], capsys)
    assert code == 1
    assert "error:" in err


def test_verify_passes_small(capsys):
    code, out, err = run_cli(["verify", "--config", "abc"], capsys)
    assert code == 0
    assert "verification: PASS" in out
    assert "FAIL" not in out


def test_verify_passes_abcd(capsys):
    code, out, err = run_cli(["verify", "--config", "abcd"], capsys)
    assert code == 0
    assert "verification: PASS" in out


def test_verify_incomplete_exits_two(capsys):
    code, out, err = run_cli(["verify", "--config", "abcde"], capsys)
    assert code == 2
    assert "WARN completeness" in out
    assert "verification: PASS" in out


def test_basis_incomplete_exits_two(capsys):
    code, out, err = run_cli(["basis", "--config", "abcde"], capsys)
    assert code == 2
    assert "complete: no" in out
    assert "[unlabeled]" in out


def test_bad_ordering_file_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.ord"
    bad.write_text("aab\naba\n", encoding="utf-8")
    code, out, err = run_cli(["verify", "--config", "aab", "--order", str(bad)], capsys)
    assert code == 1
    assert "ordering is not a permutation of orbit" in err


def test_missing_ordering_file_exits_one(capsys):
    code, out, err = run_cli(["basis", "--config", "aab", "--order", "/nonexistent.ord"], capsys)
    assert code == 1
    assert "error:" in err


def test_orbit_escaping_state_op_exits_one(capsys):
    code, out, err = run_cli(["basis", "--config", "aab", "--state-ops", "(a b)"], capsys)
    assert code == 1
    assert "does not preserve the orbit" in err


def test_bad_config_label_exits_one(capsys):
    code, out, err = run_cli(["basis", "--config", "axb", "--alphabet", "ab"], capsys)
    assert code == 1
    assert "unknown state label" in err


def test_multicharacter_labels(capsys):
    code, out, err = run_cli(
        ["basis", "--config", "alpha,alpha,beta", "--alphabet", "alpha,beta"], capsys
    )
    assert code == 0
    assert "configuration: alpha,alpha,beta" in out
    assert "|alpha,beta,alpha>" in out


def test_state_op_chain_resolves_six_particle_orbit(capsys):
    code, out, err = run_cli(
        ["basis", "--config", "aabbcc", "--state-ops", "(a b),(a b)+(a c)+(b c)"],
        capsys,
    )
    assert code == 0
    assert "complete: yes" in out


def test_verbose_dumps_operators(capsys):
    code, out, err = run_cli(["basis", "--config", "aab", "--verbose"], capsys)
    assert code == 0
    assert "dim=3 label=C(2)" in err
    assert "dim=3 label=C(3)" in err


def test_cli_runs_as_module():
    proc = subprocess.run(
        [sys.executable, "-m", "symadapt", "basis", "--config", "ab"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "nu=(1)" in proc.stdout and "nu=(-1)" in proc.stdout
