import json
import subprocess
import sys

import pytest

from freqrect import io
from freqrect.cli import main

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_mofs2p_golden(capsys, mofs14_golden_text):
    code, out, _ = run(capsys, "construct", "mofs2p", "--p", "7")
    assert code == 0
    assert out == mofs14_golden_text


def test_construct_hadamard(capsys):
    code, out, _ = run(capsys, "construct", "hadamard", "--order", "4")
    assert code == 0
    assert out.splitlines()[0] == "HAD 4"
    code, out, _ = run(capsys, "construct", "hadamard", "--order", "12",
                       "--method", "paley")
    assert code == 0 and out.splitlines()[0] == "HAD 12"


def test_construct_hadamard_bad_order(capsys):
    code, _, err = run(capsys, "construct", "hadamard", "--order", "6")
    assert code == 2 and "error" in err


def test_construct_oa(capsys):
    code, out, _ = run(capsys, "construct", "oa", "--factors", "3", "--parity")
    assert code == 0
    oa = io.parse_oa(out)
    assert (oa.runs, oa.factors, oa.strength) == (8, 4, 3)


def test_construct_thm26(capsys, tmp_path):
    run(capsys, "construct", "hadamard", "--order", "8",
        "-o", str(tmp_path / "h.had"))
    code, out, _ = run(capsys, "construct", "thm26",
                       "--hadamard", str(tmp_path / "h.had"))
    assert code == 0
    fs = io.parse_fr_set(out)
    assert len(fs) == 6 and (fs[0].m, fs[0].n) == (4, 4)


def test_construct_thm31_and_convert_back(capsys, tmp_path):
    run(capsys, "construct", "oa", "--factors", "3", "--parity",
        "-o", str(tmp_path / "a.oa"))
    code, out, _ = run(capsys, "construct", "thm31", "--oa", str(tmp_path / "a.oa"))
    assert code == 0
    (tmp_path / "fs.frs").write_text(out)
    code, out, _ = run(capsys, "convert", "fr2oa", str(tmp_path / "fs.frs"),
                       "--t", "3")
    assert code == 0
    oa = io.parse_oa(out)
    assert (oa.runs, oa.factors, oa.strength) == (64, 4, 3)


def test_construct_thm33(capsys, tmp_path):
    vs = "VS 2 4 3\n1010\n1001\n1101\n"
    (tmp_path / "w.vs").write_text(vs)
    code, out, _ = run(capsys, "construct", "thm33", "--vectors",
                       str(tmp_path / "w.vs"), "--M", "2", "--N", "2", "--t", "3")
    assert code == 0
    fs = io.parse_fr_set(out)
    assert len(fs) == 3 and (fs[0].m, fs[0].n) == (4, 4)


def test_verify_mofr_pass(capsys):
    code, out, _ = run(capsys, "verify", "mofr", str(DATA / "table2_mofr44.frs"),
                       "--t", "3")
    assert code == 0 and out.startswith("PASS")


def test_verify_mofr_fail(capsys):
    code, out, _ = run(capsys, "verify", "mofr", str(DATA / "table2_mofr44.frs"),
                       "--t", "4")
    assert code == 1
    assert out.startswith("FAIL")
    assert "[0, 1, 2, 4]" in out


def test_verify_mofr_fail_json(capsys):
    code, out, _ = run(capsys, "verify", "mofr", str(DATA / "table2_mofr44.frs"),
                       "--t", "4", "--json")
    assert code == 1
    blob = json.loads(out)
    assert blob["ok"] is False and blob["subset"] == [0, 1, 2, 4]


def test_verify_gram_spectrum(capsys):
    for what in ("gram", "spectrum"):
        code, out, _ = run(capsys, "verify", what, str(DATA / "mofs14_golden.frs"))
        assert code == 0 and out.startswith("PASS")


def test_verify_vectors(capsys, tmp_path):
    (tmp_path / "v.vs").write_text("VS 2 3 3\n110\n011\n101\n")
    code, out, _ = run(capsys, "verify", "vectors", str(tmp_path / "v.vs"),
                       "--t", "3")
    assert code == 1 and "FAIL" in out


def test_search_ind(capsys):
    code, out, _ = run(capsys, "search", "ind", "--n", "5", "--t", "4")
    assert code == 0
    assert out.splitlines()[0].startswith("max size = 6 (exhaustive)")
    vs = io.parse_vs("\n".join(out.splitlines()[1:]) + "\n")
    assert len(vs) == 6


def test_search_ind_json(capsys):
    code, out, _ = run(capsys, "search", "ind", "--n", "5", "--t", "4", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["best_size"] == 6 and blob["exhaustive"]
    assert blob["witness"]["type"] == "VS"


def test_search_constrained(capsys):
    code, out, _ = run(capsys, "search", "constrained", "--M", "2", "--N", "2",
                       "--t", "3")
    assert code == 0 and out.splitlines()[0].startswith("max size = 6")


def test_bounds_ind_resolved(capsys):
    code, out, _ = run(capsys, "bounds", "ind", "--n", "9", "--t", "4",
                       "--code-lower", "23,14,5", "--code-upper", "24,15,4")
    assert code == 0
    lines = out.splitlines()
    assert "Ind(9,4) >= 23  [code [23,14,5]]" in lines
    assert lines[-1] == "Ind(9,4) = 23"


def test_bounds_ind_formula(capsys):
    code, out, _ = run(capsys, "bounds", "ind", "--n", "8", "--t", "6")
    assert code == 0 and "Ind(8,6) = 9" in out


def test_bounds_ind_no_formula(capsys):
    code, out, _ = run(capsys, "bounds", "ind", "--n", "9", "--t", "4")
    assert code == 0 and out.startswith("no formula applies")


def test_bounds_ind_wrong_code(capsys):
    code, _, err = run(capsys, "bounds", "ind", "--n", "9", "--t", "4",
                       "--code-lower", "12,4,6")
    assert code == 2 and "Ind(8,5)" in err


def test_bounds_code(capsys):
    code, out, _ = run(capsys, "bounds", "code", "--n", "23", "--k", "14",
                       "--d", "5", "--mode", "lower")
    assert code == 0 and out == "Ind(9,4) >= 23\n"


def test_bounds_mofr(capsys):
    code, out, _ = run(capsys, "bounds", "mofr", "--m", "4", "--n", "4", "--q", "2")
    assert code == 0 and "<= 9" in out


def test_convert_had2oa_oa2fr(capsys, tmp_path):
    run(capsys, "construct", "hadamard", "--order", "8",
        "-o", str(tmp_path / "h.had"))
    code, out, _ = run(capsys, "convert", "had2oa", str(tmp_path / "h.had"))
    assert code == 0
    (tmp_path / "a.oa").write_text(out)
    code, out, _ = run(capsys, "convert", "oa2fr", str(tmp_path / "a.oa"))
    assert code == 0
    fs = io.parse_fr_set(out)
    assert len(fs) == 7 and (fs[0].m, fs[0].n) == (2, 8)


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.had"
    code, out, _ = run(capsys, "construct", "hadamard", "--order", "2",
                       "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "HAD 2\n+ +\n+ -\n"


def test_json_object_output(capsys):
    code, out, _ = run(capsys, "construct", "hadamard", "--order", "2", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["type"] == "HAD" and blob["order"] == 2


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "fr", str(tmp_path / "nope.fr"))
    assert code == 2 and "error" in err


def test_malformed_file_exit_2(capsys, tmp_path):
    (tmp_path / "bad.fr").write_text("XX 1 2 3\n")
    code, _, err = run(capsys, "verify", "fr", str(tmp_path / "bad.fr"))
    assert code == 2


def test_emit_intermediates(capsys):
    code, out, _ = run(capsys, "construct", "mofs2p", "--p", "5",
                       "--emit-intermediates")
    assert code == 0
    assert out.startswith("p 5\n")
    for tag in ("A_1", "A*_1", "A'_1", "rho ", "stars "):
        assert tag in out
    assert out.count("FR 10 10 2") == 4


def test_emit_intermediates_json(capsys):
    code, out, _ = run(capsys, "construct", "mofs2p", "--p", "5",
                       "--emit-intermediates", "--json")
    blob = json.loads(out)
    assert code == 0
    assert set(blob) == {"p", "A", "A_star", "A_prime", "rho", "stars", "squares"}
    assert len(blob["squares"]) == 4


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freqrect.cli", "bounds", "mofr",
         "--m", "2", "--n", "14", "--q", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0 and "<= 13" in proc.stdout
