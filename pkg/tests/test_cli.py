import io
import subprocess
import sys

import pytest

from flawshift.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_column_paths():
    code, text = run("column", "UUUDDD")
    assert code == 0
    assert text.splitlines() == ["UUUDDD", "UDUDDU", "UDDUDU", "DDDUUU"]


def test_column_delta():
    code, text = run("column", "UUUDDD", "--delta")
    assert text.splitlines() == ["UUUDDD", "2 6", "3 4", "1 5"]


def test_column_bits_input_and_output():
    code, text = run("column", "111000", "--bits")
    assert text.splitlines() == ["111000", "101001", "100101", "000111"]


def test_column_at_max_flaws_prints_single_line():
    assert run("column", "DU") == (0, "DU\n")


def test_column_bad_character(capsys):
    code, _ = run("column", "UUXD")
    assert code == 2
    assert "3" in capsys.readouterr().err


def test_column_unbalanced(capsys):
    code, _ = run("column", "UUUD")
    assert code == 2


def test_grid():
    code, text = run("grid", "2")
    lines = text.splitlines()
    assert len(lines) == 6 and len(set(lines)) == 6
    code, text = run("grid", "2", "--delta")
    lines = text.splitlines()
    # second column starts at the mirror of UDUD and climbs back to it
    assert lines == ["UUDD", "2 4", "1 3", "DUDU", "3 4", "1 2"]


def test_pi_methods_agree():
    assert run("pi", "UUDUDD") == (0, "(6,4,5,2,3,1)\n")
    assert run("pi", "UUDUDD", "--method", "direct") == (0, "(6,4,5,2,3,1)\n")


def test_pi_requires_dyck():
    assert run("pi", "DUUD")[0] == 2


def test_origin():
    code, text = run("origin", "UDDUDU")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("U_x {") and lines[1].startswith("D_x {")
    assert lines[2] == "origin UUUDDD"


def test_oddfactor_verify(capsys):
    code, text = run("oddfactor", "2", "--verify")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[1] == "{1,3} {4,5} {2,3} {1,5} {2,4}"
    assert capsys.readouterr().err.strip() == "pass: odd k=2, 2 cycles x length 5, coverage 10/10"


def test_middlefactor_dot():
    code, text = run("middlefactor", "2", "--dot")
    assert code == 0 and text.startswith("graph") and text.count(" -- ") == 20


def test_verify_single_check():
    code, text = run("verify", "3", "--check", "chung-feller")
    assert code == 0 and text.splitlines()[-1] == "all passed"


def test_verify_classic_k2_fails():
    code, text = run("verify", "2", "--check", "classic")
    assert code == 1 and text.splitlines()[-1] == "FAILED"


def test_verify_above_cap(capsys):
    assert run("verify", "11")[0] == 2


@pytest.mark.parametrize("argv", [["bench", "0", "1"], ["bench", "5", "0"], ["grid", "0"]])
def test_rejects_non_positive(argv):
    with pytest.raises(SystemExit) as exc:
        run(*argv)
    assert exc.value.code == 2


def test_bench_output_keys():
    code, text = run("bench", "20", "2", "--classic-steps", "3")
    keys = [line.split()[0] for line in text.splitlines()]
    assert code == 0
    assert keys[:2] == ["k", "reps"] and "yield_ops_max" in keys and "classic_ns_mean" in keys


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flawshift", "column", "UD", "--delta"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "UD\n1 2\n"
