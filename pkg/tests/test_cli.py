import json
import subprocess
import sys
from pathlib import Path

import pytest

from cuboidfactor.cli import run

GOLDEN = Path(__file__).parent / "golden"


def one(*argv):
    code, out, err = run(argv)
    return code, json.loads(out) if out.strip() else None, err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["profile", "1", "1"], "profile_1_1.jsonl"),
        (["solve", "0", "2", "0", "--branch", "1"], "solve_0_2_0_branch1.jsonl"),
        (["verify", "0", "0", "1", "-1", "1", "0", "1"], "verify_0_0_1_-1_1_0_1.jsonl"),
        (["scan", "--height", "2"], "scan_height2.jsonl"),
    ],
)
def test_golden(argv, golden):
    code, out, _ = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_profile_values():
    code, obj, _ = one("profile", "1", "1")
    want = dict(E10="1/2", E01="-1/2", E11="1/2", E20="-3/8", E30="0", E02="-7/8", E03="3/8",
                E12="-1", E21="3/8", E21_derived="3/8", E21_printed="-7/24", biquadratic="0")
    assert code == 0 and {k: obj[k] for k in want} == want
    assert obj["E21_mismatch"] is True
    code, obj, _ = one("profile", "0", "2")
    assert (obj["E10"], obj["E01"], obj["E11"], obj["E02"], obj["E12"]) == ("1", "0", "0", "-1", "-1")
    assert all(obj[k] == "0" for k in ("E20", "E30", "E03", "E21"))


def test_profile_e21_source_flag():
    _, obj, _ = one("profile", "1", "1", "--e21-source", "printed-verbatim")
    assert obj["E21"] == "-7/24" and obj["E21_derived"] == "3/8"


def test_exit_codes():
    assert run(["profile", "0", "0"])[0] == 2
    assert "Q1" in run(["profile", "0", "0"])[2]
    assert run(["profile", "one", "1"])[0] == 1
    assert run(["frobnicate"])[0] == 1
    assert run(["solve", "1", "1", "--branch", "3"])[0] == 1
    assert run(["solve", "1", "1"])[0] == 1
    assert run(["solve", "1", "1", "1", "--mode", "numeric", "--precision", "32"])[0] == 1
    code, _, err = run(["solve", "1", "1", "1", "--branch", "1"])
    assert code == 2 and "w=±1 degenerate" in err
    code, _, err = run(["roundtrip", "0", "2", "0", "--branch", "1"])
    assert code == 2 and "conversion denominator zero" in err
    assert run(["roundtrip", "1", "1", "1", "--branch", "2"])[0] == 2
    assert run(["verify", "1", "1", "1", "1", "1", "1"])[0] == 1


def test_negative_fraction_arguments():
    code, obj, _ = one("profile", "-1/2", "-3")
    assert code == 0 and obj["b"] == "-1/2" and obj["c"] == "-3"


def test_numeric_commands():
    code, obj, _ = one("solve", "1", "1", "--w-from-cubic", "--branch", "1", "--mode", "numeric")
    assert code == 0 and float(obj["residual_max"]) < 1e-80 and obj["verified"]
    code, obj, _ = one("coincide", "1", "1", "--w-from-cubic", "--mode", "numeric")
    assert code == 0 and obj["passed"]
    assert all(abs(float(v)) < 1e-80 for v in obj["dx"] + obj["dd"])
    code, obj, _ = one("roundtrip", "1", "1", "--w-from-cubic", "--branch", "2", "--mode", "numeric")
    assert code == 0 and float(obj["residual"]) < 1e-80


def test_exact_commands_at_rational_point():
    code, obj, _ = one("convert", "1/2", "1/2", "21")
    assert code == 0 and obj["converted"] == "-3/17"
    code, obj, _ = one("convert", "1/2", "1/2", "-3/17", "--branch", "2")
    assert obj["converted"] == "21"
    code, obj, _ = one("coincide", "1/2", "1/2", "21")
    assert code == 0 and obj["max_difference"] == "0"
    code, obj, _ = one("roundtrip", "1/2", "1/2", "--w-from-cubic")
    assert code == 0 and obj["residual"] == "0"


def test_dparams():
    code, obj, _ = one("dparams", "1", "1")
    assert (obj["D1"], obj["D2"]) == ("-1922/35937", "-18050/328509")
    assert obj["D1_agrees"] and obj["D2_agrees"]
    code, obj, _ = one("dparams", "2/3", "-5/7", "--d1-exponent", "verbatim")
    assert code == 0 and obj["D1_agrees"] is False and obj["D2_agrees"] is True


def test_verify_examples():
    _, obj, _ = one("verify", "3/5", "4/5", "0", "4/5", "3/5", "1", "1")
    assert set(obj["cuboid_residuals"].values()) | set(obj["factor_residuals"].values()) == {"0"}
    assert obj["positive"] is False
    _, obj, _ = one("verify", "1", "1", "1", "1", "1", "1", "1")
    assert obj["factor_residuals"]["f1"] == "2" and obj["factor_residuals"]["f2"] == "3"
    assert obj["positive"] is True and obj["implication_holds"] is True


def test_csv_output():
    code, out, _ = run(["scan", "--height", "1", "--output", "csv"])
    lines = out.splitlines()
    assert lines[0] == "b,c,singular,D1,D2,rational_w1,rational_w2,solved,positive,residual_max,note"
    assert len(lines) == 1 + 9
    code, out, _ = run(["profile", "1", "1", "--output", "csv"])
    header, row = out.splitlines()
    assert header.startswith("b,c,mode,E10") and row.startswith("1,1,exact,1/2")


def test_fixtures_command():
    code, out, _ = run(["fixtures"])
    assert code == 0
    assert json.loads(out.splitlines()[-1])["failed"] == 0


def test_fixtures_adjudicate_readings():
    code, out, _ = run(["fixtures", "--e21-source", "printed-verbatim"])
    failed = [json.loads(line) for line in out.splitlines()[:-1]]
    failed = {r["fixture"] for r in failed if not r["passed"]}
    assert code == 3 and "e_full and the E21 readings" in failed and "cli profile" in failed
    code, out, _ = run(["fixtures", "--d1-exponent", "verbatim"])
    failed = [json.loads(line) for line in out.splitlines()[:-1]]
    assert code == 3 and [r["fixture"] for r in failed if not r["passed"]] == ["d_parameters"]
    assert "D1 cross-check" in next(r["detail"] for r in failed if not r["passed"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cuboidfactor", "profile", "0", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["E12"] == "-1"
