"""Command-line interface: subcommands, exit codes, stream formats.

main() is exercised in-process so capsys sees its output; one subprocess
test at the end checks the installed console script for real.
"""

import io
import json
import subprocess
import sys

import pytest

from alternant.cli import (
    EXIT_BUDGET,
    EXIT_DECODE_FAILURE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_SPEC_ERROR,
    main,
    parse_vector_line,
)
from alternant.demo import CaseResult
from alternant.galois import extension, prime_field
from alternant.linalg import Vec
from alternant.pgz import random_error_vector
from alternant import demo as demo_mod

Z5 = prime_field(5)
Z13 = prime_field(13)
F25, gen25 = extension(Z5, [3, 0, 1], gen_label="x")


# -- params -------------------------------------------------------------------

def test_params_prs31(capsys):
    assert main(["params", "--code", "prs31"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "PRS code over Z31",
        "[30,20,11]",
        "n=30 k=20 t=5 rate=2/3",
        "r=10 d=11 (exact: MDS)",
        "field: Z31 (31 elements)",
    ]


def test_params_goppa19(capsys):
    assert main(["params", "--code", "goppa19"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "Goppa code over Z5",
        "[19,7,7]",
        "n=19 k=7 t=3 rate=7/19",
        "r=6 d>=7",
        "base field: Z5 (5 elements)",
        "extension field: F25 (25 elements, degree 2, modulus [3, 0, 1], "
        "generator 'x')",
    ]


def test_params_from_description_file(tmp_path, capsys):
    path = tmp_path / "rs6.json"
    path.write_text(json.dumps({"kind": "RS", "field": {"p": 7},
                                "a": [1, 2, 3, 4, 5, 6], "k": 3}))
    assert main(["params", "--code", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "RS code over Z7" in out and "[6,3,4]" in out


# -- encode / corrupt / decode pipeline ---------------------------------------

def test_pipeline_round_trip(tmp_path, capsys):
    msg = tmp_path / "msg.txt"
    enc = tmp_path / "enc.txt"
    rcv = tmp_path / "rcv.txt"
    dec = tmp_path / "dec.txt"
    msg.write_text("# one message\n\n[1, 2, 3, 4, 0, 1, 2]\n")

    assert main(["encode", "--code", "goppa19", "--in", str(msg),
                 "--out", str(enc)]) == EXIT_OK
    codeword = enc.read_text().strip()
    assert codeword.startswith("[") and codeword.count(",") == 18

    assert main(["corrupt", "--code", "goppa19", "--seed", "3", "--weight", "2",
                 "--in", str(enc), "--out", str(rcv)]) == EXIT_OK
    assert rcv.read_text().strip() != codeword

    assert main(["decode", "--code", "goppa19", "--in", str(rcv),
                 "--out", str(dec)]) == EXIT_OK
    lines = dec.read_text().splitlines()
    assert lines[0].startswith("PGZ: Error positions [")
    assert lines[1] == f"{codeword} :: Vector[Z5]"


def test_decode_golden(tmp_path):
    rcv = tmp_path / "y.txt"
    out = tmp_path / "out.txt"
    rcv.write_text("[0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0]\n")
    assert main(["decode", "--code", "prs13", "--in", str(rcv),
                 "--out", str(out)]) == EXIT_OK
    assert out.read_text() == (
        "PGZ: Error positions [4], error values [3] :: Vector[Z13]\n"
        "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] :: Vector[Z13]\n")


def test_decode_accepts_own_output_format(tmp_path, capsys):
    rcv = tmp_path / "y.txt"
    rcv.write_text("[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 7] :: Vector[Z13]\n")
    assert main(["decode", "--code", "prs13", "--in", str(rcv),
                 "--out", "-"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "error values [7]" in out


def test_decode_pgzm_flag(tmp_path, capsys):
    rcv = tmp_path / "y.txt"
    rcv.write_text("[0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n")
    assert main(["decode", "--code", "prs13", "--alg", "pgzm",
                 "--in", str(rcv), "--out", "-"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("PGZm: Error positions [2]")


def test_decode_failure_exit_code(tmp_path, capsys):
    e = random_error_vector(Z13, 12, 3, 1)  # known defective-location seed
    rcv = tmp_path / "y.txt"
    rcv.write_text(str(e) + "\n")
    assert main(["decode", "--code", "prs13", "--in", str(rcv),
                 "--out", "-"]) == EXIT_DECODE_FAILURE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "PGZ: Defective error location" in captured.err


def test_decode_mixed_stream_still_fails(tmp_path, capsys):
    e = random_error_vector(Z13, 12, 3, 1)
    rcv = tmp_path / "y.txt"
    rcv.write_text("[0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0]\n" + str(e) + "\n")
    assert main(["decode", "--code", "prs13", "--in", str(rcv),
                 "--out", "-"]) == EXIT_DECODE_FAILURE
    captured = capsys.readouterr()
    assert "Error positions [4]" in captured.out  # good line still decoded


def test_decode_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin",
                        io.StringIO("[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n"))
    assert main(["decode", "--code", "prs13"]) == EXIT_OK
    assert "Input is a code vector" in capsys.readouterr().out


def test_corrupt_weight_zero_is_identity(tmp_path):
    src = tmp_path / "in.txt"
    dst = tmp_path / "out.txt"
    src.write_text("[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n")
    assert main(["corrupt", "--code", "prs13", "--seed", "9", "--weight", "0",
                 "--in", str(src), "--out", str(dst)]) == EXIT_OK
    assert dst.read_text() == "[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n"


def test_corrupt_default_weight_is_capacity(tmp_path):
    src = tmp_path / "in.txt"
    dst = tmp_path / "out.txt"
    src.write_text("[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n")
    assert main(["corrupt", "--code", "prs13", "--seed", "9",
                 "--in", str(src), "--out", str(dst)]) == EXIT_OK
    got = parse_vector_line(Z13, dst.read_text())
    assert got.weight() == 2


# -- spec errors (exit 3) -----------------------------------------------------

def test_unknown_kind_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "XYZ", "field": {"p": 13}}')
    assert main(["params", "--code", str(path)]) == EXIT_SPEC_ERROR
    assert "alternant: unknown kind" in capsys.readouterr().err


def test_missing_code_file(capsys):
    assert main(["params", "--code", "/nonexistent.json"]) == EXIT_SPEC_ERROR
    assert "cannot read" in capsys.readouterr().err


def test_encode_wrong_message_length(tmp_path, capsys):
    src = tmp_path / "msg.txt"
    src.write_text("[1, 2, 3]\n")
    assert main(["encode", "--code", "prs13", "--in", str(src),
                 "--out", "-"]) == EXIT_SPEC_ERROR
    assert "expected k=8" in capsys.readouterr().err


def test_decode_wrong_length_line(tmp_path, capsys):
    src = tmp_path / "y.txt"
    src.write_text("[1, 2, 3]\n")
    assert main(["decode", "--code", "prs13", "--in", str(src),
                 "--out", "-"]) == EXIT_SPEC_ERROR
    assert "wrong length (3, expected 12)" in capsys.readouterr().err


def test_unparseable_line_reports_line_number(tmp_path, capsys):
    src = tmp_path / "y.txt"
    src.write_text("# comment\n\n[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\nnope\n")
    assert main(["decode", "--code", "prs13", "--in", str(src),
                 "--out", "-"]) == EXIT_SPEC_ERROR
    assert "line 4" in capsys.readouterr().err


def test_corrupt_weight_out_of_range(capsys):
    assert main(["corrupt", "--code", "prs13", "--seed", "1",
                 "--weight", "99", "--in", "/dev/null"]) == EXIT_SPEC_ERROR
    assert "weight 99" in capsys.readouterr().err


def test_usage_errors_exit_3():
    with pytest.raises(SystemExit) as ei:
        main(["decode", "--code", "prs13", "--alg", "nope"])
    assert ei.value.code == EXIT_SPEC_ERROR
    with pytest.raises(SystemExit) as ei:
        main(["params"])  # --code is required
    assert ei.value.code == EXIT_SPEC_ERROR
    with pytest.raises(SystemExit) as ei:
        main(["frobnicate"])
    assert ei.value.code == EXIT_SPEC_ERROR
    with pytest.raises(SystemExit) as ei:
        main(["corrupt", "--code", "prs13"])  # --seed is mandatory
    assert ei.value.code == EXIT_SPEC_ERROR


# -- demo / bench / selftest --------------------------------------------------

def test_demo_command(capsys):
    assert main(["demo"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "8/8 cases passed" in out
    assert out.count("PASS") == 8 and "FAIL" not in out
    for case in demo_mod.CASES:
        assert case.name in out


def test_demo_command_failure(monkeypatch, capsys):
    fake = [CaseResult("made-up", False, ["something diverged"]),
            CaseResult("fine", True, [])]
    monkeypatch.setattr(demo_mod, "run_demo", lambda: fake)
    assert main(["demo"]) == EXIT_MISMATCH
    out = capsys.readouterr().out
    assert "made-up" in out and "FAIL" in out
    assert "something diverged" in out
    assert "1/2 cases passed" in out


def test_bench(capsys):
    assert main(["bench", "--code", "prs13", "--trials", "2",
                 "--seed", "5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "equivalence: OK (4 paired trials)" in out
    assert out.count(" pgz ") + out.count("pgz ") >= 2  # rows per weight


def test_bench_zero_trials(capsys):
    assert main(["bench", "--code", "prs13", "--trials", "0"]) == EXIT_OK
    assert "equivalence: OK (0 paired trials)" in capsys.readouterr().out


def test_selftest(capsys):
    assert main(["selftest", "--trials", "2", "--seed", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "weight 1: 2/2 decoder/oracle agreements" in out
    assert "weight 2: 2/2 decoder/oracle agreements" in out
    assert "min_distance(PRS(Z7,3)) = 4 (expected 4)" in out
    assert "selftest: OK" in out


def test_selftest_budget_refusal(capsys):
    assert main(["selftest", "--code", "prs31", "--trials", "1"]) == EXIT_BUDGET
    assert "budget exceeded" in capsys.readouterr().err


# -- vector line parsing ------------------------------------------------------

def test_parse_vector_line_tokens():
    v = parse_vector_line(F25, "[[1, 1], x, 0]")
    assert v == Vec(F25, (F25.element([1, 1]).code, gen25.code, 0))
    v2 = parse_vector_line(Z13, "  [1, 2, 3] :: Vector[Z13]  ")
    assert v2 == Vec(Z13, (1, 2, 3))


def test_parse_vector_line_errors():
    for bad in ("1, 2, 3", "[1, [2]", "[1]]", "[]", "[1, zz]"):
        with pytest.raises(ValueError):
            parse_vector_line(Z13, bad)


# -- installed entry point ----------------------------------------------------

def test_console_script_demo():
    proc = subprocess.run(["alternant", "demo"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "8/8 cases passed" in proc.stdout
