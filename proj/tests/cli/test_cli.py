# SPDX-License-Identifier: Apache-2.0
"""End-to-end CLI tests; the binary path comes from $DEDESUM_CLI."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("DEDESUM_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="DEDESUM_CLI not set")


def run(*args, expect=0):
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == expect, proc.stderr
    return proc.stdout.strip()


def test_dedekind():
    assert run("dedekind", "2", "3") == "-1/18"
    assert run("dedekind", "2", "3", "--naive") == "-1/18"


def test_negative_argument_via_separator():
    assert run("dedekind", "--", "-2", "3") == "1/18"


def test_rademacher_and_knuth():
    assert run("rademacher", "2", "3", "--x=0", "--y=0") == "-1/18"
    assert run("rademacher", "3", "4", "--x=-1/3", "--y=1/5") != ""
    assert run("knuth", "2", "3", "1") == "1/36"
    assert run("knuth", "2", "3", "4") == "1/36"


def test_fourier_and_zagier():
    assert run("fourier", "0", "--mod", "2", "--parts", "1") == "1/4"
    assert run("fourier", "5", "--mod", "7") == "-1/7"  # empty parts
    assert run("zagier", "3", "1", "1") == "-2/9"


def test_partition_methods_agree():
    for parts, n in [("1,2", "4"), ("2,3", "1"), ("3,5,7", "100"), ("1", "7")]:
        dp = run("partition", "--parts", parts, n, "--method", "dp")
        formula = run("partition", "--parts", parts, n, "--method", "formula")
        assert dp == formula
    assert run("partition", "--parts", "1,2", "4", "--method", "formula") == "3"
    assert run("partition", "--parts", "1,2", "3", "--interior") == "1"


def test_q_and_quasipoly():
    assert run("q", "--parts", "1,2", "4") == "11/4"
    out = run("quasipoly", "--parts", "1,2")
    assert out.splitlines()[0] == "poly 3/4 1/2"
    assert "period 2: 1/4 -1/4" in out


def test_json_round_trip():
    payload = json.loads(run("--json", "dedekind", "2", "3"))
    assert payload["result"] == "-1/18"
    again = json.loads(run("--json", "dedekind", payload["a"], payload["b"]))
    assert again == payload

    qp = json.loads(run("--json", "quasipoly", "--parts", "2,3"))
    assert qp["poly"] == ["5/12", "1/6"]


def test_out_file(tmp_path):
    path = tmp_path / "report.json"
    run("--out", str(path), "dedekind", "2", "3")
    assert json.loads(path.read_text())["result"] == "-1/18"


def test_verify_pass_and_determinism():
    first = run("verify", "dedekind", "--max", "50")
    assert "failures=0" in first and "status=pass" in first
    out1 = run("verify", "all", "--max", "6", "--seed", "1")
    out2 = run("verify", "all", "--max", "6", "--seed", "1")
    assert out1 == out2


def test_cone2d():
    out = run("cone2d", "--gen", "1,0", "1,2", "--truncate", "8")
    lines = out.splitlines()
    assert lines[0].startswith(("+ x^(", "- x^("))
    assert "/ (1 - x^(" in lines[0]
    assert lines[-1] == "series check (N=8): ok"


def test_validation_exit_codes():
    proc = subprocess.run(
        [CLI, "partition", "--parts", "2,4", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 2
    assert "coprime" in proc.stderr

    proc = subprocess.run([CLI, "dedekind", "2"], capture_output=True, text=True)
    assert proc.returncode == 2

    proc = subprocess.run(
        [CLI, "fourier", "0", "--mod", "4", "--parts", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_bench_runs():
    out = run("bench", "dedekind", "--bits", "64")
    assert "fast_avg_ms" in out
