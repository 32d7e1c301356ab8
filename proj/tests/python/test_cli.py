"""End-to-end CLI tests: exit-code contract and wire-format round-trips.

The binary path comes from the SIMKERN_CLI environment variable (set by the
ctest harness); the tests are skipped when it is absent.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("SIMKERN_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="SIMKERN_CLI not set")


def run(args, stdin=None):
    return subprocess.run(
        [CLI] + args, input=stdin, capture_output=True, text=True, timeout=120
    )


def generate(family, params=None, seed=0):
    args = ["generate", family, "--seed", str(seed)]
    if params:
        args += ["--params", ",".join(f"{k}={v}" for k, v in params.items())]
    proc = run(args)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def test_generate_and_analyze_pipe():
    payload = generate("example5x5")
    assert payload["certificate"]["all_passed"] is True
    matrix = json.dumps(payload["matrix"])
    proc = run(["analyze", "-", "--group", "roots:4"], stdin=matrix)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["pi_min"]["blocks"] == [[1, 2, 4, 5], [3]]
    assert report["pmp_order"] == 5


def test_round_trip_exactness():
    for family, params in [
        ("example5x5", None),
        ("pmp2-6x6", None),
        ("random-psd", {"n": "5", "r": "2"}),
    ]:
        payload = generate(family, params, seed=3)["matrix"]
        text = json.dumps(payload)
        proc = run(["analyze", "-"], stdin=text)
        assert proc.returncode == 0
        # emit-parse-emit is a fixed point of the wire format
        again = run(["generate", family] + (
            ["--params", ",".join(f"{k}={v}" for k, v in params.items())] if params else []
        ) + ["--seed", "3"])
        assert json.loads(again.stdout)["matrix"] == payload


def test_pmp_and_psrp_subcommands():
    proc = run(["pmp", "-", "--order"], stdin="2,1\n1,2\n")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pmp_order"] == 2

    matrix = json.dumps(generate("hns-fail-3x3")["matrix"])
    proc = run(["pmp", "-", "--k", "3"], stdin=matrix)
    verdict = json.loads(proc.stdout)["k_pmp"]
    assert verdict["holds"] is False
    assert verdict["witness"] == [1, 2, 3]

    proc = run(["psrp", "-", "--k", "1"], stdin="2,1\n1,2\n")
    assert json.loads(proc.stdout)["k_psrp"]["holds"] is True


def test_partition_and_kernel_subcommands():
    matrix = json.dumps(generate("example5x5")["matrix"])
    proc = run(["partition", "-", "--group", "circle", "--stratum"], stdin=matrix)
    report = json.loads(proc.stdout)
    assert report["pi_min"]["blocks"] == [[1, 2, 4, 5], [3]]
    assert report["pi_stratum"]["blocks"] == [[1, 2, 4, 5], [3]]

    proc = run(["kernel", "-", "--simultaneous"], stdin=matrix)
    assert json.loads(proc.stdout)["simultaneous_kernel"]["dim"] == 2

    proc = run(["kernel", "-", "--combination", "1,2,3,4,5"], stdin=matrix)
    assert json.loads(proc.stdout)["combination_kernel"]["dim"] == 2


def test_verify_single_and_counterexample():
    matrix = json.dumps(generate("example5x5")["matrix"])
    proc = run(["verify", "-"], stdin=matrix)
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert lines[-1]["summary"] == "pass"
    assert any(l.get("check") == "t3pmp-equality" and l["status"] == "pass" for l in lines)

    t8 = json.dumps(generate("toeplitz", {"n": "8"})["matrix"])
    proc = run(["verify", "t3pmp", "-"], stdin=t8)
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert any("expected-inequality" in l.get("detail", "") for l in lines)


def test_verify_corpus():
    proc = run(["verify", "--corpus", "1..24"])
    assert proc.returncode == 0, proc.stderr
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert lines[-1]["summary"] == "pass"
    assert lines[-1]["checks"] > 24


def test_exit_codes():
    # invalid input: non-Hermitian exact matrix
    proc = run(["analyze", "-"], stdin="1,1\n0,1\n")
    assert proc.returncode == 2
    # invalid input: unparseable payload
    proc = run(["kernel", "-"], stdin="{broken")
    assert proc.returncode == 2
    # invalid input: unknown group
    matrix = json.dumps(generate("example5x5")["matrix"])
    proc = run(["analyze", "-", "--group", "dihedral:8"], stdin=matrix)
    assert proc.returncode == 2
    # missing file
    proc = run(["analyze", "/nonexistent/path.json"])
    assert proc.returncode == 2


def test_table_format_and_out(tmp_path):
    matrix = json.dumps(generate("example5x5")["matrix"])
    out = tmp_path / "report.txt"
    proc = run(["analyze", "-", "--format", "table", "--out", str(out)], stdin=matrix)
    assert proc.returncode == 0
    body = out.read_text()
    assert "pmp_order: 5" in body


def test_csv_input():
    proc = run(["analyze", "-"], stdin="2,2,1\n2,2,1\n1,1,1\n")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["domain"] == "rational"
    assert report["pi_min"]["blocks"] == [[1, 2], [3]]


def test_domain_flag():
    proc = run(["analyze", "-", "--domain", "float"], stdin="2,1\n1,2\n")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["domain"] == "float"
    proc = run(["partition", "-", "--domain", "gaussian-rational", "--group", "cyclic:2"],
               stdin="1,2\n2,8\n")
    assert json.loads(proc.stdout)["pi_min"]["blocks"] == [[1, 2]]


def test_kernel_t3pmp_table():
    matrix = json.dumps(generate("example5x5")["matrix"])
    proc = run(["kernel", "-", "--t3pmp"], stdin=matrix)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)["t3pmp"]
    assert report["all_equal"] is True
    assert report["dims"] == [2, 2, 2, 2]


def test_analyze_hns_section():
    payload = generate("random-hns", {"n": "6"}, seed=5)["matrix"]
    proc = run(["analyze", "-"], stdin=json.dumps(payload))
    report = json.loads(proc.stdout)
    assert report["hns"]["certified_psd"] is True
