import json
import subprocess
import sys

import pytest

from chebdisk import cli

from helpers import SQRT_K_AT_I, THETA3_AT_I2


def run_cli(*argv):
    return cli.run(list(argv))


def invoke(*argv):
    """Run the CLI as a subprocess; returns (exit_code, stdout, stderr)."""
    proc = subprocess.run(
        [sys.executable, "-m", "chebdisk.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


# --- documented examples -------------------------------------------------------

def test_theta_example():
    result = run_cli("theta", "--j", "3", "--v", "0", "--tau-im", "0.5")
    assert result.status == "ok" and result.exit_code == 0
    assert abs(result.payload["re"] - THETA3_AT_I2) < 1e-15
    assert result.payload["im"] == 0.0


def test_cb_coeffs_example():
    result = run_cli("cb", "coeffs", "--n", "2", "--tau-im", "0.5")
    assert result.status == "ok"
    assert abs(result.payload["S"][0] - SQRT_K_AT_I) < 1e-10
    assert result.payload["cross_check_residual"] <= 1e-8


def test_landen_bare_alias():
    result = run_cli("landen", "--id", "n4_sum", "--tau-im", "1.0")
    assert result.status == "ok" and result.exit_code == 0
    assert result.payload["pass"] is True


# --- output document shape ------------------------------------------------------

def test_json_document_parses():
    code, out, _ = invoke("theta", "--j", "3", "--v", "0", "--tau-im", "0.5")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "ok"
    assert set(doc["payload"]) == {"re", "im"}


def test_complex_values_have_re_im_keys():
    code, out, _ = invoke("cb", "eval", "--n", "2", "--tau-im", "0.5", "--z", "0.5,0")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["payload"]["product"]) == {"re", "im"}


def test_csv_format():
    code, out, _ = invoke(
        "--format", "csv", "modulus", "grotzsch", "--t", "0.70710678118654752"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "status,t,modulus"
    fields = lines[1].split(",")
    assert fields[0] == "ok"
    assert abs(float(fields[2]) - 0.25) < 1e-10


def test_no_nan_or_infinity_in_output():
    code, out, _ = invoke("elliptic", "--v", "0.7", "--tau-im", "20")
    assert code == 0
    assert "NaN" not in out and "Infinity" not in out
    json.loads(out)


# --- exit codes -------------------------------------------------------------------

def test_domain_error_exit_two():
    code, out, _ = invoke("theta", "--j", "3", "--v", "0", "--tau-im", "-1")
    assert code == 2
    assert json.loads(out)["status"] == "domain_error"


def test_parse_error_exit_two():
    code, out, _ = invoke("theta", "--j", "3", "--v", "zzz", "--tau-im", "1")
    assert code == 2
    assert json.loads(out)["status"] == "parse_error"


def test_malformed_flags_exit_two_with_usage():
    code, _, err = invoke("theta", "--j", "9", "--v", "0", "--tau-im", "1")
    assert code == 2
    assert "usage" in err.lower() or "invalid" in err.lower()


def test_unverified_limit_exits_one():
    # y = 0.4 is far from the trigonometric limit: a verification failure
    code, out, _ = invoke("landen", "limit", "--id", "n2_prod", "--y-large", "0.4")
    assert code == 1
    doc = json.loads(out)
    assert doc["status"] == "verification_failure"
    assert doc["payload"]["pass"] is False


def test_missing_tau_is_parse_error():
    result = run_cli("theta", "--j", "3", "--v", "0")
    assert result.status == "parse_error" and result.exit_code == 2


# --- determinism --------------------------------------------------------------------

def test_byte_identical_repeated_runs():
    args = ("cb", "build", "--n", "5", "--tau-im", "0.75")
    first = invoke(*args)
    second = invoke(*args)
    assert first == second
    assert first[0] == 0


def test_monodromy_commands():
    result = run_cli("monodromy", "analyze", "--sigma1", "(1 2)", "--sigma2", "(2 3)")
    assert result.payload["tree"] is True
    assert result.payload["dessin"] == {"vertices": 4, "edges": 3}
    result = run_cli(
        "monodromy", "equiv",
        "--sigma1", "(1 2)", "--sigma2", "(2 3)",
        "--other-sigma1", "(2 3)", "--other-sigma2", "(1 2)",
        "--n", "3",
    )
    assert result.payload["equivalent"] is True
    result = run_cli("monodromy", "chebyshev", "--n", "6")
    assert result.payload["dessin"] == {"vertices": 7, "edges": 6}


def test_modulus_commands():
    result = run_cli("modulus", "annulus", "--r", "0.0018674427317079893")
    assert abs(result.payload["modulus"] - 1.0) < 1e-12
    result = run_cli("modulus", "dessin-size", "--n", "2", "--tau-im", "1")
    assert abs(result.payload["dessin_size"] - 0.25) < 1e-8
    # leading-dash complex literals take the --flag=value form
    result = run_cli(
        "modulus", "geodesic", f"--a=-{SQRT_K_AT_I},0", f"--b={SQRT_K_AT_I},0"
    )
    assert abs(result.payload["modulus"] - 0.25) < 1e-10


def test_landen_all_passes():
    result = run_cli("landen", "all")
    assert result.exit_code == 0
    assert result.payload["all_passed"] is True
    # one record per (identity, tau) plus one trig record per identity
    expected = 9 * 6 + 9
    assert len(result.payload["records"]) == expected
