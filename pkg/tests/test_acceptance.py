"""Acceptance criteria, one test per criterion, each printing its verdict line.

Criteria 1..11 run through chebdisk.acceptance (the same code behind
`chebdisk verify-all`); criterion 12 exercises the installed CLI from the
outside: exit codes, byte-identical output, parse diagnostics.
"""

import json
import subprocess
import sys

import pytest

from chebdisk import acceptance


def _check(result):
    print(result.line())
    assert result.passed, result.line()


def test_criterion_1_theta_identity_suite():
    _check(acceptance.criterion_1_theta_transforms())


def test_criterion_2_cd_degeneration():
    _check(acceptance.criterion_2_cd_degeneration())


def test_criterion_3_blaschke_geometry():
    _check(acceptance.criterion_3_blaschke_geometry())


def test_criterion_4_functional_definition():
    _check(acceptance.criterion_4_functional_definition())


def test_criterion_5_composition_law():
    _check(acceptance.criterion_5_composition())


def test_criterion_6_coefficient_triple_oracle():
    _check(acceptance.criterion_6_coefficient_oracles())


def test_criterion_7_critical_values():
    _check(acceptance.criterion_7_critical_values())


def test_criterion_8_chebyshev_degeneration():
    _check(acceptance.criterion_8_chebyshev_degeneration())


def test_criterion_9_monodromy_suite():
    _check(acceptance.criterion_9_monodromy())


def test_criterion_10_modulus_keystone():
    _check(acceptance.criterion_10_modulus_keystone())


def test_criterion_11_landen_catalog():
    _check(acceptance.criterion_11_landen_catalog())


def _invoke(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "chebdisk.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_12_cli_contract():
    code1, out1, _ = _invoke("verify-all")
    code2, out2, _ = _invoke("verify-all")
    doc = json.loads(out1)
    deterministic = out1 == out2
    all_green = code1 == 0 and doc["all_passed" if "all_passed" in doc else "status"]
    payload_ok = doc["status"] == "ok" and doc["payload"]["all_passed"] is True
    bad_code, _, bad_err = _invoke("landen", "verify", "--id", "nope")
    malformed_ok = bad_code == 2 and ("usage" in bad_err.lower() or "invalid" in bad_err.lower())
    passed = deterministic and code1 == 0 and payload_ok and malformed_ok
    print(
        f"{'PASS' if passed else 'FAIL'} criterion 12: CLI contract "
        f"(verify-all exit {code1}, deterministic {deterministic}, "
        f"malformed-input exit {bad_code})"
    )
    assert code1 == 0 and payload_ok
    assert deterministic
    assert malformed_ok
