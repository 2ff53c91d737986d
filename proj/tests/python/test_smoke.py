"""Smoke tests for the python module."""

import json
import math

import numpy as np
import pytest

qchain = pytest.importorskip("_qchain")


def test_pauli_string_counts_and_unitary():
    c = qchain.synth_pauli_string("XYZX", 0.4, backend="iswap", protocol="staircase")
    report = c.resource_report()
    assert report["counts"]["iswap"] == 6
    u = c.unitary()
    assert u.shape == (16, 16)
    assert np.allclose(u @ u.conj().T, np.eye(16), atol=1e-10)
    target = qchain.target_unitary(
        family="pauli", axes="XYZX", alpha=0.4, protocol="staircase"
    )
    assert qchain.phase_distance(u, target) < 1e-9


def test_multicontrol_selection_verifies():
    c = qchain.synth_multicontrol(4, target="x", protocol="selection")
    assert c.num_ancilla == 3
    assert c.resource_report()["counts"]["toffoli"] == 6
    target = qchain.target_unitary(family="mcx", num_controls=4, protocol="selection")
    result = qchain.verify(c, target, tol=1e-9)
    assert result["passed"]
    assert result["leakage"] < 1e-10


def test_echo_counts():
    c = qchain.synth_multicontrol(3, target="x", protocol="decoupling")
    assert c.resource_report()["counts"]["rptoffoli"] == 10
    lowered = c.lowered("cnot")
    assert lowered.resource_report()["counts"]["cnot"] == 40


def test_ucc_roundtrip_and_baseline():
    c = qchain.synth_ucc(1, 1, 0.35)
    report = c.resource_report()
    assert report["counts"]["rptoffoli"] == 8
    assert report["counts"]["iswap"] == 4
    target = qchain.target_unitary(family="ucc", m=1, n=1, alpha=0.35)
    assert qchain.verify(c, target)["passed"]

    terms = qchain.ucc_pauli_terms(2, 1)
    assert len(terms) == 4

    base = qchain.trotter_ucc_baseline(1, 1, 0.7)
    assert qchain.verify(c, base.unitary())["passed"]


def test_json_round_trip():
    c = qchain.synth_number_conserving(["G", "G"], 0.5)
    text = c.to_json()
    doc = json.loads(text)
    assert doc["numRegister"] == 4
    back = qchain.Circuit.from_json(text)
    assert back.num_gates == c.num_gates
    assert back.resource_report() == c.resource_report()


def test_qasm_export_mentions_registers():
    c = qchain.synth_multicontrol(2, target="x", protocol="selection")
    qasm = c.to_qasm()
    assert "OPENQASM 2.0" in qasm
    assert "qreg anc[1]" in qasm


def test_identity_suite():
    for name, residual in qchain.identity_suite():
        assert residual <= 1e-12, name
