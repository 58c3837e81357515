import cmath
import json
import os
import subprocess

import numpy as np
import pytest

import premon


def test_d3_character_table():
    table = premon.character_table(premon.dihedral(3))
    assert [[round(v.real, 9) for v in row] for row in table["characters"]] == [
        [1, 1, 1],
        [1, 1, -1],
        [2, -1, 0],
    ]


def test_idempotents_sum_to_unit():
    # unit of C[D4] is e; unit of D(D3) is sum_h e h*, stored at indices 0..5
    for model, unit in ((premon.group_algebra(4), {(0,)}), (premon.quantum_double(3), {(h,) for h in range(6)})):
        total = {}
        for label in range(len(model)):
            for key, c in model.idempotent(label).items():
                total[key] = total.get(key, 0) + c
        nonzero = {k: v for k, v in total.items() if abs(v) > 1e-12}
        assert set(nonzero) == unit
        assert all(abs(v - 1) < 1e-12 for v in nonzero.values())


def test_double_dims():
    assert premon.quantum_double(3).irrep_dims() == [1, 1, 2, 2, 2, 2, 3, 3]


def test_associator_is_unitary_and_braiding_is_signed_flip():
    t = premon.Twined(premon.group_algebra(3), premon.Signature([0, 1, 1]))
    a = t.associator(2, 2, 2)
    assert np.allclose(a.conj().T @ a, np.eye(8))
    flip = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            flip[j * 2 + i, i * 2 + j] = 1
    assert np.allclose(t.braiding(2, 2), -flip)


def test_census_and_q():
    t = premon.Twined(premon.group_algebra(3), premon.Signature.parse("0,0,1"))
    census = t.census()
    assert [tuple(q) for q, _ in census] == [(2, 2, 2, 2)]
    assert np.abs(t.q(2, 2, 2, 2) - np.eye(16)).max() > 0.5
    assert np.allclose(t.q(1, 2, 1, 2), t.q_from_definition(1, 2, 1, 2))


def test_check_report_passes():
    model = premon.quantum_double(3)
    report = premon.Twined(model, premon.Signature([0, 0, 0, 1, 0, 0, 0, 0])).check(sample=32)
    assert report["pass"] and report["failures"] == 0
    assert report["worst_defect"] < 1e-9


def test_symmetry():
    assert premon.Twined(premon.group_algebra(3), premon.Signature.trivial(3)).symmetry()["kind"] == "symmetric"
    s = premon.Twined(premon.quantum_double(3), premon.Signature.trivial(8)).symmetry()
    assert s["kind"] == "braided" and s["witness"] is not None


def test_fingerprints_distinct():
    model = premon.group_algebra(3)
    digests = {premon.Twined(model, s).fingerprint() for s in premon.Signature.all(3)}
    assert len(digests) == 4


def test_bad_signature_raises():
    with pytest.raises(ValueError):
        premon.Twined(premon.group_algebra(3), premon.Signature([0, 1]))
    with pytest.raises(ValueError):
        premon.Signature([1, 0, 0])


def test_run_cli_in_process():
    code, out, err = premon.run_cli(["chartable", "--dihedral", "3", "--format", "json"])
    assert code == 0 and err == ""
    assert len(json.loads(out)["characters"]) == 3
    code, _, err = premon.run_cli(["twine", "--dihedral", "3", "--signature", "0,1"])
    assert code == 2 and err.startswith("error:")


@pytest.mark.skipif("PREMON_EXE" not in os.environ, reason="premon executable not given")
def test_executable_agrees_with_module():
    args = ["fingerprint", "--dihedral", "3", "--signature", "0,1,0", "--format", "json"]
    proc = subprocess.run([os.environ["PREMON_EXE"], *args], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == premon.run_cli(args)[1]
