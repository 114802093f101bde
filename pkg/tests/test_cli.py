"""Command-line interface: documents in, envelopes out, exit codes."""

import json
import subprocess
import sys

import numpy as np
import pytest

from spindual.bilinears import bilinears
from spindual.representatives import seed_spinor

CLI = [sys.executable, "-m", "spindual.cli"]


def run_cli(args, stdin=""):
    return subprocess.run(
        CLI + args, input=stdin, capture_output=True, text=True, timeout=120
    )


def spinor_doc(psi, extra=None):
    doc = {"spinor": {"components": [[z.real, z.imag] for z in psi]}}
    if extra:
        doc.update(extra)
    return json.dumps(doc)


def bilinear_doc(B):
    pack = lambda z: [z.real, z.imag]
    return json.dumps(
        {
            "bilinears": {
                "phi": pack(B.phi),
                "theta": pack(B.theta),
                "u": [pack(z) for z in B.u],
                "s": [pack(z) for z in B.s],
                "m": [pack(z) for z in B.m_pairs()],
            }
        }
    )


def test_classify_standard_seed():
    res = run_cli(["classify"], stdin=spinor_doc(seed_spinor(2)))
    assert res.returncode == 0, res.stderr
    env = json.loads(res.stdout)
    assert env["schema"] == "spindual/1"
    assert env["command"] == "classify"
    assert env["payload"]["standard_class"] == "2"
    assert env["payload"]["extended_class"] == "2"
    assert env["payload"]["seed_fpk_passes"] is True
    assert "conventions" in env


def test_classify_with_dual_reports_both_route_deviation():
    doc = spinor_doc(
        seed_spinor(5),
        extra={"dual": {"a": [0, 0], "b": [1, 0]}},
    )
    res = run_cli(["classify"], stdin=doc)
    env = json.loads(res.stdout)
    assert env["payload"]["extended_class"] == "4.1"
    assert env["residuals"]["route_deviation"] < 1e-10


def test_classify_identity_dual_matches_plain():
    psi = seed_spinor(1)
    plain = json.loads(run_cli(["classify"], stdin=spinor_doc(psi)).stdout)
    with_dual = json.loads(
        run_cli(["classify"], stdin=spinor_doc(psi, extra={"dual": {"a": [1, 0]}})).stdout
    )
    assert plain["payload"]["extended_class"] == with_dual["payload"]["extended_class"]


def test_byte_determinism():
    doc = spinor_doc(seed_spinor(3))
    out1 = run_cli(["classify"], stdin=doc).stdout
    out2 = run_cli(["classify"], stdin=doc).stdout
    assert out1 == out2


def test_decompose_identity():
    doc = json.dumps({"matrix": [[[1, 0] if i == j else [0, 0] for j in range(4)] for i in range(4)]})
    env = json.loads(run_cli(["decompose"], stdin=doc).stdout)
    assert env["payload"]["multivector"]["scalar"] == [1, 0]
    assert env["payload"]["all_real"] is True
    assert env["residuals"]["round_trip"] < 1e-12


def test_decompose_flags_non_real():
    mat = [[[0, 0] for _ in range(4)] for _ in range(4)]
    mat[0][0] = [0, 1]  # i in the corner: not self-adjoint under gamma^0
    env = json.loads(run_cli(["decompose"], stdin=json.dumps({"matrix": mat})).stdout)
    assert env["payload"]["all_real"] is False
    assert "warning" in env["payload"]


def test_decompose_to_matrix():
    doc = json.dumps({"multivector": {"scalar": [2, 0]}})
    env = json.loads(run_cli(["decompose", "--direction", "to-matrix"], stdin=doc).stdout)
    assert env["payload"]["matrix"][0][0] == [2, 0]
    assert env["payload"]["matrix"][0][1] == [0, 0]


def test_representative_command():
    env = json.loads(run_cli(["representative", "5.1"]).stdout)
    assert env["payload"]["achieved"] == "5.1"
    assert env["payload"]["verified"] is True
    m = np.array(env["payload"]["bilinears"]["m"])
    assert np.abs(m).max() > 1e-6
    for key in ("phi", "theta"):
        val = env["payload"]["bilinears"][key]
        assert abs(complex(val[0], val[1])) < 1e-9


def test_representative_standard_label():
    env = json.loads(run_cli(["representative", "3"]).stdout)
    assert env["payload"]["achieved"] == "3"
    assert env["payload"]["dual"]["a"] == [1, 0]


def test_representative_unknown_label_exits_2():
    res = run_cli(["representative", "9.9"])
    assert res.returncode == 2
    assert "unknown class label" in res.stderr


def test_fpk_command_passes_and_fails():
    B = bilinears(seed_spinor(1))
    env = json.loads(run_cli(["fpk"], stdin=bilinear_doc(B)).stdout)
    assert env["payload"]["passes"] is True
    broken = json.loads(bilinear_doc(B))
    broken["bilinears"]["u"][0][0] += 1.0
    env = json.loads(run_cli(["fpk"], stdin=json.dumps(broken)).stdout)
    assert env["payload"]["passes"] is False
    assert env["payload"]["worst_identity"]


def test_invert_round_trip():
    B = bilinears(seed_spinor(5))
    env = json.loads(run_cli(["invert"], stdin=bilinear_doc(B)).stdout)
    assert env["residuals"]["bilinear_round_trip"] < 1e-8


def test_invert_zero_set_exits_4():
    from spindual.bilinears import BilinearSet

    res = run_cli(["invert"], stdin=bilinear_doc(BilinearSet.zero()))
    assert res.returncode == 4


def test_malformed_input_exits_2():
    res = run_cli(["classify"], stdin="{not json")
    assert res.returncode == 2
    res = run_cli(["classify"], stdin=json.dumps({"spinor": {"components": [[1, 0]]}}))
    assert res.returncode == 2
    assert "spinor.components" in res.stderr


def test_output_flag(tmp_path):
    out = tmp_path / "result.json"
    res = run_cli(["--output", str(out), "representative", "2"])
    assert res.returncode == 0
    assert res.stdout == ""
    env = json.loads(out.read_text())
    assert env["payload"]["achieved"] == "2"


def test_policy_flags_override():
    # an enormous absolute floor turns every block into "zero"
    res = run_cli(["--policy-abs", "1e9", "classify"], stdin=spinor_doc(seed_spinor(1)))
    env = json.loads(res.stdout)
    assert env["payload"]["extended_class"] == "degenerate"
