from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from tgrs.cli import run

Y = "w^13,w^10,w^2,w^10,w^5,w^6,w^7,w^2,w^5,w^4,0,1"


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_classify():
    code, out, _ = call("classify", "--spec", "fixture:ex42")
    assert code == 0
    assert out.strip() == "NMDS [12,5,7] over GF(16)"


def test_classify_json_is_deterministic():
    a = call("classify", "--spec", "fixture:gf11_tgrs_grs_equivalent", "--json")[1]
    b = call("--json", "classify", "--spec", "fixture:gf11_tgrs_grs_equivalent")[1]
    assert a == b
    data = json.loads(a)
    assert data["class"]["tag"] == "MDS" and data["target"] == "10"


def test_decode():
    code, out, _ = call("decode", "--spec", "fixture:ex42", "--received", Y, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["outcome"] == "CODEWORD"
    assert data["error_support"] == [2, 5, 7]
    assert data["Z"] == [2, 5, 7]


def test_decode_failure_exit_code():
    bad = "w,w^2,w^3,w^4,w^5,w^6,w^7,w^8,w^9,w^10,w^11,w^12"
    code, out, _ = call("decode", "--spec", "fixture:ex42", "--received", bad, "--json")
    data = json.loads(out)
    assert code == (2 if data["outcome"] == "TOO_MANY_ERRORS" else 0)


def test_radius():
    code, out, _ = call("radius", "--spec", "fixture:ex43")
    assert code == 0 and out.strip().endswith(": 3")
    assert json.loads(call("radius", "--spec", "fixture:ex43", "--json")[1])["radius"] == 3


def test_matrices():
    data = json.loads(call("matrices", "--spec", "fixture:ex42", "--json")[1])
    assert len(data["G"]) == 5 and len(data["H"]) == 7
    assert data["H"][5][11] == "w^6"


def test_ecp():
    code, out, _ = call("ecp", "verify", "--spec", "fixture:ex42", "--json")
    assert code == 0 and json.loads(out)["ok"]
    data = json.loads(call("ecp", "build", "--spec", "fixture:ex42", "--json")[1])
    assert data["t"] == 3 and data["parity"] == "even"


def test_schur():
    data = json.loads(call("schur", "--spec", "fixture:gf13_tgrs_non_grs", "--json")[1])
    assert data["dim"] == 6
    data = json.loads(call("schur", "--dual", "--dist", "--spec", "fixture:gf11_etgrs_non_grs", "--json")[1])
    assert data["of"] == "dual" and data["dim"] == 6
    code, _, _ = call("schur", "--certificate", "--spec", "fixture:gf11_tgrs_grs_equivalent")
    assert code == 3
    code, out, _ = call("schur", "--certificate", "--spec", "fixture:gf13_tgrs_non_grs")
    assert code == 0 and out.startswith("CERTIFIED_NON_GRS")


def test_equiv_pair(tmp_path):
    other = tmp_path / "grs.json"
    other.write_text(
        json.dumps(
            {"field": {"p": 11, "m": 1, "modulus": [0, 1]},
             "generator": [["1"] * 6, ["1", "2", "5", "6", "9", "10"], ["1", "4", "3", "3", "4", "1"]]}
        )
    )
    data = json.loads(call("equiv", "pair", str(other), "--spec", "fixture:gf11_tgrs_grs_equivalent", "--json")[1])
    assert data["equivalent"] and len(data["witness"]["perm"]) == 6


def test_deephole():
    data = json.loads(call("deephole", "vector", "--spec", "fixture:ex43", "--json")[1])
    assert data["u"] == ["4", "3", "12", "12", "3", "9"]
    data = json.loads(call("deephole", "check", "--samples", "3", "--seed", "1", "--spec", "fixture:ex43", "--json")[1])
    assert data["is_deep_hole"] and data["radius"] == 3 and data["family_all_deep"]
    code, _, err = call("deephole", "vector", "--class", "2", "--spec", "fixture:ex43")
    assert code == 64 and "class 2" in err


def test_bad_inputs(tmp_path):
    assert call("classify")[0] == 64
    assert call("classify", "--spec", str(tmp_path / "missing.json"))[0] == 64
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call("classify", "--spec", str(broken))[0] == 64
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"p": 11, "m": 1}, "S": ["1", "2", "3"], "v": "ones", "eta": "1", "k": 3}))
    code, _, err = call("classify", "--spec", str(bad))
    assert code == 64 and err.startswith("error:")
    assert call("decode", "--spec", "fixture:ex42", "--received", "w^99,x")[0] == 64
    assert call("frobnicate", "--spec", "fixture:ex42")[0] == 64


def test_cap_exit_code():
    assert call("radius", "--primal", "--cap", "10", "--spec", "fixture:ex42")[0] == 65


def test_stdin_and_module_entry():
    text = open(__import__("tgrs").fixture_path("ex42")).read()
    proc = subprocess.run(
        [sys.executable, "-m", "tgrs", "classify", "--spec", "-"], input=text, capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "NMDS [12,5,7] over GF(16)"
