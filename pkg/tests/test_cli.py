import io
import json
import subprocess
import sys

import pytest

from flaggcs.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, (json.loads(out.getvalue()) if out.getvalue() else None), err.getvalue()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


ALL_C = {"algebra": "A2", "blocks": [{"root": r, "kind": "complex", "sign": 1} for r in ([1, 0], [0, 1], [1, 1])]}


def test_check_all_complex(tmp_path):
    code, out, _ = call("check", "--algebra", "A2", "--input", write(tmp_path, "j.json", ALL_C))
    assert code == 0
    assert out == {"gacs": True, "integrable": True, "type": 3}


def test_check_not_integrable(tmp_path):
    j = {"algebra": "A2", "blocks": [{"root": r, "kind": "noncomplex", "a": "0", "x": "1"} for r in ([1, 0], [0, 1], [1, 1])]}
    code, out, _ = call("check", "--input", write(tmp_path, "j.json", j))
    assert code == 1
    assert out["integrable"] is False and out["failing"][0]["reason"] == "nc-conditions-fail"


def test_build():
    code, out, _ = call("build", "--algebra", "A2", "--theta", "a1,a2", "--x", "2,2", "--b", "1,1")
    assert code == 0
    top = out["blocks"][2]
    assert top["root"] == [1, 1] and top["x"] == "1" and top["a"] == "2"


def test_build_rejects_bad_sign_choice():
    code, _, err = call("build", "--algebra", "A2", "--signs", "1,1,-1")
    assert code == 2 and "not integrable" in err


def test_cells_a1():
    code, out, _ = call("cells", "--algebra", "A1")
    assert code == 0
    assert out["count"] == 4 and out["weyl_classes"] == 2
    assert sorted((s["dim"], s["type"], s["cells"]) for s in out["shapes"]) == [(0, 1, 2), (1, 0, 2)]


def test_roots():
    code, out, _ = call("roots", "--algebra", "G2", "--weyl")
    assert out["d"] == 6 and out["weyl_order"] == 12


def test_normal_form(tmp_path):
    j = {"algebra": "A1", "blocks": [{"root": [1], "kind": "noncomplex", "a": "3", "x": "2"}]}
    code, out, _ = call("normal-form", "--input", write(tmp_path, "j.json", j))
    assert out["coordinates"] == [{"root": [1], "kind": "symplectic", "x": "2"}]
    assert out["witness"] == [{"root": [1], "b": "3/2"}]


def test_spinor_verify(tmp_path):
    code, out, _ = call("spinor", "--verify-annihilator", "--input", write(tmp_path, "j.json", ALL_C))
    assert code == 0
    assert out["annihilator"] == {"annihilates_eigenspace": True, "dimension": 6, "expected_dimension": 6}
    assert out["lowest_degree"] == 3


def test_weyl_orbit(tmp_path):
    code, out, _ = call("weyl-orbit", "--input", write(tmp_path, "j.json", ALL_C))
    assert out["orbit_size"] == 6 and out["invariants_preserved"]
    code, out, _ = call("weyl-orbit", "--input", write(tmp_path, "j.json", ALL_C), "--word", "1,2,1")
    assert all(b["sign"] == -1 for b in out["structure"]["blocks"])


def _pair(x):
    j = {"algebra": "A1", "blocks": [{"root": [1], "kind": "complex", "sign": 1}]}
    jp = {"algebra": "A1", "blocks": [{"root": [1], "kind": "noncomplex", "a": "3", "x": x}]}
    return {"J": j, "Jp": jp}


def test_kahler(tmp_path):
    code, out, _ = call("kahler", "--input", write(tmp_path, "p.json", _pair("2")))
    assert code == 0 and out["kahler"]
    assert out["moduli"][0]["ray"] == "{+0}xR+" and out["moduli"][0]["metric_x"] == "2"
    code, out, _ = call("kahler", "--almost", "--input", write(tmp_path, "p.json", _pair("-2")))
    assert code == 1 and not out["kahler"]


def test_oracle_check(tmp_path):
    code, out, _ = call("oracle-check", "--algebra", "A2", "--samples", "20", "--seed", "4")
    assert code == 0 and out["agreements"] == 20 and out["disagreements"] == []
    code, out, _ = call("oracle-check", "--input", write(tmp_path, "j.json", ALL_C))
    assert out["checked"] == 1


@pytest.mark.parametrize(
    "doc,fragment",
    [
        ("{not json", "malformed JSON"),
        ({"algebra": "A2", "blocks": ALL_C["blocks"][:2]}, "no block for positive roots [[1, 1]]"),
        ({"algebra": "A2", "blocks": ALL_C["blocks"] + [ALL_C["blocks"][0]]}, "blocks[3].root"),
        ({"algebra": "A2", "blocks": [{"root": [1, 0], "kind": "noncomplex", "a": "0.5", "x": "1"}]}, "blocks[0].a"),
        ({"algebra": "A2", "blocks": [{"root": [1, 0], "kind": "noncomplex", "a": "0", "x": "0"}]}, "blocks[0].x"),
        ({"algebra": "Q2", "blocks": []}, "algebra"),
        ({"algebra": "A2", "blocks": [{"root": [2, 0], "kind": "complex", "sign": 1}]}, "blocks[0].root"),
    ],
)
def test_input_errors(tmp_path, doc, fragment):
    code, out, err = call("check", "--input", write(tmp_path, "j.json", doc))
    assert code == 2 and out is None
    assert fragment in err


def test_flag_errors():
    assert call("build", "--algebra", "A2", "--theta", "a3", "--x", "1")[0] == 2
    assert call("build", "--algebra", "A2", "--theta", "a1", "--x", "1/0")[0] == 2
    assert call("build", "--algebra", "A2", "--theta", "a1", "--x", "-1")[0] == 2
    assert call("cells")[0] == 2
    assert call("nonsense")[0] == 2


def test_output_file_and_determinism(tmp_path):
    target = tmp_path / "cells.json"
    assert call("cells", "--algebra", "A2", "--output", str(target))[0] == 0
    first = target.read_text()
    assert call("cells", "--algebra", "A2", "--output", str(target))[0] == 0
    assert target.read_text() == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "flaggcs", "roots", "--algebra", "A2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["positive_roots"] == [[1, 0], [0, 1], [1, 1]]
