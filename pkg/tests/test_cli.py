import json
import math
import subprocess
import sys

import pytest

from crooked.cli import main

HALF = '{"type":"halfspace","vertex":[0,0,0],"director":[-1,0,0]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def record(out):
    lines = out.strip().splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--vec", "0,1,1")
    assert code == 0 and out == '{"class":"null_future"}\n'


def test_frame(capsys):
    code, out, _ = run(capsys, "frame", "--dir", "1,0,0")
    rec = record(out)
    r = 1 / math.sqrt(2)
    assert rec["s_minus"] == pytest.approx([0, r, r]) and rec["s_plus"] == pytest.approx([0, -r, r])


def test_frame_rational(capsys):
    code, out, _ = run(capsys, "frame", "--dir", "5/4,0,3/4", "--rational")
    rec = record(out)
    assert code == 0 and rec["s"] == ["5/4", 0, "3/4"]


def test_contains(capsys):
    code, out, _ = run(capsys, "contains", "--point", "0,0,0", "--closed")
    assert record(out) == {"contains": True, "closed": True, "stratum": "vertex"}
    code, out, _ = run(capsys, "contains", "--point", "0,0,0")
    assert record(out)["contains"] is False


def test_linearize(capsys):
    code, out, _ = run(capsys, "linearize", "--halfspace", "0,0,0:1.5430806348152437,0,1.1752011936438014")
    assert record(out)["klein_boundary_x"] == pytest.approx(math.tanh(1.0))


def test_disjoint_worked_pair(capsys):
    h2 = '{"type":"halfspace","vertex":[0,1,0],"director":[1.5430806348152437,0,1.1752011936438014]}'
    code, out, _ = run(capsys, "disjoint", "--h1", HALF, "--h2", h2, "--oracle", "2000")
    rec = record(out)
    assert code == 0 and rec["closed_disjoint"] and rec["dg"] and rec["agree"]


def test_disjoint_same_vertex(capsys):
    code, out, _ = run(capsys, "disjoint", "--h1", HALF, "--h2", "0,0,0:1.5430806348152437,0,1.1752011936438014")
    rec = record(out)
    assert rec["open_disjoint"] is True and rec["closed_disjoint"] is False and rec["witness"] is not None


def test_disjoint_scene_crossing(capsys, tmp_path):
    scene = tmp_path / "scene.jsonl"
    scene.write_text(HALF + "\n" + '{"type":"halfspace","vertex":[3,3,0],"director":[0,1,0]}\n')
    code, out, _ = run(capsys, "disjoint", "--scene", str(scene), "--oracle", "1000")
    rec = record(out)
    assert code == 0 and rec["relation"] == "crossing" and rec["closed_disjoint"] is False and rec["witness"]


def test_zigzag_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "zigzag", "--plane", "0,1,1:1,0,0:0,1,0.5")
    assert code == 0 and out.startswith("t,x,y,z,stratum\n") and out.count("\n") == 5
    svg = tmp_path / "z.svg"
    code, out, _ = run(capsys, "zigzag", "--plane", "0,1,1:1,0,0:0,1,0.5", "--out", "svg", "--output", str(svg))
    assert code == 0 and out == "" and "<path" in svg.read_text()


def test_zigzag_rejects_indefinite_plane(capsys):
    code, _, err = run(capsys, "zigzag", "--plane", "0,0,0:1,0,0:0,0,1")
    assert code == 2 and "definite" in err


def test_foliate_csv(capsys):
    spec = '{"type":"foliation","t_range":[-3,3],"coeffs":{"a":1.4142135623730951,"b":1.4142135623730951},"p0":[0,0,0],"steps":60}'
    code, out, err = run(capsys, "foliate", "--spec", spec)
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert all(abs(float(px) + 2 * float(t)) < 1e-6 for t, px, _, _ in rows)
    assert json.loads(err)["certified"] is True


def test_foliate_obj_report_on_stdout(capsys, tmp_path):
    spec = '{"type":"foliation","t_range":[-1,1],"coeffs":{"a":"exp(t)","b":1},"p0":[0,0,0],"steps":20}'
    obj = tmp_path / "f.obj"
    code, out, _ = run(capsys, "foliate", "--spec", spec, "--emit", "obj", "--output", str(obj), "--clip", "2")
    assert code == 0 and record(out)["certified"] is True
    assert obj.read_text().startswith("v ")


def test_mesh_deterministic(capsys):
    _, a, _ = run(capsys, "mesh", "--clip", "2", "--resolution", "2")
    _, b, _ = run(capsys, "mesh", "--clip", "2", "--resolution", "2")
    assert a == b and a.count("\nf ") > 0


@pytest.mark.parametrize("argv", [
    ["classify", "--vec", "1,2"],
    ["contains", "--point", "a,b,c"],
    ["contains", "--point", "0,0,0", "--halfspace", '{"type":"halfspace","vertex":[0,0,0]}'],
    ["frame", "--dir", "0,0,1"],
    ["disjoint", "--h1", HALF],
    ["mesh", "--clip", "-1"],
    ["foliate", "--spec", '{"type":"foliation","t_range":[0,1],"coeffs":{"a":1,"b":-1},"p0":[0,0,0]}'],
])
def test_validation_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("crooked ")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crooked", "classify", "--vec", "1,0,0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == '{"class":"spacelike"}\n'
