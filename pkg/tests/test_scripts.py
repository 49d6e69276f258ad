import importlib.util
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_disjointness_sweep_runs(capsys):
    mod = load("disjointness_sweep")
    mod.sweep(mod.SweepConfig(pairs=10))
    out = capsys.readouterr().out
    assert out.count("disagreements=0") == 2


def test_foliation_demo_matches_closed_form(tmp_path):
    mod = load("foliation_demo")
    rec = mod.run(mod.DemoConfig(steps=60, leaves=11, mesh_leaves=3, out_dir=str(tmp_path)))
    assert rec["certified"] and rec["closed_form_max_error"] < 1e-9
    assert (tmp_path / "leaves.obj").read_text().startswith("v ")
