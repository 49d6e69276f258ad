"""Integrate a crooked foliation along the orthogonal director family,
certify it, and write the vertex path (CSV) and a few leaves (OBJ).

    python3 scripts/foliation_demo.py --a "exp(t)" --b 1 --out-dir /tmp/fol
"""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from crooked import CoefficientPath, DirectorPath, Vec3, certify_foliation, vertex_path
from crooked.emit import Box, foliation_mesh, vertex_path_csv
from crooked.foliation import closed_form_orthogonal


@dataclass
class DemoConfig:
    a: str = "1.4142135623730951"  # sqrt 2, the a = b = 1 case of the closed form
    b: str = "1.4142135623730951"
    t_range: tuple = (-3.0, 3.0)
    steps: int = 600
    leaves: int = 101
    mesh_leaves: int = 7
    clip: float = 4.0
    out_dir: str = "foliation_out"


def run(cfg: DemoConfig) -> dict:
    F = vertex_path(DirectorPath.orthogonal(cfg.t_range), CoefficientPath.from_expr(cfg.a, cfg.b),
                    Vec3(0.0, 0.0, 0.0), cfg.steps)
    rep = certify_foliation(F, leaves=cfg.leaves)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "vertex_path.csv").write_text(vertex_path_csv(F.ts, F.points))
    idx = np.linspace(0, len(F) - 1, cfg.mesh_leaves).round().astype(int)
    mesh = foliation_mesh([F.leaf(int(i)) for i in idx], Box.around(Vec3(0.0, 0.0, 0.0), cfg.clip))
    (out / "leaves.obj").write_text(mesh.to_obj())
    summary = rep.as_record()
    try:
        # constant coefficients have a closed form to compare against
        a, b = float(cfg.a), float(cfg.b)
    except ValueError:
        pass
    else:
        ref = closed_form_orthogonal(a / np.sqrt(2), b / np.sqrt(2), F.ts)
        summary["closed_form_max_error"] = float(np.abs(ref - F.points).max())
    summary["faces"] = len(mesh.faces)
    return summary


def main():
    ap = argparse.ArgumentParser(description="crooked foliation demo")
    ap.add_argument("--a", default=DemoConfig.a)
    ap.add_argument("--b", default=DemoConfig.b)
    ap.add_argument("--steps", type=int, default=DemoConfig.steps)
    ap.add_argument("--out-dir", default=DemoConfig.out_dir)
    a = ap.parse_args()
    print(json.dumps(run(DemoConfig(a=a.a, b=a.b, steps=a.steps, out_dir=a.out_dir))))


if __name__ == "__main__":
    main()
