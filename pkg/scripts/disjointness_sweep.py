"""Compare the disjointness tests on random consistently oriented pairs.

For each pair the vertex offset is a random combination of the allowable
cone generators, so roughly half of the pairs are disjoint.  Prints one
summary line per geodesic relation and every disagreement found.

    python3 scripts/disjointness_sweep.py --pairs 300 --oracle 2000
"""

import argparse
import math
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from crooked import CrookedHalfspace, Vec3, allowable_cone, disjointness_report, null_frame


@dataclass
class SweepConfig:
    pairs: int = 200
    oracle_samples: int = 0  # 0 skips the sampling oracle (LP witness search still runs)
    seed: int = 0
    spread: float = 0.8
    coef_range: tuple = (-1.0, 2.0)


def _isometry(rng, spread):
    def rot(th):
        c, s = math.cos(th), math.sin(th)
        return np.array([[c, -s, 0], [s, c, 0], [0, 0, 1.0]])
    r = rng.normal() * spread
    boost = np.array([[math.cosh(r), 0, math.sinh(r)], [0, 1.0, 0], [math.sinh(r), 0, math.cosh(r)]])
    return rot(rng.uniform(0, 2 * math.pi)) @ boost @ rot(rng.uniform(0, 2 * math.pi))


def random_pair(rng, kind, cfg: SweepConfig):
    s1 = np.array([-1.0, 0.0, 0.0])
    if kind == "ultraparallel":
        t = rng.uniform(0.05, 3.0)
        s2 = np.array([math.cosh(t), 0.0, math.sinh(t)])
    else:
        F = null_frame(Vec3(*s1)).matrix()
        u = rng.normal()
        s2 = F @ np.diag([1.0, math.exp(u), math.exp(-u)]) @ np.linalg.solve(F, np.ones(3))
    M = _isometry(rng, cfg.spread)
    s1, s2 = Vec3(*map(float, M @ s1)), Vec3(*map(float, M @ s2))
    gens = np.array([g.to_array() for g in allowable_cone(s1, s2).generators], dtype=float)
    p2 = rng.normal(size=3) * 3
    p1 = p2 + rng.uniform(*cfg.coef_range, size=len(gens)) @ gens
    return CrookedHalfspace(Vec3(*map(float, p1)), s1), CrookedHalfspace(Vec3(*map(float, p2)), s2)


def sweep(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    for kind in ("ultraparallel", "asymptotic"):
        counts = Counter()
        start = time.perf_counter()
        for k in range(cfg.pairs):
            H1, H2 = random_pair(rng, kind, cfg)
            rep = disjointness_report(H1, H2, oracle_samples=cfg.oracle_samples, seed=cfg.seed + k)
            counts["disjoint" if rep.cone_result else "intersecting"] += 1
            if rep.disagreement:
                counts["disagree"] += 1
                print("  disagreement:", rep.as_record(), H1, H2)
        dt = time.perf_counter() - start
        print(f"{kind:14s} pairs={cfg.pairs} disjoint={counts['disjoint']} "
              f"intersecting={counts['intersecting']} disagreements={counts['disagree']} ({dt:.1f}s)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=SweepConfig.pairs)
    ap.add_argument("--oracle", type=int, default=SweepConfig.oracle_samples)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    sweep(SweepConfig(pairs=a.pairs, oracle_samples=a.oracle, seed=a.seed))


if __name__ == "__main__":
    main()
