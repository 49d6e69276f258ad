"""Rewrite the golden files used by the acceptance suite.

Run only after an intentional change to an output format:
    python3 scripts/regen_golden.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from crooked import cli  # noqa: E402
from test_acceptance import GOLDEN, GOLDEN_CASES  # noqa: E402


def main():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in sorted(GOLDEN_CASES.items()):
        code = cli.main(argv + ["--seed", "0", "--output", str(GOLDEN / name)])
        print(f"{name}: exit {code}, {(GOLDEN / name).stat().st_size} bytes")


if __name__ == "__main__":
    main()
