"""Scene records: one JSON object per line.

Record types are ``halfspace``, ``line``, ``plane`` and ``foliation``.
Unknown fields are rejected, ``chart`` defaults to ``"std"`` (the only
chart accepted in files), and emitting a parsed record gives back the same
line with keys in a fixed order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .emit import DefinitePlane
from .expr import compile_expr
from .foliation import CoefficientPath, CrookedFoliation, DirectorPath, vertex_path
from .halfspace import CrookedHalfspace
from .lines import Line
from .minkowski import Vec3


class SceneError(ValueError):
    pass


FIELDS = {
    "halfspace": ("type", "vertex", "director", "chart"),
    "line": ("type", "base", "dir", "chart"),
    "plane": ("type", "point", "u", "v", "chart"),
    "foliation": ("type", "director_family", "t_range", "coeffs", "p0", "steps", "anchor"),
}
REQUIRED = {
    "halfspace": ("vertex", "director"),
    "line": ("base", "dir"),
    "plane": ("point", "u", "v"),
    "foliation": ("t_range", "coeffs", "p0"),
}


@dataclass(frozen=True)
class FoliationSpec:
    t_range: tuple[float, float]
    a: Any
    b: Any
    p0: Vec3
    steps: int = 1000
    director_family: str = "orthogonal"
    anchor: float | None = None

    def __post_init__(self):
        if self.director_family != "orthogonal":
            raise SceneError(f"unknown director family {self.director_family!r}")
        if self.steps < 2:
            raise SceneError("steps must be at least 2")
        if not self.t_range[1] > self.t_range[0]:
            raise SceneError("t_range must be increasing")
        compile_expr(self.a)
        compile_expr(self.b)

    def build(self) -> CrookedFoliation:
        dp = DirectorPath.orthogonal(self.t_range)
        cp = CoefficientPath.from_expr(self.a, self.b)
        return vertex_path(dp, cp, self.p0, self.steps, self.anchor)


def _number(x, exact: bool):
    if exact and isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            raise SceneError(f"not a rational number: {x!r}") from None
    if isinstance(x, bool) or not isinstance(x, (int, float, Fraction)):
        raise SceneError(f"expected a number, got {x!r}")
    if exact:
        return Fraction(x)
    if isinstance(x, float) and not math.isfinite(x):
        raise SceneError("non-finite number")
    return float(x)


def _vec(x, exact: bool = False) -> Vec3:
    if not isinstance(x, list) or len(x) != 3:
        raise SceneError(f"expected a list of three numbers, got {x!r}")
    return Vec3(*(_number(c, exact) for c in x))


def load_json(text: str, exact: bool = False) -> dict:
    try:
        if exact:
            obj = json.loads(text, parse_float=Fraction, parse_int=Fraction)
        else:
            obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"malformed record: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise SceneError("a record must be a JSON object")
    return obj


def parse_record(obj, exact: bool = False):
    """Turn a record (dict or JSON text) into a library object."""
    if isinstance(obj, str):
        obj = load_json(obj, exact)
    kind = obj.get("type")
    if kind not in FIELDS:
        raise SceneError(f"unknown record type {kind!r}")
    extra = set(obj) - set(FIELDS[kind])
    if extra:
        raise SceneError(f"unknown fields for {kind}: {', '.join(sorted(extra))}")
    missing = [k for k in REQUIRED[kind] if k not in obj]
    if missing:
        raise SceneError(f"missing fields for {kind}: {', '.join(missing)}")
    if obj.get("chart", "std") != "std":
        raise SceneError("only the std chart is supported in scene files")
    try:
        if kind == "halfspace":
            v, d = _vec(obj["vertex"], exact), _vec(obj["director"], exact)
            return CrookedHalfspace.exact(v, d) if exact else CrookedHalfspace(v, d)
        if kind == "line":
            return Line(_vec(obj["base"], exact), _vec(obj["dir"], exact))
        if kind == "plane":
            P = DefinitePlane(_vec(obj["point"]), _vec(obj["u"]), _vec(obj["v"]))
            return P
        tr = obj["t_range"]
        if not isinstance(tr, list) or len(tr) != 2:
            raise SceneError("t_range must be [t0, t1]")
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, dict) or set(coeffs) != {"a", "b"}:
            raise SceneError('coeffs must be {"a": expr, "b": expr}')
        steps = obj.get("steps", 1000)
        if isinstance(steps, Fraction):
            steps = int(steps) if steps.denominator == 1 else steps
        if isinstance(steps, bool) or not isinstance(steps, int):
            raise SceneError("steps must be an integer")
        anchor = obj.get("anchor")
        return FoliationSpec(
            (float(_number(tr[0], False)), float(_number(tr[1], False))),
            _coeff(coeffs["a"]), _coeff(coeffs["b"]),
            _vec(obj["p0"]), steps, obj.get("director_family", "orthogonal"),
            None if anchor is None else float(_number(anchor, False)),
        )
    except SceneError:
        raise
    except ValueError as exc:
        raise SceneError(str(exc)) from None


def _coeff(x):
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    if isinstance(x, str):
        return x
    raise SceneError(f"coefficient must be a number or expression string, got {x!r}")


def _num_out(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    x = float(x)
    return 0.0 if x == 0 else x


def _vec_out(v: Vec3) -> list:
    return [_num_out(c) for c in v]


def to_record(obj) -> dict:
    if isinstance(obj, CrookedHalfspace):
        return {"type": "halfspace", "vertex": _vec_out(obj.vertex), "director": _vec_out(obj.director), "chart": "std"}
    if isinstance(obj, Line):
        return {"type": "line", "base": _vec_out(obj.base), "dir": _vec_out(obj.dir), "chart": "std"}
    if isinstance(obj, DefinitePlane):
        return {"type": "plane", "point": _vec_out(obj.point), "u": _vec_out(obj.u), "v": _vec_out(obj.v), "chart": "std"}
    if isinstance(obj, FoliationSpec):
        rec = {
            "type": "foliation",
            "director_family": obj.director_family,
            "t_range": [obj.t_range[0], obj.t_range[1]],
            "coeffs": {"a": obj.a, "b": obj.b},
            "p0": _vec_out(obj.p0),
            "steps": obj.steps,
        }
        if obj.anchor is not None:
            rec["anchor"] = obj.anchor
        return rec
    raise TypeError(f"no record form for {type(obj).__name__}")


def dumps(record: dict) -> str:
    """Single-line JSON with the record's key order and no spaces."""
    return json.dumps(record, separators=(",", ":"), allow_nan=False)


def emit_record(obj) -> str:
    return dumps(to_record(obj))


def read_scene(text: str, exact: bool = False) -> list:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_record(line, exact))
        except SceneError as exc:
            raise SceneError(f"line {n}: {exc}") from None
    return out
