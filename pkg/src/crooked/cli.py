"""Command-line front end: ``crooked <command> [options]``.

Every command writes single-line JSON records to stdout.  Validation
problems go to stderr with exit status 2; ``disjoint`` exits with 3 when the
independent methods disagree and ``foliate`` when certification fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .disjointness import disjointness_report
from .emit import Box, DefinitePlane, crooked_plane_mesh, foliation_mesh, vertex_path_csv, zigzag, zigzag_csv, zigzag_svg
from .foliation import certify_foliation
from .halfspace import CrookedHalfspace, contains, linearize, stratum
from .hyperbolic import klein_boundary_x
from .minkowski import DEFAULT_EPS, ORIGIN, Vec3, classify, null_frame
from .scene import FoliationSpec, SceneError, dumps, load_json, parse_record, read_scene, to_record

EXIT_VALIDATION = 2
EXIT_DISAGREE = 3


def _num(text: str, exact: bool):
    text = text.strip()
    if exact:
        return Fraction(text)
    return float(text)


def parse_vec(text: str, exact: bool = False) -> Vec3:
    parts = text.split(",")
    if len(parts) != 3:
        raise SceneError(f"expected x,y,z but got {text!r}")
    try:
        return Vec3(*(_num(p, exact) for p in parts))
    except ValueError:
        raise SceneError(f"not a vector: {text!r}") from None


def _out_num(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    x = float(x)
    return 0.0 if x == 0 else x


def _out_vec(v: Vec3) -> list:
    return [_out_num(c) for c in v]


def parse_halfspace(text: str | None, exact: bool) -> CrookedHalfspace:
    """``vertex:director`` or a JSON halfspace record; default is H(0, (1,0,0))."""
    if text is None:
        return CrookedHalfspace.exact(ORIGIN, Vec3(1, 0, 0)) if exact else CrookedHalfspace(ORIGIN, Vec3(1.0, 0.0, 0.0))
    text = text.strip()
    if text.startswith("{"):
        H = parse_record(load_json(text, exact), exact)
        if not isinstance(H, CrookedHalfspace):
            raise SceneError("expected a halfspace record")
        return H
    parts = text.split(":")
    if len(parts) != 2:
        raise SceneError("halfspace must be 'vx,vy,vz:sx,sy,sz' or a JSON record")
    v, d = parse_vec(parts[0], exact), parse_vec(parts[1], exact)
    return CrookedHalfspace.exact(v, d) if exact else CrookedHalfspace(v, d)


def parse_plane(text: str) -> DefinitePlane:
    text = text.strip()
    if text.startswith("{"):
        P = parse_record(load_json(text))
        if not isinstance(P, DefinitePlane):
            raise SceneError("expected a plane record")
        return P
    parts = text.split(":")
    if len(parts) != 3:
        raise SceneError("plane must be 'px,py,pz:ux,uy,uz:vx,vy,vz' or a JSON record")
    return DefinitePlane(*(parse_vec(p) for p in parts))


def parse_box(text: str, center: Vec3) -> Box:
    """Half-size around ``center`` or explicit corners 'x0,y0,z0:x1,y1,z1'."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        try:
            return Box(tuple(float(x) for x in parse_vec(lo)), tuple(float(x) for x in parse_vec(hi)))
        except ValueError as exc:
            raise SceneError(str(exc)) from None
    try:
        half = float(text)
    except ValueError:
        raise SceneError(f"bad clip box {text!r}") from None
    if not half > 0:
        raise SceneError("clip box must have positive volume")
    return Box.around(center, half)


def _scene_objects(path: str, exact: bool) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            return read_scene(fh.read(), exact)
    except OSError as exc:
        raise SceneError(f"cannot read scene: {exc}") from None


def _pick(objs, kind, count):
    found = [o for o in objs if isinstance(o, kind)]
    if len(found) < count:
        raise SceneError(f"scene needs {count} {kind.__name__} record(s)")
    return found[:count]


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def emit(record: dict) -> None:
    sys.stdout.write(dumps(record) + "\n")


# -- commands --------------------------------------------------------------


def cmd_classify(args) -> int:
    v = parse_vec(args.vec, args.rational)
    emit({"class": classify(v, args.eps).value})
    return 0


def cmd_frame(args) -> int:
    f = null_frame(parse_vec(args.dir, args.rational), exact=args.rational, eps=args.eps)
    emit({"s": _out_vec(f.s), "s_minus": _out_vec(f.s_minus), "s_plus": _out_vec(f.s_plus)})
    return 0


def cmd_contains(args) -> int:
    H = parse_halfspace(args.halfspace, args.rational)
    eps = 0.0 if args.rational else args.eps
    q = parse_vec(args.point, args.rational)
    emit({"contains": contains(H, q, closed=args.closed, eps=eps), "closed": args.closed,
          "stratum": stratum(H, q, eps).value})
    return 0


def cmd_linearize(args) -> int:
    H = parse_halfspace(args.halfspace, args.rational)
    h = linearize(H)
    rec = {"s": _out_vec(h.s)}
    try:
        rec["klein_boundary_x"] = _out_num(klein_boundary_x(h, args.eps))
    except (ValueError, ZeroDivisionError):
        rec["klein_boundary_x"] = None
    emit(rec)
    return 0


def cmd_disjoint(args) -> int:
    if args.scene:
        H1, H2 = _pick(_scene_objects(args.scene, False), CrookedHalfspace, 2)
    else:
        if not (args.h1 and args.h2):
            raise SceneError("give --scene or both --h1 and --h2")
        H1, H2 = parse_halfspace(args.h1, False), parse_halfspace(args.h2, False)
    report = disjointness_report(H1, H2, oracle_samples=args.oracle, seed=args.seed, eps=args.eps)
    emit(report.as_record())
    return EXIT_DISAGREE if report.disagreement else 0


def cmd_zigzag(args) -> int:
    if args.scene:
        objs = _scene_objects(args.scene, False)
        (H,) = _pick(objs, CrookedHalfspace, 1)
        (P,) = _pick(objs, DefinitePlane, 1)
    else:
        H = parse_halfspace(args.halfspace, False)
        if args.plane is None:
            raise SceneError("give --plane or --scene")
        P = parse_plane(args.plane)
    Z = zigzag(H, P)
    text = zigzag_csv(Z, args.ray_length) if args.out == "csv" else zigzag_svg(Z, P, args.ray_length)
    _write(text, args.output)
    return 0


def _foliation_spec(args) -> FoliationSpec:
    if args.scene:
        (spec,) = _pick(_scene_objects(args.scene, False), FoliationSpec, 1)
        return spec
    if args.spec is None:
        raise SceneError("give --spec or --scene")
    spec = parse_record(load_json(args.spec))
    if not isinstance(spec, FoliationSpec):
        raise SceneError("expected a foliation record")
    return spec


def cmd_foliate(args) -> int:
    spec = _foliation_spec(args)
    try:
        F = spec.build()
    except ValueError as exc:
        raise SceneError(str(exc)) from None
    report = certify_foliation(F, leaves=args.leaves, eps=args.eps)
    if args.emit == "csv":
        text = vertex_path_csv(F.ts, F.points)
    else:
        box = parse_box(args.clip, ORIGIN)
        idx = report.leaf_indices[:: max(1, len(report.leaf_indices) // max(1, args.mesh_leaves))]
        text = foliation_mesh([F.leaf(i) for i in idx], box, args.resolution).to_obj()
    _write(text, args.output)
    rec = {"foliation": to_record(spec), **report.as_record()}
    # the emitted file owns stdout when no output path is given
    stream = sys.stdout if args.output not in (None, "-") else sys.stderr
    stream.write(dumps(rec) + "\n")
    return 0 if report.passed else EXIT_DISAGREE


def cmd_mesh(args) -> int:
    H = parse_halfspace(args.halfspace, False)
    box = parse_box(args.clip, H.vertex)
    _write(crooked_plane_mesh(H, box, args.resolution).to_obj(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=DEFAULT_EPS, help="tolerance for sign predicates")
    common.add_argument("--rational", action="store_true", help="exact rational arithmetic where supported")
    common.add_argument("--seed", type=int, default=0, help="seed for the sampling oracle")
    common.add_argument("--closed", action="store_true", help="use closed halfspaces")
    common.add_argument("--oracle", type=int, default=0, metavar="N", help="oracle samples per halfspace")

    p = argparse.ArgumentParser(prog="crooked", description="Crooked planes in 2+1 Minkowski space.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="causal type of a vector")
    s.add_argument("--vec", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("frame", parents=[common], help="null frame of a spacelike vector")
    s.add_argument("--dir", required=True)
    s.set_defaults(func=cmd_frame)

    s = sub.add_parser("contains", parents=[common], help="halfspace membership of a point")
    s.add_argument("--halfspace")
    s.add_argument("--point", required=True)
    s.set_defaults(func=cmd_contains)

    s = sub.add_parser("linearize", parents=[common], help="halfplane of particle directions")
    s.add_argument("--halfspace")
    s.set_defaults(func=cmd_linearize)

    s = sub.add_parser("disjoint", parents=[common], help="disjointness report for two halfspaces")
    s.add_argument("--scene")
    s.add_argument("--h1")
    s.add_argument("--h2")
    s.set_defaults(func=cmd_disjoint)

    s = sub.add_parser("zigzag", parents=[common], help="section of a crooked plane by a definite plane")
    s.add_argument("--scene")
    s.add_argument("--halfspace")
    s.add_argument("--plane")
    s.add_argument("--out", choices=("csv", "svg"), default="csv")
    s.add_argument("--output")
    s.add_argument("--ray-length", type=float, default=10.0)
    s.set_defaults(func=cmd_zigzag)

    s = sub.add_parser("foliate", parents=[common], help="integrate and certify a crooked foliation")
    s.add_argument("--scene")
    s.add_argument("--spec")
    s.add_argument("--emit", choices=("csv", "obj"), default="csv")
    s.add_argument("--output")
    s.add_argument("--leaves", type=int, default=101, help="leaves checked pairwise")
    s.add_argument("--mesh-leaves", type=int, default=11)
    s.add_argument("--clip", default="5", help="half-size of the clip box, or corners x0,y0,z0:x1,y1,z1")
    s.add_argument("--resolution", type=int, default=1)
    s.set_defaults(func=cmd_foliate)

    s = sub.add_parser("mesh", parents=[common], help="OBJ mesh of a crooked plane")
    s.add_argument("--halfspace")
    s.add_argument("--clip", default="5", help="half-size of the box around the vertex, or corners x0,y0,z0:x1,y1,z1")
    s.add_argument("--resolution", type=int, default=1)
    s.add_argument("--output")
    s.set_defaults(func=cmd_mesh)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SceneError, ValueError, ZeroDivisionError) as exc:
        print(f"crooked {args.command}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
