"""Command-line frontend.

Subcommands: classify, project, orbit, trace, poncelet, separate, selftest,
emit-figure.  Output is JSON by default or CSV via --format csv; all
sampling is deterministically seeded, so repeated invocations are
byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from typing import Sequence

from .angles import PI
from .triangle import TriangleVariable, classify, from_vertices, orientation
from .shape import class_of, orbit as class_orbit
from .projections import classify_sphere_locus, to_sphere, to_torus
from .families import (
    Family,
    Model,
    PonceletConfig,
    chord_tangency_residual,
    constant_angle_family,
    constant_ratio_family,
    incircle_outcircle,
    inscribed_family,
    level_value,
    poncelet_family,
    separation_test,
)
from .checks import ALL_CHECKS, random_nondegenerate


def _tol() -> float:
    return float(os.environ.get("SHAPE_TOL", "1e-9"))


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def _triangle_from_args(args: argparse.Namespace) -> TriangleVariable:
    A, B, C = (_parse_complex(v) for v in args.vertices)
    directions = None
    if getattr(args, "directions", None):
        directions = [float(v) for v in args.directions]
    return from_vertices(A, B, C, directions=directions)


def _emit(obj, fmt: str, csv_rows=None, csv_header=None) -> None:
    if fmt == "csv" and csv_rows is not None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(csv_header)
        for row in csv_rows:
            writer.writerow(row)
    else:
        print(json.dumps(obj, indent=2))


def _family_from_spec(kind: str, params: Sequence[float]) -> Family:
    if kind == "constant-angle":
        return constant_angle_family(params[0])
    if kind == "constant-ratio":
        return constant_ratio_family(params[0])
    if kind == "inscribed":
        return inscribed_family(-1.0, 1.0)
    raise ValueError(f"unknown family kind: {kind}")


def _cmd_classify(args: argparse.Namespace) -> int:
    T = _triangle_from_args(args)
    out = {
        "degeneracy": classify(T, _tol()).value,
        "orientation": orientation(T, _tol()).value,
        "angles": [float(x) for x in class_of(T).angles],
    }
    _emit(out, args.format, [[out["degeneracy"], out["orientation"], *out["angles"]]],
          ["degeneracy", "orientation", "alpha", "beta", "gamma"])
    return 0


def _cmd_project(args: argparse.Namespace) -> int:
    c = class_of(_triangle_from_args(args))
    if args.model == "sphere":
        s = to_sphere(c)
        loci = sorted(f.value for f in classify_sphere_locus(s, max(_tol(), 1e-9)))
        out = {"x": s.x, "y": s.y, "z": s.z, "loci": loci}
        _emit(out, args.format, [[s.x, s.y, s.z, ";".join(loci)]],
              ["x", "y", "z", "loci"])
    elif args.model == "torus":
        t = to_torus(c)
        vals = [float(x) for x in t.as_tuple()]
        out = {"p": vals[0], "q": vals[1], "r": vals[2]}
        _emit(out, args.format, [vals], ["p", "q", "r"])
    else:
        out = c.to_json()
        _emit(out, args.format,
              [[v for pair in out["sides"] for v in pair] + out["angles"]],
              ["a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "alpha", "beta", "gamma"])
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    images = class_orbit(class_of(_triangle_from_args(args)), max(_tol(), 1e-9))
    out = {"size": len(images), "classes": [c.to_json() for c in images]}
    rows = [
        [i] + [v for pair in c.to_json()["sides"] for v in pair] + c.to_json()["angles"]
        for i, c in enumerate(images)
    ]
    _emit(out, args.format, rows,
          ["index", "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "alpha", "beta", "gamma"])
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    params = [float(v) for v in args.param.split(",")] if args.param else []
    if args.family == "poncelet":
        cfg = PonceletConfig.from_radii(args.r, args.R)
        rows = []
        for k in range(args.samples):
            theta = 2.0 * PI * k / args.samples
            c = class_of(poncelet_family(cfg, theta))
            s, t = to_sphere(c), to_torus(c)
            rows.append([theta, json.dumps(c.to_json()), s.x, s.y, s.z]
                        + [float(x) for x in t.as_tuple()])
    else:
        fam = _family_from_spec(args.family, params)
        lo, hi = fam.domain
        span = hi - lo
        rows = []
        for k in range(1, args.samples + 1):
            t_par = lo + span * k / (args.samples + 1)
            c = class_of(fam.eval(t_par))
            s, t = to_sphere(c), to_torus(c)
            rows.append([t_par, json.dumps(c.to_json()), s.x, s.y, s.z]
                        + [float(x) for x in t.as_tuple()])
    header = ["t", "class", "x", "y", "z", "p", "q", "r"]
    out = [dict(zip(header, row)) for row in rows]
    _emit(out, args.format, rows, header)
    return 0


def _cmd_poncelet(args: argparse.Namespace) -> int:
    cfg = PonceletConfig.from_radii(args.r, args.R)
    rows = []
    for k in range(args.samples):
        theta = 2.0 * PI * k / args.samples
        T = poncelet_family(cfg, theta)
        got = incircle_outcircle(T)
        rows.append([theta, got.r / got.R, chord_tangency_residual(cfg, T)]
                    + [v for P in T.vertices for v in (P.real, P.imag)])
    header = ["theta", "r_over_R", "tangency_residual",
              "A_re", "A_im", "B_re", "B_im", "C_re", "C_im"]
    out = {"config": {"r": cfg.r, "R": cfg.R, "d": cfg.d},
           "orbit": [dict(zip(header, row)) for row in rows]}
    _emit(out, args.format, rows, header)
    return 0


def _cmd_separate(args: argparse.Namespace) -> int:
    kind, _, rest = args.pair.partition(":")
    params = [float(v) for v in rest.split(",")] if rest else []
    if len(params) != 2:
        raise ValueError("--pair needs two comma-separated parameters, e.g. "
                         "constant-angle:1.5707963,2.0943951")
    f1 = _family_from_spec(kind, params[:1])
    f2 = _family_from_spec(kind, params[1:])
    model = {"dyck": Model.DYCK, "sphere": Model.SPHERE, "torus": Model.TORUS}[args.model]
    report = separation_test(f1, f2, model)
    out = report.to_json()
    _emit(out, args.format,
          [[out["model"], out["distance"], out["verdict"]]],
          ["model", "distance", "verdict"])
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    failed = 0
    for name, fn in ALL_CHECKS:
        passed, detail = fn()
        status = "PASS" if passed else "FAIL"
        print(f"{status} {name}: {detail}")
        failed += 0 if passed else 1
    return 0 if failed == 0 else 1


def _poncelet_levels_rows(levels: Sequence[float], grid: int) -> list[list[float]]:
    rows = []
    for level in levels:
        for i in range(1, grid):
            alpha = PI * i / grid
            hi = PI - alpha
            mid = hi / 2.0

            def f(beta: float) -> float:
                return level_value((alpha, beta, PI - alpha - beta)) - level

            if f(mid) < 0.0:
                continue
            for lo_b, hi_b in ((1e-12, mid), (hi - 1e-12, mid)):
                a_, b_ = lo_b, hi_b
                for _ in range(80):
                    m = (a_ + b_) / 2.0
                    if f(a_) * f(m) <= 0.0:
                        b_ = m
                    else:
                        a_ = m
                beta = (a_ + b_) / 2.0
                rows.append([level, alpha, beta, PI - alpha - beta])
    return rows


def _cmd_emit_figure(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.name == "poncelet-levels":
        levels = [float(v) for v in args.levels.split(",")]
        writer.writerow(["level", "alpha", "beta", "gamma"])
        for row in _poncelet_levels_rows(levels, args.grid):
            writer.writerow(row)
    elif args.name == "sphere-atlas":
        rng = random.Random(7)
        writer.writerow(["index", "x", "y", "z", "orientation", "loci"])
        for i in range(args.grid * 4):
            T = random_nondegenerate(rng)
            s = to_sphere(class_of(T))
            loci = sorted(f.value for f in classify_sphere_locus(s, 1e-6))
            writer.writerow([i, s.x, s.y, s.z, orientation(T).value, ";".join(loci)])
    elif args.name == "torus-atlas":
        rng = random.Random(11)
        writer.writerow(["index", "p", "q", "r", "sheet"])
        for i in range(args.grid * 4):
            T = random_nondegenerate(rng)
            t = to_torus(class_of(T))
            total = sum(float(x) for x in t.as_tuple())
            sheet = "pi" if abs(total - PI) < abs(total - 2.0 * PI) else "2pi"
            writer.writerow([i, *(float(x) for x in t.as_tuple()), sheet])
    else:
        raise ValueError(f"unknown figure name: {args.name}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trishape",
        description="Triangle similarity classes, their moduli surface, and "
        "its sphere/torus projections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triangle_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--vertices", nargs=3, required=True, metavar="RE,IM",
                       help="three vertices A B C as re,im pairs")
        p.add_argument("--directions", nargs=6, type=float, default=None,
                       help="direction sextuple for an all-coincident triangle")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("classify", help="degeneracy type, orientation, angles")
    add_triangle_opts(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("project", help="image of the class in a chosen model")
    add_triangle_opts(p)
    p.add_argument("--model", choices=("sphere", "torus", "dyck"), required=True)
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("orbit", help="orbit of the class under the 12 symmetries")
    add_triangle_opts(p)
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("trace", help="sample a family across its parameter domain")
    p.add_argument("--family", choices=("poncelet", "inscribed", "constant-angle",
                                        "constant-ratio"), required=True)
    p.add_argument("--param", default=None,
                   help="family parameter(s), comma-separated")
    p.add_argument("--r", type=float, default=0.5, help="inradius (poncelet)")
    p.add_argument("--R", type=float, default=2.0, help="circumradius (poncelet)")
    p.add_argument("--samples", type=int, default=32)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("poncelet", help="one revolving orbit with closure residuals")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--samples", type=int, default=32)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_poncelet)

    p = sub.add_parser("separate", help="compare two family limits in one model")
    p.add_argument("--pair", required=True,
                   help="kind:param1,param2 (e.g. constant-angle:1.5707963,2.0943951)")
    p.add_argument("--model", choices=("dyck", "sphere", "torus"), required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_separate)

    p = sub.add_parser("selftest", help="run the full verification suite")
    p.set_defaults(fn=_cmd_selftest)

    p = sub.add_parser("emit-figure", help="deterministic CSV figure data")
    p.add_argument("--name", choices=("poncelet-levels", "sphere-atlas",
                                      "torus-atlas"), required=True)
    p.add_argument("--levels", default="0.1,0.2,0.3,0.4",
                   help="contour levels for poncelet-levels")
    p.add_argument("--grid", type=int, default=50)
    p.set_defaults(fn=_cmd_emit_figure)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
