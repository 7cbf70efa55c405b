"""Command line driver: verify, solve, figure, fuzz.

Reports go to stdout as JSON (schema "cuoco-report/1", floats rounded to
twelve decimals so identical inputs give byte-identical output);
diagnostics go to stderr. Exit codes: 0 all checks passed, 1 a
verification check failed, 2 invalid usage or input.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from . import circles, cosine_law, decomposition, figures, three_sum
from .geometry import (
    GeometryError,
    Point,
    Triangle,
    VERTICES,
    classify,
    metrics,
    norm,
    triangle_from_sides,
    _cos_opposite,
)

SCHEMA = "cuoco-report/1"


class InputError(Exception):
    """Bad command input that argparse cannot catch itself."""


def _num(text: str):
    """Parse a number, keeping integers integral so exact paths stay exact."""
    try:
        return int(text)
    except ValueError:
        return float(text)


def _parse_csv(text: str, expected: int, what: str) -> list:
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != expected:
        raise InputError(f"{what} needs {expected} comma-separated numbers, got {text!r}")
    try:
        return [_num(piece) for piece in parts]
    except ValueError:
        raise InputError(f"could not parse {what}: {text!r}") from None


def _triangle_from_args(args) -> Triangle:
    if getattr(args, "sides", None) and getattr(args, "points", None):
        raise InputError("give either --sides or --points, not both")
    if getattr(args, "sides", None):
        a, b, c = _parse_csv(args.sides, 3, "--sides")
        return triangle_from_sides(a, b, c)
    if getattr(args, "points", None):
        coords = _parse_csv(args.points, 6, "--points")
        return Triangle(
            A=Point(coords[0], coords[1]),
            B=Point(coords[2], coords[3]),
            C=Point(coords[4], coords[5]),
        )
    raise InputError("a triangle is required: pass --sides a,b,c or --points x1,y1,x2,y2,x3,y3")


def _rounded(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, dict):
        return {key: _rounded(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(value) for value in obj]
    return obj


def _emit(report: dict) -> None:
    print(json.dumps(_rounded(report), indent=2))


def _point_json(p: Point) -> list:
    return [p.x, p.y]


def _triangle_json(t: Triangle) -> dict:
    return {name: _point_json(t.vertex(name)) for name in VERTICES}


def cmd_verify(args) -> int:
    t = _triangle_from_args(args)
    tol = args.tol
    m = metrics(t)
    cls = classify(m)
    scale = max(m.a * m.a, m.b * m.b, m.c * m.c)

    identity = cosine_law.verify_cosine_identity(m, tol)
    opposite_sq = {"A": m.a * m.a, "B": m.b * m.b, "C": m.c * m.c}
    defects = {}
    defects_ok = True
    for v in VERTICES:
        defect, residual = cosine_law.euclid_defect(t, v)
        ok = abs(residual) <= tol * opposite_sq[v]
        defects_ok = defects_ok and ok
        defects[v] = {"defect": defect, "residual": residual, "passed": ok}

    d = decomposition.build(t)
    pairs = decomposition.verify_pairs(d, tol)
    trig_vs_exact = {}
    routes_ok = True
    for pair in decomposition.PAIR_CLASSES:
        exact = d.pair_areas.get(pair)
        trig = decomposition.panel_area_trig(pair, m)
        ok = abs(exact - trig) <= tol * max(1.0, scale)
        routes_ok = routes_ok and ok
        trig_vs_exact[pair] = {"exact": exact, "trig": trig, "passed": ok}

    similarity = {}
    similarity_ok = True
    for v in VERTICES:
        rep = decomposition.similarity_check(t, v, tol)
        similarity_ok = similarity_ok and rep.passed
        similarity[v] = {"ch": rep.ch, "ck": rep.ck, "residual": rep.residual, "passed": rep.passed}

    trace = decomposition.derive_cosine_theorem(d)
    trace_ok = trace.max_deviation <= tol * max(1.0, scale)

    passed = all((identity.passed, defects_ok, pairs.passed, routes_ok, similarity_ok, trace_ok))
    _emit({
        "schema": SCHEMA,
        "command": "verify",
        "triangle": _triangle_json(t),
        "sides": {"a": m.a, "b": m.b, "c": m.c},
        "angles": {"alpha": m.alpha, "beta": m.beta, "gamma": m.gamma},
        "classification": {"kind": cls.kind, "vertex": cls.vertex},
        "tol": tol,
        "pair_areas": [d.pair_areas.R, d.pair_areas.S, d.pair_areas.T],
        "checks": {
            "cosine_identity": {"residuals": list(identity.residuals), "passed": identity.passed},
            "euclid_defect": defects,
            "pair_equivalence": {
                "pairs": {
                    check.pair: {
                        "first": check.area_first,
                        "second": check.area_second,
                        "delta": check.delta,
                    }
                    for check in pairs.checks
                },
                "passed": pairs.passed,
            },
            "trig_vs_exact": trig_vs_exact,
            "similarity": similarity,
            "derivation": {
                "steps": [
                    {"expression": step.expression, "panels": list(step.panels), "value": step.value}
                    for step in trace.steps
                ],
                "residual": trace.residual,
                "max_deviation": trace.max_deviation,
                "passed": trace_ok,
            },
        },
        "passed": passed,
    })
    return 0 if passed else 1


def _interpretation_json(report) -> dict:
    return {
        "kind": report.kind,
        "system": {"L": report.system.L, "M": report.system.M, "N": report.system.N},
        "solution": {"x": report.solution.x, "y": report.solution.y, "z": report.solution.z},
        "mapping": report.mapping,
        "geometric": report.geometric,
        "closed_form": report.closed_form,
        "max_residual": report.max_residual,
        "all_positive": report.all_positive,
        "classification": {"kind": report.classification.kind, "vertex": report.classification.vertex},
        "acute_iff_positive": report.acute_iff_positive,
        "passed": report.passed,
    }


def cmd_solve(args) -> int:
    values = [args.L, args.M, args.N]
    if args.degrees:
        values = [math.radians(v) for v in values]
    system = three_sum.ThreeSum(*values)
    sol = three_sum.solve(system)
    report = {
        "schema": SCHEMA,
        "command": "solve",
        "system": {"L": system.L, "M": system.M, "N": system.N},
        "units": "radians" if args.degrees else "as-given",
        "solution": {"x": sol.x, "y": sol.y, "z": sol.z},
        "all_positive": three_sum.all_positive(system),
    }
    passed = True
    if args.interpret:
        t = _triangle_from_args(args)
        interpret = {
            "squares": three_sum.interpret_squares,
            "sides": three_sum.interpret_sides,
            "angles": three_sum.interpret_angles,
        }[args.interpret]
        interpretation = interpret(t, tol=args.tol)
        report["interpretation"] = _interpretation_json(interpretation)
        passed = interpretation.passed
    elif getattr(args, "sides", None) or getattr(args, "points", None):
        raise InputError("triangle input is only used together with --interpret")
    report["passed"] = passed
    _emit(report)
    return 0 if passed else 1


def cmd_figure(args) -> int:
    t = _triangle_from_args(args)
    spec = figures.FigureSpec(
        kind=args.kind,
        fill_palette=args.fill_palette,
        stroke_palette=args.stroke_palette,
        labels=not args.no_labels,
        precision=args.precision,
        omit_degenerate=args.omit_degenerate,
    )
    if args.kind == "euclid_defect":
        data = t
        defect, _ = cosine_law.euclid_defect(t, "B")
        sidecar = {"vertex": "B", "defect": defect}
    elif args.kind in ("cuoco", "cuoco_pairs", "cuoco_obtuse"):
        data = decomposition.build(t)
        pairs = data.pair_areas
        sidecar = {"pair_areas": [pairs.R, pairs.S, pairs.T]}
    elif args.kind == "incircle":
        data = circles.incircle(t)
        sidecar = {
            "center": [data.center.x, data.center.y],
            "radius": data.radius,
            "tangent_lengths": {v: data.tangent_lengths[v] for v in VERTICES},
        }
    else:
        data = circles.circumcircle(t)
        sidecar = {
            "center": [data.center.x, data.center.y],
            "radius": data.radius,
        }
    text = figures.render(data, spec)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {args.out!r}: {exc}") from exc
    _emit({
        "schema": SCHEMA,
        "command": "figure",
        "kind": args.kind,
        "out": args.out,
        "bytes": len(text.encode("utf-8")),
        "report": sidecar,
    })
    return 0


def random_triangle(rng: random.Random, span: float = 10.0) -> Triangle:
    """Rejection-sample a usable triangle with coordinates in [-span, span].

    Collinear triples are rejected outright; numerically thin ones (tiny
    area or side) are rejected as well, since residual checks at 1e-9
    relative are not meaningful at worse conditioning.
    """
    while True:
        coords = [rng.uniform(-span, span) for _ in range(6)]
        try:
            t = Triangle(
                A=Point(coords[0], coords[1]),
                B=Point(coords[2], coords[3]),
                C=Point(coords[4], coords[5]),
            )
        except GeometryError:
            continue
        m = metrics(t)
        if abs(t.twice_area) < 1e-6 or min(m.a, m.b, m.c) < 1e-6:
            continue
        return t


def _near_right(m, band: float = 1e-9) -> bool:
    return any(
        abs(cosine) <= band
        for cosine in (
            _cos_opposite(m.b, m.c, m.a),
            _cos_opposite(m.a, m.c, m.b),
            _cos_opposite(m.a, m.b, m.c),
        )
    )


def _fuzz_checks(t: Triangle, tol: float):
    """Yield (check name, normalized residual) pairs for one triangle."""
    m = metrics(t)
    scale = max(1.0, m.a * m.a, m.b * m.b, m.c * m.c)

    identity = cosine_law.verify_cosine_identity(m, tol)
    yield "cosine_identity", max(abs(r) for r in identity.residuals) / identity.scale

    for v in VERTICES:
        defect, residual = cosine_law.euclid_defect(t, v)
        opposite_sq = {"A": m.a * m.a, "B": m.b * m.b, "C": m.c * m.c}[v]
        yield "euclid_defect", abs(residual) / opposite_sq
        cos_v = {"A": _cos_opposite(m.b, m.c, m.a),
                 "B": _cos_opposite(m.a, m.c, m.b),
                 "C": _cos_opposite(m.a, m.b, m.c)}[v]
        if abs(cos_v) > 1e-12:
            yield "defect_sign", 0.0 if (defect > 0) == (cos_v > 0) else 1.0

    d = decomposition.build(t)
    pairs = decomposition.verify_pairs(d, tol)
    yield "pair_equivalence", max(check.delta for check in pairs.checks) / pairs.scale
    for pair in decomposition.PAIR_CLASSES:
        diff = abs(d.pair_areas.get(pair) - decomposition.panel_area_trig(pair, m))
        yield "trig_vs_exact", diff / scale
    sums = (
        abs(d.pair_areas.R + d.pair_areas.T - m.a * m.a),
        abs(d.pair_areas.R + d.pair_areas.S - m.b * m.b),
        abs(d.pair_areas.S + d.pair_areas.T - m.c * m.c),
    )
    yield "square_sums", max(sums) / scale
    for v in VERTICES:
        rep = decomposition.similarity_check(t, v, tol)
        yield "similarity", abs(rep.residual) / rep.scale

    squares_rep = three_sum.interpret_squares(t, tol)
    yield "squares_interpretation", squares_rep.max_residual
    if squares_rep.acute_iff_positive is not None:
        yield "squares_positivity", 0.0 if squares_rep.acute_iff_positive else 1.0
    sides_rep = three_sum.interpret_sides(t, tol)
    yield "sides_interpretation", sides_rep.max_residual
    yield "sides_positivity", 0.0 if sides_rep.all_positive else 1.0
    angles_rep = three_sum.interpret_angles(t, tol)
    yield "angles_interpretation", angles_rep.max_residual
    if angles_rep.acute_iff_positive is not None:
        yield "angles_positivity", 0.0 if angles_rep.acute_iff_positive else 1.0

    inc = circles.incircle(t)
    closed = circles.tangent_lengths(t)
    side_scale = max(1.0, m.a, m.b, m.c)
    yield "tangent_lengths", max(
        abs(inc.tangent_lengths[v] - closed[v]) for v in VERTICES
    ) / side_scale
    for side, (first, second) in circles.SIDE_ENDPOINTS.items():
        p = t.vertex(first)
        q = t.vertex(second)
        foot, tparam = circles._project_onto_side(inc.center, p, q)
        yield "incircle_radius", abs(norm(inc.center - foot) - inc.radius) / max(1.0, inc.radius)
        yield "tangent_inside", max(0.0, -tparam, tparam - 1.0)

    circ = circles.circumcircle(t)
    yield "circumradius", max(
        abs(norm(circ.center - t.vertex(v)) - circ.radius) for v in VERTICES
    ) / max(1.0, circ.radius)
    measured = circ.splits
    closed_splits = circles.closed_form_splits(m)
    angle_at = {"A": m.alpha, "B": m.beta, "C": m.gamma}
    for v in VERTICES:
        yield "vertex_splits", max(
            abs(measured[v][w] - closed_splits[v][w]) for w in measured[v]
        )
        yield "split_sums", abs(sum(measured[v].values()) - angle_at[v])


def run_fuzz(count: int, seed, tol: float) -> dict:
    rng = random.Random(seed)
    maxima: dict[str, float] = {}
    counterexample = None
    for index in range(count):
        t = random_triangle(rng)
        for name, value in _fuzz_checks(t, tol):
            maxima[name] = max(maxima.get(name, 0.0), value)
            if value > tol and counterexample is None:
                counterexample = {
                    "index": index,
                    "check": name,
                    "residual": value,
                    "triangle": _triangle_json(t),
                }
        if counterexample is not None:
            break
    passed = counterexample is None
    return {
        "schema": SCHEMA,
        "command": "fuzz",
        "count": count,
        "seed": str(seed),
        "tol": tol,
        "checks": {name: {"max_residual": maxima[name], "passed": maxima[name] <= tol}
                   for name in sorted(maxima)},
        "counterexample": counterexample,
        "passed": passed,
    }


def cmd_fuzz(args) -> int:
    if args.count <= 0:
        raise InputError(f"--count must be positive, got {args.count}")
    seed = args.seed
    try:
        seed = int(seed)
    except ValueError:
        pass  # strings are valid seeds
    report = run_fuzz(args.count, seed, args.tol)
    _emit(report)
    return 0 if report["passed"] else 1


def _add_triangle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sides", help="side lengths a,b,c")
    parser.add_argument("--points", help="vertex coordinates x1,y1,x2,y2,x3,y3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuoco",
        description="Verify the law of cosines constructively and draw the figures behind it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run every identity check on one triangle")
    _add_triangle_args(p_verify)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    p_solve = sub.add_parser("solve", help="solve x+y=L, x+z=M, y+z=N")
    p_solve.add_argument("--L", type=float, required=True)
    p_solve.add_argument("--M", type=float, required=True)
    p_solve.add_argument("--N", type=float, required=True)
    p_solve.add_argument("--degrees", action="store_true",
                         help="treat L, M, N as degrees and convert to radians")
    p_solve.add_argument("--interpret", choices=("squares", "sides", "angles"),
                         help="cross-check the solution against a triangle")
    p_solve.add_argument("--tol", type=float, default=1e-9)
    _add_triangle_args(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_figure = sub.add_parser("figure", help="write an SVG drawing")
    _add_triangle_args(p_figure)
    p_figure.add_argument("--kind", choices=figures.KINDS, required=True)
    p_figure.add_argument("--out", required=True)
    p_figure.add_argument("--precision", type=int, default=6)
    p_figure.add_argument("--fill-palette", type=int, default=0, dest="fill_palette")
    p_figure.add_argument("--stroke-palette", type=int, default=0, dest="stroke_palette")
    p_figure.add_argument("--no-labels", action="store_true")
    p_figure.add_argument("--omit-degenerate", action="store_true")
    p_figure.set_defaults(func=cmd_figure)

    p_fuzz = sub.add_parser("fuzz", help="random triangles through every invariant check")
    p_fuzz.add_argument("--count", type=int, default=1000)
    p_fuzz.add_argument("--seed", default="0")
    p_fuzz.add_argument("--tol", type=float, default=1e-9)
    p_fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (InputError, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
