"""Command-line front end.

Exit codes: 0 when the queried property holds (or the command simply
succeeded), 1 when it fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, fixtures, io
from .arith import DimensionError, GramSingular, parse_rational
from .config import LimitExceeded
from .ef import (EnumerationBoundExceeded, check_ef_iff, check_ef_map, check_ef_standard,
                 lemma9_size_report, synthesize_linear_map)
from .lp import LinearProgram, Sense, solve
from .maps import CoordinateSplit, image, project_coords
from .polyhedra import h_to_v, is_redundant, remove_redundancy, v_to_h
from .reduction import (ReductionInstance, bijectivity, graph_redundancy, two_step_solve,
                        verify_equivalence)

HOLDS, FAILS, ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _resolve(ref: str):
    """A file path, or the name of a bundled fixture (optionally ``fixture:NAME``)."""
    name = ref[len("fixture:"):] if ref.startswith("fixture:") else ref
    path = Path(ref)
    if not ref.startswith("fixture:") and path.exists():
        return io.load_json(path)
    if name in fixtures.NAMES:
        return fixtures.raw(name)
    raise UsageError(f"no such file or fixture: {ref}")


def _need_input(args) -> str:
    ref = getattr(args, "input", None)
    if not ref:
        raise UsageError("--input is required")
    return ref


def _polyhedron(ref):
    return io.polyhedron_from_obj(_resolve(ref), ref)


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad index list {text!r}") from None


def _rationals(text: str) -> tuple:
    try:
        return tuple(parse_rational(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_convert(args):
    p = _polyhedron(_need_input(args))
    if args.to == "v":
        return {"dim": p.dim, "vrep": io.vrep_json(h_to_v(p.hrep()) if p.has_h else p.vrep())}, HOLDS
    h = v_to_h(p.vrep()) if p.has_v else remove_redundancy(p.hrep())
    return {"dim": p.dim, "hrep": io.hrep_json(h)}, HOLDS


def cmd_project(args):
    p = _polyhedron(_need_input(args))
    split = CoordinateSplit(p.dim, _indices(args.keep))
    h = project_coords(p.hrep(), split)
    return {"dim": h.dim, "keep": list(split.keep), "hrep": io.hrep_json(h)}, HOLDS


def cmd_image(args):
    p = _polyhedron(_need_input(args))
    m = io.map_from_obj(_resolve(args.map), args.map)
    return io.polyhedron_json(image(p, m)), HOLDS


def cmd_check_ef(args):
    ext = _polyhedron(args.extension)
    target = _polyhedron(args.target)
    split = None
    if args.split_keep:
        split = CoordinateSplit(ext.dim, _indices(args.split_keep))
    elif args.all_definitions:
        # (w, x) layout: the target block is the trailing coordinates
        split = CoordinateSplit(ext.dim, tuple(range(ext.dim - target.dim, ext.dim)))
    amap = io.map_from_obj(_resolve(args.map), args.map) if args.map else None
    if split is None and amap is None:
        raise UsageError("give --split-keep, --map or --all-definitions")
    report, verdicts = {}, []
    if split is not None:
        std = check_ef_standard(ext.hrep(), target, split)
        iff = check_ef_iff(ext.hrep(), target, split)
        report["split_keep"] = list(split.keep)
        report["standard"] = io.verdict_json(std)
        report["iff"] = io.verdict_json(iff)
        verdicts += [std.holds, iff.holds]
    if amap is None and args.all_definitions:
        try:
            amap = synthesize_linear_map(ext, target)
        except EnumerationBoundExceeded as exc:
            report["map"] = {"holds": None, "detail": "EnumerationBoundExceeded", "message": str(exc)}
            verdicts.append(False)
        else:
            if amap is None:
                report["map"] = {"holds": False, "detail": "NoLinearMapFound", "witness": None}
                verdicts.append(False)
            else:
                report["map_synthesized"] = True
    if amap is not None:
        mv = check_ef_map(ext, target, amap, affine=args.affine)
        report["map"] = dict(io.verdict_json(mv), matrix=io.map_json(amap))
        verdicts.append(mv.holds)
    report["sizes"] = io.sizes_json(lemma9_size_report(ext.hrep(), target.hrep()))
    return report, HOLDS if all(verdicts) else FAILS


def cmd_lp(args):
    p = _polyhedron(_need_input(args))
    if (args.min is None) == (args.max is None):
        raise UsageError("give exactly one of --min / --max")
    objective = _rationals(args.min if args.min is not None else args.max)
    sense = Sense.MINIMIZE if args.min is not None else Sense.MAXIMIZE
    out = solve(LinearProgram(objective, p.hrep(), sense))
    return dict(io.outcome_json(out), sense=sense.value), HOLDS if out.optimal else FAILS


def cmd_reduce(args):
    inst = io.instance_from_obj(_resolve(_need_input(args)), args.input)
    if args.alpha is not None:
        inst = ReductionInstance(inst.Y, inst.graph, _rationals(args.alpha), inst.X)
    g = inst.graph
    report = {
        "alpha": io.vector_json(inst.alpha),
        "cbar": [io.vector_json(r) for r in g.cbar.data],
        "bbar": io.vector_json(g.bbar),
        "graph_warnings": [str(w) for w in g.warnings],
    }
    if inst.X is None:
        res = two_step_solve(inst.Y, g, inst.alpha)
        if hasattr(res, "status"):
            report["lp2"] = io.outcome_json(res)
            return report, FAILS
        report["lp2"] = {"status": "optimal", "value": io.rat(res.value),
                         "x": io.vector_json(res.x), "y": io.vector_json(res.y)}
        return report, HOLDS
    eq = verify_equivalence(inst)
    report.update(io.equivalence_json(eq))
    red_ok, red_why = graph_redundancy(inst.X, inst.Y, g)
    bij_ok, bij_why = bijectivity(inst.X, inst.Y, g)
    report["graph_redundant"] = red_ok
    report["graph_redundant_reason"] = red_why
    report["bijective"] = bij_ok
    report["bijective_reason"] = bij_why
    return report, HOLDS if eq.equivalent else FAILS


def cmd_redundancy(args):
    p = _polyhedron(_need_input(args))
    h = p.hrep()
    report = {}
    if args.index is not None:
        report["index"] = args.index
        report["redundant"] = is_redundant(h, args.index)
    r = remove_redundancy(h)
    report.update({"dim": h.dim, "inequalities": len(r.inequalities), "equalities": len(r.equalities),
                   "size": r.size(), "hrep": io.hrep_json(r)})
    return report, HOLDS


def cmd_dimension(args):
    p = _polyhedron(_need_input(args))
    v = p.vrep()
    return {"dimension": p.dimension(), "empty": v.is_empty, "bounded": v.is_bounded}, HOLDS


def cmd_fixtures(args):
    if args.action == "list":
        return {"fixtures": list(fixtures.NAMES)}, HOLDS
    names = fixtures.NAMES if args.all else [args.name]
    if not args.all and not args.name:
        raise UsageError("fixtures export needs a NAME or --all")
    if args.dir:
        out = Path(args.dir)
        out.mkdir(parents=True, exist_ok=True)
        for n in names:
            (out / f"{n}.json").write_text(fixtures.text(n))
        return {"exported": [str(out / f"{n}.json") for n in names]}, HOLDS
    if len(names) != 1:
        raise UsageError("--all needs --dir")
    try:
        return fixtures.raw(names[0]), HOLDS
    except KeyError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="exactef", description="Exact polyhedral toolkit")
    parser.add_argument("-i", "--input", default=None, help="input file or fixture name")
    parser.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress the version banner")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="H <-> V conversion")
    p.add_argument("--to", choices=("h", "v"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("project", parents=[common], help="Fourier-Motzkin projection")
    p.add_argument("--keep", required=True, help="comma-separated kept coordinates (0-based)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("image", parents=[common], help="image under an affine map")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("check-ef", parents=[common], help="extended-formulation verdicts")
    p.add_argument("--extension", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--split-keep")
    p.add_argument("--map")
    p.add_argument("--affine", action="store_true", help="allow a nonzero map offset")
    p.add_argument("--all-definitions", action="store_true")
    p.set_defaults(func=cmd_check_ef)

    p = sub.add_parser("lp", parents=[common], help="exact linear program")
    p.add_argument("--min")
    p.add_argument("--max")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("reduce", parents=[common], help="LP0/LP1/LP2 equivalence")
    p.add_argument("--alpha")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("redundancy", parents=[common], help="irredundant H-representation")
    p.add_argument("--index", type=int)
    p.set_defaults(func=cmd_redundancy)

    p = sub.add_parser("dimension", parents=[common], help="affine dimension")
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("fixtures", parents=[common], help="bundled example data")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--dir")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else 0
    if not args.quiet:
        print(f"exactef {__version__}", file=sys.stderr)
    try:
        payload, code = args.func(args)
    except (io.ParseError, UsageError, DimensionError, GramSingular, LimitExceeded,
            EnumerationBoundExceeded, IndexError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    text = io.dumps(payload)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
