"""Command-line front end.

Subcommands: validate, construct, enumerate, count, rigidity, degree,
render, conjecture-sweep.  Exit codes: 0 success, 1 usage or input-format
error, 2 validation failure, 3 conjecture violation (a reportable finding).
PPT_MAX_N overrides the enumeration limit (validated; values above 10 are
treated as 10).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .construct import canonical_ppt, complete_to_ppt
from .enumeration import DEFAULT_LIMIT, check_conjecture, enumerate_ppt, enumerate_triangulations, min_max_degree
from .errors import FileFormatError, LimitExceeded, PseudoTriError
from .fileio import read_edges, read_points, write_edges
from .randgen import random_point_set
from .render import render_svg
from .rigidity import is_expansive, mechanism_motion, rank, rigidity_matrix
from .subdivision import GeomGraph, PseudoTriangulation, edge_key, validate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CONJECTURE = 3

HARD_MAX_N = 10


def _enum_limit() -> int:
    raw = os.environ.get("PPT_MAX_N")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise LimitExceeded(f"PPT_MAX_N must be an integer, got {raw!r}") from None
    if value < 3:
        raise LimitExceeded(f"PPT_MAX_N must be at least 3, got {value}")
    return min(value, HARD_MAX_N)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _frac_str(f) -> str:
    return f"{f.numerator}/{f.denominator}"


# --- subcommands ----------------------------------------------------------


def _cmd_validate(args) -> int:
    ps = read_points(args.points)
    g = GeomGraph(ps, read_edges(args.edges))
    report = validate(g)
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"pseudo-triangulation: {'yes' if report.is_pseudo_triangulation else 'no'}")
        print(f"pointed: {'yes' if report.is_pointed else 'no'}")
        print(f"faces: {report.face_count}")
        print(f"edges: {report.edge_count}")
        for v in report.violations:
            print(f"violation: {v}")
    return EXIT_OK if report.is_pseudo_triangulation else EXIT_INVALID


def _cmd_construct(args) -> int:
    ps = read_points(args.points)
    if args.complete is not None:
        t = complete_to_ppt(GeomGraph(ps, read_edges(args.complete)))
    else:
        t = canonical_ppt(ps)
    edge_text = write_edges(t.graph.edges)
    summary = {
        "n": t.n,
        "edges": len(t.graph.edges),
        "faces": len(t.faces),
        "is_pointed": t.is_pointed,
    }
    if args.out is not None:
        Path(args.out).write_text(edge_text, encoding="utf-8")
        _emit_json(summary)
    elif args.json:
        summary["edge_list"] = [list(e) for e in t.graph.edges]
        _emit_json(summary)
    else:
        sys.stdout.write(edge_text)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    ps = read_points(args.points)
    limit = _enum_limit()
    if args.kind == "ppt":
        keys = enumerate_ppt(ps, limit)
    else:
        keys = enumerate_triangulations(ps, limit)
    summary = {"kind": args.kind, "n": ps.n, "count": len(keys)}
    if args.out is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        names = []
        for idx, key in enumerate(keys):
            name = f"{args.kind}_{idx:05d}.edges"
            (outdir / name).write_text(write_edges(key), encoding="utf-8")
            names.append(name)
        index = dict(summary)
        index["files"] = names
        (outdir / "index.json").write_text(json.dumps(index, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        summary["out"] = str(outdir)
    if args.json or args.out is not None:
        _emit_json(summary)
    else:
        print(f"kind={args.kind} n={ps.n} count={len(keys)}")
    return EXIT_OK


def _cmd_count(args) -> int:
    ps = read_points(args.points)
    report = check_conjecture(ps, _enum_limit())
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(
            f"n={report.n} triangulations={report.num_triangulations} "
            f"pointed_pseudo_triangulations={report.num_ppt} "
            f"convex={'yes' if report.convex_position else 'no'} "
            f"conjecture={'holds' if report.conjecture_holds else 'VIOLATED'} "
            f"equality={'yes' if report.equality else 'no'}"
        )
    return EXIT_OK if report.conjecture_holds else EXIT_CONJECTURE


def _cmd_degree(args) -> int:
    ps = read_points(args.points)
    value = min_max_degree(ps, _enum_limit())
    if args.json:
        _emit_json({"n": ps.n, "min_max_degree": value})
    else:
        print(f"n={ps.n} min_max_degree={value}")
    return EXIT_OK


def _cmd_rigidity(args) -> int:
    ps = read_points(args.points)
    g = GeomGraph(ps, read_edges(args.edges))
    n = ps.n
    if args.remove_hull_edge is None:
        r = rank(rigidity_matrix(g))
        payload = {
            "n": n,
            "rank": r,
            "dof": 2 * n - 3 - r,
            "expansive": None,
            "motion": None,
            "violations": [],
        }
    else:
        cut = edge_key(*args.remove_hull_edge)
        t = PseudoTriangulation.from_graph(g, require_pointed=True)
        motion = mechanism_motion(t, cut)
        remaining = GeomGraph(ps, [e for e in g.edges if e != cut], _checked=True)
        expansion = is_expansive(remaining, motion)
        payload = {
            "n": n,
            "removed_edge": list(cut),
            "rank": rank(rigidity_matrix(remaining)),
            "dof": 1,  # mechanism_motion verified the pinned kernel is one-dimensional
            "expansive": expansion.expansive,
            "motion": [[_frac_str(vx), _frac_str(vy)] for vx, vy in motion.velocities],
            "violations": [[i, j, _frac_str(d)] for i, j, d in expansion.violations],
        }
    if args.json:
        _emit_json(payload)
    else:
        print(f"rank: {payload['rank']}")
        print(f"dof: {payload['dof']}")
        if payload["expansive"] is not None:
            print(f"expansive: {'yes' if payload['expansive'] else 'NO'}")
            for i, j, d in payload["violations"]:
                print(f"violation: pair ({i}, {j}) contracts at rate {d}")
    return EXIT_OK


def _cmd_render(args) -> int:
    ps = read_points(args.points)
    g = GeomGraph(ps, read_edges(args.edges))
    svg = render_svg(g, labels=args.labels, shade=args.shade)
    if args.out is not None:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    limit = _enum_limit()
    if args.n > limit:
        raise LimitExceeded(f"n = {args.n} exceeds the enumeration limit {limit}")
    rng_seed = args.seed
    reports = []
    for trial in range(args.trials):
        ps = random_point_set(args.n, rng_seed + trial, coord_max=args.coord_max)
        reports.append(check_conjecture(ps, limit))
    all_hold = all(r.conjecture_holds for r in reports)
    if args.json:
        _emit_json(
            {
                "n": args.n,
                "trials": args.trials,
                "seed": args.seed,
                "coord_max": args.coord_max,
                "all_hold": all_hold,
                "reports": [r.to_dict() for r in reports],
            }
        )
    else:
        for trial, r in enumerate(reports):
            print(
                f"trial {trial:03d}: triangulations={r.num_triangulations} "
                f"pointed={r.num_ppt} convex={'yes' if r.convex_position else 'no'} "
                f"holds={'yes' if r.conjecture_holds else 'NO'}"
            )
        print(f"all {args.trials} trials hold: {'yes' if all_hold else 'NO'}")
    return EXIT_OK if all_hold else EXIT_CONJECTURE


# --- parser ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pseudotri", description="Pointed pseudo-triangulation toolkit (exact arithmetic).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an edge set as a (pointed) pseudo-triangulation")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("construct", help="build a pointed pseudo-triangulation (optionally completing given edges)")
    p.add_argument("points")
    p.add_argument("--complete", metavar="EDGES", default=None, help="pointed non-crossing edge file to extend")
    p.add_argument("-o", "--out", default=None, help="write the edge file here and print a JSON summary")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="enumerate all pointed pseudo-triangulations or triangulations")
    p.add_argument("points")
    p.add_argument("--kind", choices=("ppt", "tri"), required=True)
    p.add_argument("--out", default=None, metavar="DIR", help="write one edge file per object plus index.json")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="count triangulations vs pointed pseudo-triangulations")
    p.add_argument("points")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("degree", help="minimum over pointed pseudo-triangulations of the max vertex degree")
    p.add_argument("points")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("rigidity", help="exact rigidity rank; with a cut hull edge, the 1-dof expansive motion")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("--remove-hull-edge", nargs=2, type=int, metavar=("I", "J"), default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rigidity)

    p = sub.add_parser("render", help="deterministic SVG drawing of a graph")
    p.add_argument("points")
    p.add_argument("edges")
    p.add_argument("-o", "--out", default=None)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--shade", action="store_true")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("conjecture-sweep", help="seeded batch of random point sets, counting both families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-max", type=int, default=1000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (FileFormatError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PseudoTriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
