"""Command line interface.

    reptile-lab run <scenario> [--tol --coeff-bound --node-budget --out --format]
    reptile-lab tile <T0> <target> [--n-max --node-budget --out]
    reptile-lab diagram <fixture.json> {auts|orbits|gram} [--type a,b,c]

Angle triples on the command line are comma-separated angle literals in the
"p/q pi" syntax, e.g. "1/4 pi,1/3 pi,1/2 pi".  Exit codes: 0 all checkpoints
passed, 1 some failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .angles import parse_angle
from .coxeter import CoxeterDiagram, orbits, triangle_type_of
from .gram import fiedler_check, gram_from_diagram
from .realize import TileSpec, search_tiling, verify_tiling
from .scenarios import Config, emit_figures, run_scenario, SCENARIOS


def _parse_triple(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError("expected three comma-separated angles")
    out = []
    for p in parts:
        form = parse_angle(p)
        q = form.pi_fraction()
        if q is None:
            raise ValueError(f"{p!r} is not a rational multiple of pi")
        out.append(q)
    return tuple(out)


def _cmd_run(args) -> int:
    cfg = Config(tol=args.tol, coeff_bound=args.coeff_bound,
                 node_budget=args.node_budget, out=args.out, fmt=args.format)
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    ok = True
    for name in names:
        kwargs = {}
        if name == "hill" and args.d is not None:
            if args.m is None:
                raise ValueError("--d needs --m as well")
            kwargs = {"d": args.d, "m": args.m}
        report = run_scenario(name, cfg, **kwargs)
        ok = ok and report.passed
        if args.format == "json":
            print(report.json_lines())
        else:
            print(report.summary())
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            path = os.path.join(args.out, f"report-{name}.jsonl")
            with open(path, "w") as f:
                f.write(report.json_lines() + "\n")
            emit_figures(report, args.out)
    return 0 if ok else 1


def _cmd_tile(args) -> int:
    tile = TileSpec.from_pi_fractions(*_parse_triple(args.tile))
    target = _parse_triple(args.target)
    res = search_tiling(target, tile, n_max=args.n_max,
                        node_budget=args.node_budget)
    out = {"status": res.status, "nodes": res.nodes, "reason": res.reason}
    if res.tiling is not None:
        out["tiles"] = len(res.tiling.tiles)
        out["verified"] = bool(verify_tiling(res.tiling, tile))
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            stem = os.path.join(args.out, "tiling")
            with open(stem + ".json", "w") as f:
                json.dump(res.tiling.to_json(), f, indent=1, sort_keys=True)
            res.tiling.render_svg(stem + ".svg")
            out["files"] = [stem + ".json", stem + ".svg"]
    print(json.dumps(out, sort_keys=True))
    return 0 if res.status == "found" else 1


def _cmd_diagram(args) -> int:
    with open(args.fixture) as f:
        data = json.load(f)
    if "edges" not in data:
        if args.id and args.id in data:
            data = data[args.id]
        else:
            raise ValueError("catalog file: pick one entry with --id "
                             f"(available: {', '.join(sorted(data))})")
    diagram = CoxeterDiagram.from_fixture(data)
    if args.action == "auts":
        auts = diagram.automorphisms()
        print(json.dumps({"order": len(auts),
                          "generators": [list(p) for p in auts]}, sort_keys=True))
    elif args.action == "orbits":
        if args.type:
            ttype = triangle_type_of([parse_angle(p.strip())
                                      for p in args.type.split(",")])
            parts = orbits(diagram, "triangles", ttype)
        else:
            parts = orbits(diagram, "triangles")
        print(json.dumps({"orbit_count": len(parts),
                          "orbits": [sorted(sorted(t) for t in o) for o in parts]},
                         sort_keys=True))
    else:  # gram
        gram = gram_from_diagram(diagram)
        report = fiedler_check(gram)
        det = report.determinant
        print(json.dumps({"ring": gram.ring, "determinant": repr(det),
                          "determinant_float": float(det)
                          if not hasattr(det, "coeffs") else None,
                          "singular": report.is_singular,
                          "verdict": report.verdict}, sort_keys=True))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="reptile-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a verification scenario")
    p_run.add_argument("scenario", choices=list(SCENARIOS) + ["all"])
    p_run.add_argument("--tol", type=float, default=1e-5)
    p_run.add_argument("--coeff-bound", type=int, default=20)
    p_run.add_argument("--node-budget", type=int, default=10 ** 6)
    p_run.add_argument("--out", default=None)
    p_run.add_argument("--format", choices=("json", "text"), default="text")
    p_run.add_argument("--d", type=int, default=None,
                       help="hill scenario only: restrict to one dimension")
    p_run.add_argument("--m", type=int, default=None,
                       help="hill scenario only: restrict to one scale")

    p_tile = sub.add_parser("tile", help="search a tiling of a target triangle")
    p_tile.add_argument("tile", help='base tile angles, e.g. "1/4 pi,1/3 pi,1/2 pi"')
    p_tile.add_argument("target", help="target triangle angles")
    p_tile.add_argument("--n-max", type=int, default=None)
    p_tile.add_argument("--node-budget", type=int, default=10 ** 6)
    p_tile.add_argument("--out", default=None)

    p_diag = sub.add_parser("diagram", help="inspect a diagram fixture file")
    p_diag.add_argument("fixture")
    p_diag.add_argument("action", choices=("auts", "orbits", "gram"))
    p_diag.add_argument("--id", default=None,
                        help="entry name when the file is a catalog")
    p_diag.add_argument("--type", default=None,
                        help="triangle type filter for orbits, e.g. "
                             '"alpha,beta,gamma"')

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "tile":
            return _cmd_tile(args)
        return _cmd_diagram(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
