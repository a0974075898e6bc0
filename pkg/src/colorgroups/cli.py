"""Command-line entry point.

Exit codes: 0 success, 1 validation/check failure, 2 parse or usage error.
Structured diagnostics go to stderr; JSON output is deterministic
(sorted keys, no timestamps) so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import backend
from .analysis import analyze
from .graphs import (InvalidColoring, ParseError, cayley_coloring,
                     parse_graph)
from .indposet import (hasse_coloring, independence_poset, parse_dag,
                       verify_structure_theorem)
from .perm import parse_cycles
from .survey import (check_table, distinct_orders, load_reference_rows,
                     rows_to_csv, run_manifest, survey)
from .toggles import parse_family, poset_as_coloring, poset_dot, toggle_group, toggle_poset

GRAPH_FORMAT = ("graph file: first line 'n k', then one 'u v c' line per "
                "edge (vertices 0-based, colors 1..k)")
FAMILY_FORMAT = ("family file: first line the ground-set size, then one "
                 "subset per line as space-separated elements ('-' for the "
                 "empty set)")
DAG_FORMAT = "dag file: first line the vertex count m, then 'a b' lines for a->b"


@dataclass
class RunConfig:
    """Resolved run options shared by the subcommands."""

    output_json: bool = False
    out_dir: str | None = None
    seed: int = 0
    workers: int = 1
    group_element_cap: int = 10**6
    family_cap: int = 1 << 20
    top_cap: int = 1 << 16

    @staticmethod
    def from_args(args):
        cfg = RunConfig()
        cfg.output_json = getattr(args, "json", False)
        cfg.out_dir = getattr(args, "out", None)
        cfg.seed = getattr(args, "seed", 0)
        cfg.workers = getattr(args, "workers", 1)
        env = os.environ.get("COLORGROUPS_MAX_GROUP_ELEMENTS")
        if env:
            cfg.group_element_cap = int(env)
        env = os.environ.get("COLORGROUPS_MAX_FAMILY")
        if env:
            cfg.family_cap = int(env)
        env = os.environ.get("COLORGROUPS_MAX_TOPS")
        if env:
            cfg.top_cap = int(env)
        return cfg


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc


def _json_out(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_validate(args):
    graph = parse_graph(_read(args.graph), canonicalize=False)
    violations = graph.validate()
    if violations:
        for v in violations:
            print(f"INVALID: {v}")
        return 1
    print(f"OK: {graph.n} vertices, {graph.k} colors, "
          f"{len(graph.edges)} edges")
    return 0


def cmd_analyze(args):
    graph = parse_graph(_read(args.graph))
    report = analyze(graph)
    if args.json:
        _json_out(report.to_json_dict())
        return 0
    print(f"degree:               {report.degree}")
    print(f"colors:               {report.color_count}")
    print(f"order:                {report.order}")
    print(f"transitive:           {'yes' if report.transitive else 'no'}")
    print(f"primitive:            {'yes' if report.primitive else 'no'}")
    print(f"aut order:            {report.aut_order}")
    print(f"contains alternating: {'yes' if report.contains_alternating else 'no'}")
    if report.block_system is not None:
        print(f"block system:         {report.block_system.as_lists()}")
    if report.orbits is not None:
        print(f"orbits:               {[list(o) for o in report.orbits]}")
    if report.size_bound is not None:
        num, den = report.size_bound
        print(f"size bound:           {num}/{den} "
              f"({'holds' if report.size_bound_holds else 'FAILS'})")
    if report.symmetric_edges:
        pretty = ", ".join(f"{e}<-S{sorted(s)}" for (e, s)
                           in report.symmetric_edges)
        print(f"symmetric edges:      {pretty}")
    if report.long_cycle_type is not None:
        print(f"long-cycle type:      {report.long_cycle_type}")
    if report.toggle_clean is not None:
        print(f"toggle words clean:   {'yes' if report.toggle_clean else 'no'}")
    return 0


def cmd_cayley(args):
    from .perm import Perm
    cfg = RunConfig.from_args(args)
    text = _read(args.generators)
    raw_gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            raw_gens.append(parse_cycles(line, args.degree))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if not raw_gens:
        raise ParseError("no generators in file", 1)
    degree = max(g.degree for g in raw_gens)
    gens = [Perm(tuple(g.images) + tuple(range(g.degree, degree)))
            for g in raw_gens]
    graph = cayley_coloring(gens, cap=cfg.group_element_cap)
    sys.stdout.write(graph.to_text())
    return 0


def cmd_toggle(args):
    cfg = RunConfig.from_args(args)
    family = parse_family(_read(args.family))
    if len(family) > cfg.family_cap:
        raise ValueError(f"family size {len(family)} exceeds cap "
                         f"{cfg.family_cap}")
    tposet = toggle_poset(family)
    if args.poset_dot:
        sys.stdout.write(poset_dot(tposet))
        return 0
    group = toggle_group(family)
    coloring = poset_as_coloring(tposet)
    payload = {
        "ground_size": family.ground_size,
        "family_size": len(family),
        "order": group.order(),
        "transitive": group.is_transitive(),
        "primitive": group.is_primitive(),
        "poset_edges": len(tposet.covers),
        "poset_coloring": coloring.to_json_dict(),
    }
    if args.json:
        _json_out(payload)
    else:
        for key in ("ground_size", "family_size", "order", "transitive",
                    "primitive", "poset_edges"):
            print(f"{key}: {payload[key]}")
    return 0


def cmd_indposet(args):
    cfg = RunConfig.from_args(args)
    dag = parse_dag(_read(args.dag))
    poset = independence_poset(dag, cap=cfg.top_cap)
    if args.hasse:
        sys.stdout.write(hasse_coloring(poset).to_text())
        return 0
    payload = {
        "vertices": dag.m,
        "tops": len(poset.tops),
        "covers": len(poset.covers),
        "elements": [[sorted(t.d), sorted(t.u)] for t in poset.tops],
    }
    if args.verify:
        payload["structure"] = verify_structure_theorem(dag)
    if args.json:
        _json_out(payload)
    else:
        print(f"vertices: {payload['vertices']}")
        print(f"tops: {payload['tops']}")
        print(f"covers: {payload['covers']}")
        if args.verify:
            print(f"structure: {payload['structure']}")
    return 0


def cmd_survey(args):
    cfg = RunConfig.from_args(args)
    t0 = time.time()
    rows = survey(args.degree, skip_symmetric_edge=args.skip_symmetric_edge,
                  workers=cfg.workers)
    elapsed = time.time() - t0
    manifest = run_manifest(args.degree, rows, cfg.seed,
                            args.skip_symmetric_edge, cfg.workers,
                            backend.active_backend_name())
    print(f"survey degree {args.degree}: {len(rows)} rows in {elapsed:.1f}s",
          file=sys.stderr)
    if cfg.out_dir:
        os.makedirs(cfg.out_dir, exist_ok=True)
        csv_path = os.path.join(cfg.out_dir, f"survey_deg{args.degree}.csv")
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(rows_to_csv(rows))
        manifest_path = os.path.join(cfg.out_dir,
                                     f"survey_deg{args.degree}.json")
        with open(manifest_path, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {csv_path} and {manifest_path}", file=sys.stderr)
    else:
        sys.stdout.write(rows_to_csv(rows))
    return 0


def cmd_check_table(args):
    results = check_table()
    failed = [r for r in results if not r[3]]
    if args.json:
        _json_out({"results": [
            {"name": name, "order": order, "primitive": prim, "passed": ok}
            for (name, order, prim, ok) in results]})
    else:
        for (name, order, prim, ok) in results:
            print(f"{name}: order={order} primitive={'yes' if prim else 'no'} "
                  f"{'PASS' if ok else 'FAIL'}")
    return 1 if failed else 0


def cmd_bench(args):
    from .bench import run_benchmark
    run_benchmark(repeat=args.repeat, degree=args.degree)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colorgroups",
        description="Coloring groups of proper edge colorings: analysis, "
                    "toggle posets, independence posets, and tree surveys.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help=f"check a coloring; {GRAPH_FORMAT}")
    p.add_argument("graph", help=GRAPH_FORMAT)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help=f"full structural report; {GRAPH_FORMAT}")
    p.add_argument("graph", help=GRAPH_FORMAT)
    p.add_argument("--json", action="store_true", help="emit the JSON record")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "cayley",
        help="Cayley-graph coloring from involution generators",
        description="Emit the edge-colored Cayley graph of the group "
                    "generated by the given involutions; the input file has "
                    "one permutation per line in cycle notation like "
                    "(0 1)(2 3).")
    p.add_argument("generators",
                   help="file with one permutation per line, cycle notation")
    p.add_argument("--degree", type=int, default=None,
                   help="degree of the permutations (default: inferred)")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("toggle", help=f"toggle group and poset; {FAMILY_FORMAT}")
    p.add_argument("family", help=FAMILY_FORMAT)
    p.add_argument("--poset-dot", action="store_true",
                   help="emit the labeled Hasse diagram as Graphviz text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_toggle)

    p = sub.add_parser("indposet", help=f"independence poset; {DAG_FORMAT}")
    p.add_argument("dag", help=DAG_FORMAT)
    p.add_argument("--hasse", action="store_true",
                   help="emit the labeled Hasse diagram in the graph format")
    p.add_argument("--verify", action="store_true",
                   help="check the coloring-group structure statement")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_indposet)

    p = sub.add_parser("survey",
                       help="census of coloring groups on trees of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--skip-symmetric-edge", action="store_true",
                   help="record symmetric-edge colorings on the fast path")
    p.add_argument("--out", default=None, help="directory for CSV/JSON output")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0,
                   help="recorded in the manifest for reproducibility")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("check-table",
                       help="recompute the bundled known coloring-group rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_table)

    p = sub.add_parser("bench",
                       help="compare the numba and numpy kernel backends")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--degree", type=int, default=9)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidColoring as exc:
        print(f"invalid coloring: {exc}", file=sys.stderr)
        return 1
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
