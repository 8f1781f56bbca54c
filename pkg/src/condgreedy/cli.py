"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 scale-guard refusal,
3 when a conjecture candidate failure is found.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import product
from typing import List, Optional

from .coloring import (ColoringError, PartialColoring, check_admissible, conditional_greedy,
                       dump_coloring, load_coloring, trace_records)
from .density import ScaleGuardError, density
from .experiment import (parse_k, resolve_k, run_experiment, write_failure_bundles,
                         write_traces)
from .generators import NAMED, InstanceSpec, generate, random_specs
from .multigraph import GraphFormatError, connected_components, read, serialize, stats, subgraph
from .oracles import chromatic_index, validate_coloring
from .ordering import reorder

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_FAILURE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _k_arg(text):
    try:
        return parse_k(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# -- subcommands -------------------------------------------------------------------

def cmd_gen(args) -> int:
    params = tuple(args.params)
    if args.family == "named":
        if not args.name:
            raise UsageError("--family named needs --name")
        params = (args.name,)
    elif args.family == "random":
        if len(params) not in (3, 4):
            raise UsageError("random needs --params N PROB MAX_MULT [MAX_EDGES]")
        params = (int(params[0]), float(params[1]), int(params[2])) + tuple(int(x) for x in params[3:])
    else:
        params = tuple(int(x) for x in params)
    g = generate(InstanceSpec(args.family, params, args.seed))
    _emit(serialize(g), args.out)
    return EXIT_OK


def cmd_density(args) -> int:
    g = read(args.instance)
    d = density(g, prune=not args.no_prune, force=args.force)
    _emit(f"omega {d.omega}\nwitness {' '.join(map(str, d.witness))}\n"
          f"witness_edges {d.witness_edges}\nfractional_index {d.fractional_index}\n", args.out)
    return EXIT_OK


def cmd_chi(args) -> int:
    g = read(args.instance)
    res = chromatic_index(g, force=args.force)
    st = stats(g)
    text = (f"chi_prime {res.chi_prime}\nmax_degree {st.max_degree}\n"
            f"max_multiplicity {st.max_multiplicity}\n")
    if args.coloring:
        with open(args.coloring, "w") as fh:
            fh.write(dump_coloring(res.optimal_coloring))
    _emit(text, args.out)
    return EXIT_OK


def cmd_reorder(args) -> int:
    g = read(args.instance)
    lines = []
    for comp in connected_components(g):
        sub, origin = subgraph(g, comp)
        if sub.m == 0:
            continue
        order = reorder(sub, seed=args.seed)
        lines.append("vertices " + " ".join(str(comp[x]) for x in order.vertex_order))
        lines.append("edges " + " ".join(str(origin[e]) for e in order.edge_order))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_color(args) -> int:
    g = read(args.instance)
    k = resolve_k(args.k, density(g, force=args.force))
    assignment = [None] * g.m
    records = []
    status = []
    for ci, comp in enumerate(connected_components(g)):
        sub, origin = subgraph(g, comp)
        if sub.m == 0:
            continue
        trace = conditional_greedy(sub, k, reorder(sub, seed=args.seed), strict=args.strict_free_vertices)
        for rec in trace_records(sub, trace):
            rec.update(component=ci, edge=origin[rec["edge"]], u=comp[rec["u"]], v=comp[rec["v"]])
            if rec.get("violation"):
                rec["violation"]["subset"] = [comp[x] for x in rec["violation"]["subset"]]
            records.append(rec)
        for e, c in enumerate(trace.final.assignment):
            assignment[origin[e]] = c
        status.append("complete" if trace.complete else f"halted at step {trace.halt_step}")
    phi = PartialColoring(k, tuple(assignment))
    if args.trace:
        with open(args.trace, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    _emit(dump_coloring(phi), args.out)
    print(f"k={k} colored={phi.num_colored}/{g.m} " + "; ".join(status), file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    g = read(args.instance)
    k = resolve_k(args.k, density(g, force=args.force))
    with open(args.coloring) as fh:
        phi = load_coloring(fh.read(), g, k)
    lines = [f"k {k}", f"colored {phi.num_colored}/{g.m}"]
    if not validate_coloring(g, phi):
        lines.append("proper no")
    else:
        lines.append("proper yes")
        bad = check_admissible(g, phi, strict=args.strict_free_vertices)
        if bad is None:
            lines.append("admissible yes")
        else:
            lines.append("admissible no")
            lines.append(f"violation {' '.join(map(str, bad.subset))} cover {bad.cover} "
                         f"uncolored_inside {bad.uncolored_inside}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def search_specs(args) -> List[InstanceSpec]:
    specs = [InstanceSpec("file", (path,)) for path in args.instances]
    lo, hi = args.min_mult, args.max_mult
    if lo < 1 or hi < lo:
        raise UsageError("need 1 <= --min-mult <= --max-mult")
    for family in args.family or []:
        if family == "fat_triangle":
            batch = [InstanceSpec(family, pqr) for pqr in product(range(lo, hi + 1), repeat=3)]
        elif family == "thick_ring":
            batch = [InstanceSpec(family, (r, t)) for r in args.ring_lengths for t in range(lo, hi + 1)]
        elif family == "named":
            batch = [InstanceSpec(family, (name,)) for name in (args.names or sorted(NAMED))]
        elif family == "random":
            count = args.count if args.count is not None else 50
            batch = random_specs(args.seed, count, args.min_vertices, args.max_vertices,
                                 args.prob, hi, args.max_edges)
        else:
            raise UsageError(f"unknown family {family!r}")
        if args.count is not None:
            batch = batch[:args.count]
        specs.extend(batch)
    if not specs:
        raise UsageError("search needs instance files or at least one --family")
    return specs


def cmd_search(args) -> int:
    specs = search_specs(args)
    report = run_experiment(specs, args.k, strict=args.strict_free_vertices,
                            verify=not args.no_verify, force=args.force)
    _emit(report.to_csv(timing=args.timing), args.out)
    if args.traces:
        write_traces(report, args.traces)
    print(report.summary(), file=sys.stderr)
    if report.failures:
        where = args.artifacts or ((args.out + ".artifacts") if args.out else "artifacts")
        for path in write_failure_bundles(report, where):
            print(f"failure bundle: {path}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (gen/search); for reorder/color, randomizes tie-breaks")
    common.add_argument("--k", type=_k_arg, default="omega", help="omega | fractional | <int>")
    common.add_argument("--force", action="store_true", help="lift desk-scale guards")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--strict-free-vertices", action="store_true",
                        help="count a vertex i-free only via an i-free edge inside the subset")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="condgreedy", description="Conditional greedy multigraph edge-coloring lab")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a generated instance")
    g.add_argument("--family", required=True, choices=["fat_triangle", "thick_ring", "random", "named"])
    g.add_argument("--params", nargs="*", default=[], help="family parameters")
    g.add_argument("--name", help="graph name for --family named")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("density", parents=[common], help="multigraph density and witness")
    d.add_argument("instance")
    d.add_argument("--no-prune", action="store_true", help="score even subsets as well")
    d.set_defaults(func=cmd_density)

    c = sub.add_parser("chi", parents=[common], help="exact chromatic index")
    c.add_argument("instance")
    c.add_argument("--coloring", help="write an optimal coloring here")
    c.set_defaults(func=cmd_chi)

    r = sub.add_parser("reorder", parents=[common], help="print the Reorder permutations")
    r.add_argument("instance")
    r.set_defaults(func=cmd_reorder)

    col = sub.add_parser("color", parents=[common], help="run Conditional_Greedy")
    col.add_argument("instance")
    col.add_argument("--trace", help="write the step trace (JSON lines) here")
    col.set_defaults(func=cmd_color)

    ch = sub.add_parser("check", parents=[common], help="check properness and admissibility")
    ch.add_argument("instance")
    ch.add_argument("coloring")
    ch.set_defaults(func=cmd_check)

    s = sub.add_parser("search", parents=[common], help="conjecture sweep over instance families")
    s.add_argument("instances", nargs="*", help="instance files")
    s.add_argument("--family", action="append",
                   choices=["fat_triangle", "thick_ring", "random", "named"])
    s.add_argument("--min-mult", type=int, default=2)
    s.add_argument("--max-mult", type=int, default=4)
    s.add_argument("--ring-lengths", type=_int_list, default=[3, 5, 7])
    s.add_argument("--names", nargs="*", help="graph names for --family named")
    s.add_argument("--count", type=int, default=None, help="instances per family")
    s.add_argument("--min-vertices", type=int, default=3)
    s.add_argument("--max-vertices", type=int, default=7)
    s.add_argument("--prob", type=float, default=0.5)
    s.add_argument("--max-edges", type=int, default=36)
    s.add_argument("--traces", help="directory for per-instance traces")
    s.add_argument("--artifacts", help="directory for failure bundles")
    s.add_argument("--timing", action="store_true", help="add wall_time column to the report")
    s.add_argument("--no-verify", action="store_true", help="skip the unpruned prefix audit")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command in ("gen", "search") and args.seed is None:
        args.seed = 0
    try:
        return args.func(args)
    except ScaleGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, GraphFormatError, ColoringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
