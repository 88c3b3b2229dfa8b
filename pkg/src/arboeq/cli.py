"""arboeq command line: solve | verify | oracle | discharge | gen."""

import argparse
import sys
from pathlib import Path

from . import discharging as dis
from .errors import ArboeqError, ParseError, PreconditionError, UnsupportedClass
from .generators import gen_2degenerate, gen_clawfree_3deg, gen_lists, gen_planar_triangulation
from .graph import Graph, dump_graph, load_graph
from .oracle import oracle_equitable_point_arboricity, oracle_feasible, oracle_list_sweep
from .solvers import detect_class, min_k, solve_auto
from .verify import (
    dump_coloring,
    dump_lists,
    load_coloring,
    load_lists,
    verify_equitable_arboreal,
)

CLASSES = ["complete", "2deg", "clawfree3", "planar", "auto"]


class UsageError(ArboeqError):
    pass


def build_parser():
    parser = argparse.ArgumentParser(prog="arboeq", description=__doc__)
    parser.add_argument("command", choices=["solve", "verify", "oracle", "discharge", "gen"])
    parser.add_argument("--graph")
    parser.add_argument("--rotation")
    parser.add_argument("--lists")
    parser.add_argument("--coloring")
    parser.add_argument("--k", type=int)
    parser.add_argument("--class", dest="cls", choices=CLASSES, default="auto")
    parser.add_argument("--random-lists", action="store_true")
    parser.add_argument("--universe", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--force", action="store_true")
    parser.add_argument("--out")
    parser.add_argument("--n", type=int)
    parser.add_argument("--p", type=float, default=0.0)
    parser.add_argument(
        "--mode",
        choices=["feasible", "arboricity", "sweep"],
        help="oracle mode (default: feasible if lists are available, else arboricity)",
    )
    parser.add_argument("--k-max", type=int, help="largest k tried in oracle arboricity mode")
    parser.add_argument("--named", choices=sorted(dis.NAMED), help="built-in plane graph for discharge")
    return parser


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _graph_and_rotation(args):
    """Load the graph from --graph, or generate one from --class/--n/--seed."""
    rotation = None
    if args.rotation:
        rotation = dis.load_rotation(_read(args.rotation))
    if args.graph:
        g = load_graph(_read(args.graph))
        if rotation is not None:
            _check_rotation_matches(g, rotation)
        return g, rotation
    if args.n is None:
        raise UsageError("give --graph PATH, or --class and --n to generate an instance")
    cls = args.cls
    if cls == "complete":
        return Graph.complete(args.n), None
    if cls == "2deg":
        return gen_2degenerate(args.n, args.seed), None
    if cls == "clawfree3":
        return gen_clawfree_3deg(args.n, args.seed), None
    if cls == "planar":
        return gen_planar_triangulation(args.n, args.seed, args.p)
    raise UsageError("generating a graph needs an explicit --class")


def _check_rotation_matches(g, rotation):
    for v in g:
        if set(rotation.get(v, ())) != set(g.neighbors(v)):
            raise ParseError(f"rotation at vertex {v} does not match the edge list")
    if set(rotation) - set(g.vertices):
        raise ParseError("rotation mentions vertices outside the graph")


def _resolve_k(args, g, cls_name):
    if args.k is None and args.lists:
        return load_lists(_read(args.lists)).k
    if args.k is not None:
        if args.k < 1:
            raise UsageError("--k must be positive")
        return args.k
    if cls_name not in ("complete", "2deg", "clawfree3", "planar"):
        raise UsageError("cannot pick a default k for this graph; pass --k")
    return min_k(cls_name, g)


def _lists(args, g, k):
    if args.lists:
        lists = load_lists(_read(args.lists))
        if lists.k != k:
            raise PreconditionError(f"lists have size {lists.k} but k={k}")
        return lists
    if args.random_lists:
        universe = args.universe if args.universe is not None else 2 * k
        return gen_lists(g, k, universe, args.seed)
    raise UsageError("give --lists PATH or --random-lists")


def _print_verdict(verdict):
    if verdict.ok:
        print("VALID")
    else:
        print("INVALID")
        for violation in verdict.violations:
            print(f"  {violation}")


def cmd_solve(args):
    g, rotation = _graph_and_rotation(args)
    planar = args.cls == "planar" or rotation is not None
    cls_name = detect_class(g, planar).name if args.cls == "auto" else args.cls
    k = _resolve_k(args, g, cls_name)
    lists = _lists(args, g, k)
    try:
        used, coloring = solve_auto(g, lists, k, planar=planar, force=args.force, cls=cls_name)
    except (PreconditionError, UnsupportedClass):
        raise
    except (ArboeqError, AssertionError) as exc:
        if not args.force:
            raise
        print(f"class {cls_name} k {k}")
        print(f"FAILED: {exc}")
        return 1
    verdict = verify_equitable_arboreal(g, lists, coloring)
    print(f"class {used} k {k} n {g.n} m {g.m}")
    if not verdict.ok and not args.force:
        # the pipeline never writes a coloring it cannot certify
        _print_verdict(verdict)
        return 1
    _write(args.out, dump_coloring(coloring))
    _print_verdict(verdict)
    return 0 if verdict.ok else 1


def cmd_verify(args):
    if not (args.graph and args.lists and args.coloring):
        raise UsageError("verify needs --graph, --lists and --coloring")
    g = load_graph(_read(args.graph))
    lists = load_lists(_read(args.lists))
    coloring = load_coloring(_read(args.coloring))
    if not lists.covers(g):
        raise PreconditionError("lists do not cover every vertex")
    verdict = verify_equitable_arboreal(g, lists, coloring)
    _print_verdict(verdict)
    return 0 if verdict.ok else 1


def cmd_oracle(args):
    g, _ = _graph_and_rotation(args)
    mode = args.mode or ("feasible" if (args.lists or args.random_lists) else "arboricity")
    if mode == "arboricity":
        k_max = args.k_max or g.n or 1
        k = oracle_equitable_point_arboricity(g, k_max)
        print(f"equitable point arboricity: {k if k is not None else f'> {k_max}'}")
        return 0 if k is not None else 1
    cls_name = detect_class(g, args.cls == "planar").name if args.cls == "auto" else args.cls
    k = _resolve_k(args, g, cls_name)
    if mode == "feasible":
        lists = _lists(args, g, k)
        result = oracle_feasible(g, lists, k)
        print(f"{'FEASIBLE' if result.feasible else 'INFEASIBLE'} k {k} nodes {result.nodes_explored}")
        if result.feasible:
            _write(args.out, dump_coloring(result.witness))
        return 0 if result.feasible else 1
    universe = args.universe if args.universe is not None else k + 2
    bad = oracle_list_sweep(g, k, universe)
    if bad is None:
        print(f"no counterexample within universe {universe} (k {k})")
        return 0
    print(f"counterexample within universe {universe} (k {k}):")
    sys.stdout.write(dump_lists(bad))
    return 1


def cmd_discharge(args):
    if args.named:
        pg = dis.NAMED[args.named]()
    else:
        if not (args.graph and args.rotation):
            raise UsageError("discharge needs --graph and --rotation (or --named)")
        g = load_graph(_read(args.graph))
        rotation = dis.load_rotation(_read(args.rotation))
        _check_rotation_matches(g, rotation)
        pg = dis.trace_faces(g, rotation)
    report = dis.discharging_report(pg)
    _write(args.out, report.to_text())
    return 0


def cmd_gen(args):
    if args.cls == "auto" or args.n is None:
        raise UsageError("gen needs --class and --n")
    g, rotation = _graph_and_rotation(args)
    base = args.out
    if base is None:
        sys.stdout.write(dump_graph(g))
        return 0
    Path(f"{base}.graph").write_text(dump_graph(g))
    written = [f"{base}.graph"]
    if rotation is not None:
        Path(f"{base}.rot").write_text(dis.dump_rotation(rotation))
        written.append(f"{base}.rot")
    if args.k is not None or args.random_lists:
        k = _resolve_k(args, g, args.cls)
        universe = args.universe if args.universe is not None else 2 * k
        Path(f"{base}.lists").write_text(dump_lists(gen_lists(g, k, universe, args.seed)))
        written.append(f"{base}.lists")
    print("wrote " + " ".join(written))
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "discharge": cmd_discharge,
    "gen": cmd_gen,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, PreconditionError, UnsupportedClass, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArboeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
