"""Command line surface.

Exit codes: 0 success, 1 semantic failure (violations, count mismatch, an
induced four-path), 2 usage or parse errors, 3 method/instance mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import fixtures, generators
from .compat import build_compatibility_graph, find_induced_p4
from .dag import solve_dag
from .graph import EmergyGraph, ParseError, parse_graph, serialize_graph, topological_order, validate_graph
from .hardness import build_reduction, count_simple_paths, parse_digraph, serialize_digraph
from .paths import enumerate_emergy_paths
from .solver import EmergyState, SolveResult, SolveStats, brute_force_solve, solve_general


def decimal_string(x: Fraction, places: int = 2) -> str:
    """Exact fixed-point rendering (round half away from zero); display only."""
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator) * 10 ** places
    q, r = divmod(scaled, x.denominator)
    if 2 * r >= x.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _arc(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected L,LP, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"arc endpoints must be integers: {text!r}") from None


def _positive_rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(2) from None


def _load_graph(path: str) -> EmergyGraph | int:
    try:
        return parse_graph(_read(path))
    except ParseError as exc:
        return _fail(f"{path}: {exc}", 2)


def _load_valid_graph(path: str) -> EmergyGraph | int:
    g = _load_graph(path)
    if isinstance(g, int):
        return g
    report = validate_graph(g)
    if report:
        for v in report:
            print(f"violation[{v.code}] {v.message}")
        return 1
    return g


def cmd_validate(args) -> int:
    g = _load_graph(args.file)
    if isinstance(g, int):
        return g
    report = validate_graph(g)
    for v in report:
        print(f"violation[{v.code}] {v.message}")
    return 1 if report else 0


def cmd_paths(args) -> int:
    g = _load_valid_graph(args.file)
    if isinstance(g, int):
        return g
    if args.arc not in g.arcs:
        return _fail(f"{args.arc[0]},{args.arc[1]} is not an arc of the instance", 2)
    for p in enumerate_emergy_paths(g, args.arc):
        if args.format == "records":
            print(f"path nodes={p} source={p.source} arcs={p.arc_count} value={p.value}")
        else:
            print(f"{p} value={p.value}")
    return 0


def _solve(g: EmergyGraph, arc: tuple[int, int], method: str,
           want_state: bool) -> SolveResult | int:
    acyclic = topological_order(g).order is not None
    if method == "auto":
        method = "dag" if acyclic and not want_state else "cotree"
    if method == "dag":
        if want_state:
            return _fail("the dag method computes the value only; drop --state", 2)
        if not acyclic:
            return _fail("the dag method needs an acyclic instance; use cotree", 3)
        return SolveResult(solve_dag(g, arc), EmergyState.of(()), "dag",
                           SolveStats(0, (), 0.0))
    if method == "brute":
        try:
            return brute_force_solve(g, arc)
        except ValueError as exc:
            return _fail(str(exc), 3)
    return solve_general(g, arc)


def cmd_solve(args) -> int:
    g = _load_valid_graph(args.file)
    if isinstance(g, int):
        return g
    if args.arc not in g.arcs:
        return _fail(f"{args.arc[0]},{args.arc[1]} is not an arc of the instance", 2)
    started = time.perf_counter()
    result = _solve(g, args.arc, args.method, args.state)
    elapsed = time.perf_counter() - started
    if isinstance(result, int):
        return result
    # timing goes to stderr so stdout stays byte-stable for a given input
    print(f"solved in {elapsed * 1000:.1f} ms", file=sys.stderr)
    dec = decimal_string(result.value, args.places)
    if args.format == "records":
        print(f"solution arc={args.arc[0]},{args.arc[1]} method={result.method} "
              f"em={result.value} decimal={dec} paths={result.stats.path_count} "
              f"witness={len(result.witness.paths)}")
    else:
        print(f"Em = {result.value} ({dec})")
    if args.state:
        if args.format != "records":
            print("state:")
        for p in result.witness.paths:
            prefix = "state-path" if args.format == "records" else " "
            print(f"{prefix} {p} value={p.value}")
    if args.period is not None:
        rate = result.value / args.period
        if args.format == "records":
            print(f"empower period={args.period} value={rate} "
                  f"decimal={decimal_string(rate, args.places)}")
        else:
            print(f"empower = {rate} ({decimal_string(rate, args.places)})")
    if args.arc == fixtures.TEXTBOOK_DISPUTED_ARC and g == fixtures.load_textbook():
        print(fixtures.TEXTBOOK_NOTICE)
    return 0


def cmd_check_cograph(args) -> int:
    g = _load_valid_graph(args.file)
    if isinstance(g, int):
        return g
    if args.arc not in g.arcs:
        return _fail(f"{args.arc[0]},{args.arc[1]} is not an arc of the instance", 2)
    cg = build_compatibility_graph(g, args.arc)
    try:
        witness = find_induced_p4(cg, cap=args.cap)
    except ValueError as exc:
        return _fail(str(exc), 3)
    print(f"{len(cg.vertices)} vertices, {len(cg.edges)} edges")
    if witness is not None:
        print("induced four-path found:")
        for idx in witness:
            print(f"  {cg.vertices[idx]}")
        return 1
    return 0


def cmd_count_paths(args) -> int:
    try:
        d = parse_digraph(_read(args.file))
    except ParseError as exc:
        return _fail(f"{args.file}: {exc}", 2)
    except ValueError as exc:
        return _fail(f"{args.file}: {exc}", 2)
    methods = ["reduction", "dfs"] if args.method == "both" else [args.method]
    counts = {m: count_simple_paths(d, m) for m in methods}
    for m in methods:
        print(f"{m}: {counts[m]}")
    if len(set(counts.values())) > 1:
        return _fail("reduction and dfs disagree", 1)
    return 0


def cmd_gen(args) -> int:
    try:
        if args.family == "diamond-chain":
            g, arc = generators.diamond_chain(args.length, args.source_emergy)
            print(f"# diamond-chain length={args.length}")
            print(f"# suggested target arc: {arc[0]},{arc[1]}")
            sys.stdout.write(serialize_graph(g))
        elif args.family == "random-dag":
            g = generators.random_dag(args.nodes, args.arc_density, args.seed)
            print(f"# random-dag nodes={args.nodes} arc-density={args.arc_density} seed={args.seed}")
            sys.stdout.write(serialize_graph(g))
        elif args.family == "random-cyclic":
            g = generators.random_cyclic(args.nodes, args.arc_density, args.back_arcs, args.seed)
            print(f"# random-cyclic nodes={args.nodes} arc-density={args.arc_density} "
                  f"back-arcs={args.back_arcs} seed={args.seed}")
            sys.stdout.write(serialize_graph(g))
        elif args.family == "random-digraph":
            d = generators.random_digraph(args.nodes, args.arc_prob, args.seed)
            print(f"# random-digraph vertices={args.nodes} arc-prob={args.arc_prob} seed={args.seed}")
            sys.stdout.write(serialize_digraph(d))
        elif args.family == "reduction":
            if args.digraph is None:
                return _fail("the reduction family needs --digraph FILE", 2)
            d = parse_digraph(_read(args.digraph))
            inst = build_reduction(d)
            print(f"# reduction of {args.digraph}; bound={inst.bound}")
            print(f"# target arc: {inst.target_arc[0]},{inst.target_arc[1]}")
            sys.stdout.write(serialize_graph(inst.graph))
        else:  # unreachable, argparse restricts choices
            return _fail(f"unknown family {args.family}", 2)
    except (ParseError, ValueError) as exc:
        return _fail(str(exc), 2)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="empower",
        description="Exact maximum empower solvers on emergy graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance against the structural rules")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("paths", help="list the emergy paths of an arc")
    p.add_argument("file")
    p.add_argument("--arc", type=_arc, required=True, metavar="L,LP")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("solve", help="maximum empower of an arc")
    p.add_argument("file")
    p.add_argument("--arc", type=_arc, required=True, metavar="L,LP")
    p.add_argument("--method", choices=["auto", "cotree", "dag", "brute"], default="auto")
    p.add_argument("--state", action="store_true", help="print the witness paths")
    p.add_argument("--period", type=_positive_rational, default=None, metavar="P/Q",
                   help="also print empower = value / period")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.add_argument("--places", type=int, default=2, help="decimal places in renderings")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-cograph",
                       help="verify the compatibility graph has no induced four-path")
    p.add_argument("file")
    p.add_argument("--arc", type=_arc, required=True, metavar="L,LP")
    p.add_argument("--cap", type=int, default=400)
    p.set_defaults(func=cmd_check_cograph)

    p = sub.add_parser("count-paths", help="count simple start-to-target paths of a digraph")
    p.add_argument("file")
    p.add_argument("--method", choices=["reduction", "dfs", "both"], default="both")
    p.set_defaults(func=cmd_count_paths)

    p = sub.add_parser("gen", help="emit a generated instance on stdout")
    p.add_argument("--family", required=True,
                   choices=["diamond-chain", "random-dag", "random-cyclic",
                            "random-digraph", "reduction"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=int, default=3, help="diamond-chain layers")
    p.add_argument("--source-emergy", type=_positive_rational,
                   default=Fraction(1), help="diamond-chain source emergy")
    p.add_argument("--nodes", type=int, default=10)
    p.add_argument("--arc-density", type=float, default=0.4)
    p.add_argument("--back-arcs", type=int, default=1)
    p.add_argument("--arc-prob", type=float, default=0.5)
    p.add_argument("--digraph", default=None, help="digraph file for the reduction family")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
