"""Counting simple paths through the maximum empower solver.

Counting the simple paths between two vertices of a digraph reduces to one
empower query: wrap the digraph in an emergy instance where every original
vertex is a split, every original arc carries weight 1/B for a bound B on
the number of simple paths, and leak the remaining weight of each vertex to
a drain output. With no co-products present, every set of emergy paths is
compatible, so the returned value is the plain sum over all paths, and a
path with i arcs contributes exactly (exit weight)/B^(i-2). Dividing out the
exit weight leaves a number whose base-B digits are the per-length path
counts. The digit extraction is exact rational arithmetic throughout; a
direct backtracking counter serves as the independent cross-check.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .dag import solve_dag
from .graph import EmergyGraph, NodeKind, ParseError, topological_order
from .solver import solve_general


@dataclass(frozen=True)
class Digraph:
    """A counting instance: directed graph with start and target vertices."""

    vertices: frozenset[int]
    arcs: frozenset[tuple[int, int]]
    start: int
    target: int

    def __post_init__(self):
        if self.start == self.target:
            raise ValueError("start and target must differ")
        for v in (self.start, self.target):
            if v not in self.vertices:
                raise ValueError(f"vertex {v} not declared")
        for a, b in self.arcs:
            if a == b:
                raise ValueError(f"self-loop arc ({a}, {b})")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"arc ({a}, {b}) touches an undeclared vertex")

    def successors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(b for a, b in self.arcs if a == v))

    def out_degree(self, v: int) -> int:
        return sum(1 for a, _ in self.arcs if a == v)


@dataclass(frozen=True)
class ReductionInstance:
    """The emergy instance wrapping a digraph, plus its decoding parameters."""

    graph: EmergyGraph
    bound: int
    source: int
    sink: int
    drain: int
    target_arc: tuple[int, int]


@dataclass(frozen=True)
class PathCountVector:
    """Simple-path counts keyed by emergy-path arc count (2 upward)."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, mapping: dict[int, int]) -> "PathCountVector":
        return cls(tuple(sorted(mapping.items())))

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def count(self, arcs: int) -> int:
        return dict(self.counts).get(arcs, 0)


def parse_digraph(text: str) -> Digraph:
    """Parse the digraph format: vertex/edge lines plus one start and target."""
    vertices: set[int] = set()
    arcs: set[tuple[int, int]] = set()
    start: int | None = None
    target: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", content)]
        if not tokens:
            continue
        word, col = tokens[0]
        arity = {"vertex": 1, "edge": 2, "start": 1, "target": 1}.get(word)
        if arity is None:
            raise ParseError(f"unrecognized line {word!r}", lineno, col)
        if len(tokens) != arity + 1:
            raise ParseError(f"{word} line needs {arity} vertex id(s)", lineno, col)
        ids = []
        for tok, tcol in tokens[1:]:
            if not tok.isdigit():
                raise ParseError(f"expected a vertex id, got {tok!r}", lineno, tcol)
            ids.append(int(tok))
        if word == "vertex" and len(ids) == 1:
            if ids[0] in vertices:
                raise ParseError(f"duplicate vertex {ids[0]}", lineno, col)
            vertices.add(ids[0])
        elif word == "edge" and len(ids) == 2:
            pair = (ids[0], ids[1])
            if pair[0] == pair[1]:
                raise ParseError(f"self-loop edge ({pair[0]}, {pair[1]})", lineno, col)
            if pair in arcs:
                raise ParseError(f"duplicate edge {pair}", lineno, col)
            arcs.add(pair)
        elif word == "start" and len(ids) == 1:
            if start is not None:
                raise ParseError("duplicate start line", lineno, col)
            start = ids[0]
        elif word == "target" and len(ids) == 1:
            if target is not None:
                raise ParseError("duplicate target line", lineno, col)
            target = ids[0]
    if start is None or target is None:
        raise ParseError("missing start or target line", 1)
    undeclared = ({start, target} | {v for a in arcs for v in a}) - vertices
    if undeclared:
        raise ParseError(f"undeclared vertex {min(undeclared)}", 1)
    return Digraph(frozenset(vertices), frozenset(arcs), start, target)


def serialize_digraph(d: Digraph) -> str:
    lines = [f"vertex {v}" for v in sorted(d.vertices)]
    lines += [f"edge {a} {b}" for a, b in sorted(d.arcs)]
    lines += [f"start {d.start}", f"target {d.target}"]
    return "\n".join(lines) + "\n"


def simple_path_bound(d: Digraph) -> int:
    """Upper bound on the number of simple start-to-target paths.

    Sums, over path vertex counts i, the number of injective vertex
    sequences of that length: n!/(n-i)! for i = 1..n.
    """
    n = len(d.vertices)
    return sum(math.factorial(n) // math.factorial(n - i) for i in range(1, n + 1))


def build_reduction(d: Digraph) -> ReductionInstance:
    """Wrap a digraph in the empower instance used for path counting.

    Adds a unit-emergy source feeding the start vertex, a sink output behind
    the target (the query arc), and a drain output absorbing each vertex's
    leftover weight. Every original vertex becomes a split whose original
    arcs weigh 1/B, so its outgoing weights sum to one exactly; the target
    vertex routes its leftover to the sink instead of the drain, keeping the
    sum intact there too.
    """
    bound = simple_path_bound(d)
    top = max(d.vertices)
    source, sink, drain = top + 1, top + 2, top + 3
    kinds: dict[int, NodeKind] = {v: NodeKind.SPLIT for v in d.vertices}
    kinds[source] = NodeKind.SOURCE
    kinds[sink] = NodeKind.OUTPUT
    kinds[drain] = NodeKind.OUTPUT
    arcs: dict[tuple[int, int], Fraction] = {
        (a, b): Fraction(1, bound) for a, b in d.arcs}
    arcs[(source, d.start)] = Fraction(1)
    for v in sorted(d.vertices):
        degree = d.out_degree(v)
        if degree >= bound:
            raise ValueError(f"vertex {v} out-degree {degree} reaches the bound {bound}")
        leftover = 1 - Fraction(degree, bound)
        if v == d.target:
            arcs[(v, sink)] = leftover
        else:
            arcs[(v, drain)] = leftover
    graph = EmergyGraph(kinds, {source: Fraction(1)}, arcs)
    return ReductionInstance(graph, bound, source, sink, drain, (d.target, sink))


def decode_counts(value: Fraction, base: int, max_arcs: int) -> PathCountVector:
    """Read the per-length counts out of a base-1/`base` expansion.

    The input must equal sum over i of n_i / base^(i-2) with every digit in
    [0, base); digits come out by repeated floor and rescale, and anything
    left over at the end means the value was not of that shape.
    """
    counts: dict[int, int] = {}
    residue = Fraction(value)
    for i in range(2, max_arcs + 1):
        digit = math.floor(residue)
        if not 0 <= digit < base:
            raise ValueError(f"digit {digit} for length {i} is outside [0, {base})")
        counts[i] = digit
        residue = (residue - digit) * base
    if residue != 0:
        raise ValueError(f"nonzero residue {residue} after {max_arcs} digits")
    return PathCountVector.of(counts)


def enumerate_simple_paths(d: Digraph) -> list[tuple[int, ...]]:
    """All simple start-to-target vertex sequences, by backtracking."""
    found: list[tuple[int, ...]] = []
    succ = {v: d.successors(v) for v in d.vertices}

    def walk(node: int, prefix: tuple[int, ...], seen: set[int]):
        if node == d.target:
            found.append(prefix)
            return
        for nxt in succ[node]:
            if nxt in seen:
                continue
            seen.add(nxt)
            walk(nxt, prefix + (nxt,), seen)
            seen.remove(nxt)

    walk(d.start, (d.start,), {d.start})
    return found


def dfs_counts(d: Digraph) -> PathCountVector:
    """Independent per-length counts: a path on m vertices maps to length m+1."""
    counts = {i: 0 for i in range(2, len(d.vertices) + 2)}
    for p in enumerate_simple_paths(d):
        counts[len(p) + 1] += 1
    return PathCountVector.of(counts)


def reduction_counts(d: Digraph) -> PathCountVector:
    """Solve the wrapped instance and decode the digits.

    Uses the linear-time solver when the digraph is acyclic and the general
    solver otherwise. The length-2 digit is always zero (the shortest wrapped
    path has three arcs) and is asserted, not skipped.
    """
    inst = build_reduction(d)
    if topological_order(inst.graph).order is not None:
        empower = solve_dag(inst.graph, inst.target_arc)
    else:
        empower = solve_general(inst.graph, inst.target_arc).value
    exit_weight = inst.graph.arcs[inst.target_arc]
    vector = decode_counts(empower / exit_weight, inst.bound, len(d.vertices) + 1)
    assert vector.count(2) == 0, "a wrapped path needs at least three arcs"
    return vector


def count_simple_paths(d: Digraph, method: str = "reduction") -> int:
    """Number of simple start-to-target paths, by either route."""
    if method == "reduction":
        return reduction_counts(d).total
    if method == "dfs":
        return len(enumerate_simple_paths(d))
    raise ValueError(f"unknown method {method!r}")
