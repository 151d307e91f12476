"""Emergy graph model: node kinds, exact rational weights, text format, validation.

An emergy graph is a directed graph whose nodes are sources (each feeding
exactly one node), splits (outgoing weights sum to 1), co-products (every
outgoing weight is 1, at least two successors), and outputs (sinks). All
weights and source emergies are exact rationals; nothing in the solvers ever
touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable


class NodeKind(Enum):
    SOURCE = "source"
    SPLIT = "split"
    COPRODUCT = "coproduct"
    OUTPUT = "output"


class ParseError(ValueError):
    """Malformed graph text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class EmergyGraph:
    """Immutable emergy graph with precomputed sorted adjacency.

    `kind` maps node id to its kind, `source_emergy` holds the emergy of each
    source node, `arcs` maps (tail, head) to the arc weight. Successor and
    predecessor lists are derived and sorted ascending by id, which makes
    every traversal in this package deterministic.

    The constructor rejects structural nonsense (self-loops, arcs touching
    undeclared nodes, emergy entries on non-sources); the semantic rules
    (weight sums, degrees, ranges) are reported by `validate_graph`.
    """

    kind: dict[int, NodeKind]
    source_emergy: dict[int, Fraction]
    arcs: dict[tuple[int, int], Fraction]
    succ: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)
    pred: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "source_emergy",
            {i: Fraction(v) for i, v in self.source_emergy.items()})
        object.__setattr__(
            self, "arcs", {a: Fraction(w) for a, w in self.arcs.items()})
        for i in self.source_emergy:
            if self.kind.get(i) is not NodeKind.SOURCE:
                raise ValueError(f"emergy given for non-source node {i}")
        for s, k in self.kind.items():
            if k is NodeKind.SOURCE and s not in self.source_emergy:
                raise ValueError(f"source node {s} has no emergy")
        succ: dict[int, list[int]] = {i: [] for i in self.kind}
        pred: dict[int, list[int]] = {i: [] for i in self.kind}
        for (a, b) in self.arcs:
            if a == b:
                raise ValueError(f"self-loop arc ({a}, {a})")
            if a not in self.kind or b not in self.kind:
                raise ValueError(f"arc ({a}, {b}) touches an undeclared node")
            succ[a].append(b)
            pred[b].append(a)
        object.__setattr__(self, "succ", {i: tuple(sorted(v)) for i, v in succ.items()})
        object.__setattr__(self, "pred", {i: tuple(sorted(v)) for i, v in pred.items()})

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.kind))

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(i for i in self.nodes if self.kind[i] is NodeKind.SOURCE)

    @property
    def outputs(self) -> tuple[int, ...]:
        return tuple(i for i in self.nodes if self.kind[i] is NodeKind.OUTPUT)

    def successors(self, i: int) -> tuple[int, ...]:
        return self.succ[i]

    def predecessors(self, i: int) -> tuple[int, ...]:
        return self.pred[i]

    def weight(self, tail: int, head: int) -> Fraction:
        return self.arcs[(tail, head)]


@dataclass(frozen=True)
class Violation:
    """One broken graph rule; `subject` is a node id or an arc pair."""

    code: str
    subject: int | tuple[int, int]
    message: str


def require_arc(g: EmergyGraph, arc: tuple[int, int]) -> tuple[int, int]:
    arc = (int(arc[0]), int(arc[1]))
    if arc not in g.arcs:
        raise ValueError(f"({arc[0]}, {arc[1]}) is not an arc of the graph")
    return arc


_RATIONAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def _parse_rational(token: str, line: int, col: int) -> Fraction:
    m = _RATIONAL.match(token)
    if not m:
        raise ParseError(f"expected a rational, got {token!r}", line, col)
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ParseError("denominator must be a positive integer", line, col)
    return Fraction(num, den)


def _parse_node_id(token: str, line: int, col: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a node id, got {token!r}", line, col)
    return int(token)


def _tokenize(text: str) -> Iterable[tuple[int, list[tuple[str, int]]]]:
    """Yield (line number, [(token, column), ...]) skipping blanks and comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", content)]
        if tokens:
            yield lineno, tokens


def parse_graph(text: str) -> EmergyGraph:
    """Parse the line-oriented emergy graph format.

    node <id> source <rational>
    node <id> split | coproduct | output
    arc <from> <to> <rational>

    '#' starts a comment, blank lines are ignored. Raises ParseError on
    syntax problems, duplicate declarations, self-loops, or arcs touching
    undeclared nodes. Semantic rules are left to `validate_graph`.
    """
    kinds: dict[int, NodeKind] = {}
    emergy: dict[int, Fraction] = {}
    arcs: dict[tuple[int, int], Fraction] = {}
    arc_sites: list[tuple[tuple[int, int], int, int]] = []

    for lineno, tokens in _tokenize(text):
        word, col = tokens[0]
        if word == "node":
            if len(tokens) < 3:
                raise ParseError("node line needs an id and a kind", lineno, col)
            nid = _parse_node_id(tokens[1][0], lineno, tokens[1][1])
            kind_tok, kind_col = tokens[2]
            try:
                kind = NodeKind(kind_tok)
            except ValueError:
                raise ParseError(f"unknown node kind {kind_tok!r}", lineno, kind_col) from None
            if nid in kinds:
                raise ParseError(f"duplicate node id {nid}", lineno, tokens[1][1])
            if kind is NodeKind.SOURCE:
                if len(tokens) != 4:
                    raise ParseError("source node needs an emergy value", lineno, kind_col)
                emergy[nid] = _parse_rational(tokens[3][0], lineno, tokens[3][1])
            else:
                if len(tokens) != 3:
                    raise ParseError(
                        f"{kind_tok} node takes no value", lineno, tokens[3][1])
            kinds[nid] = kind
        elif word == "arc":
            if len(tokens) != 4:
                raise ParseError("arc line needs <from> <to> <weight>", lineno, col)
            a = _parse_node_id(tokens[1][0], lineno, tokens[1][1])
            b = _parse_node_id(tokens[2][0], lineno, tokens[2][1])
            w = _parse_rational(tokens[3][0], lineno, tokens[3][1])
            if a == b:
                raise ParseError(f"self-loop arc ({a}, {b})", lineno, tokens[1][1])
            if (a, b) in arcs:
                raise ParseError(f"duplicate arc ({a}, {b})", lineno, tokens[1][1])
            arcs[(a, b)] = w
            arc_sites.append(((a, b), lineno, tokens[1][1]))
        else:
            raise ParseError(f"expected 'node' or 'arc', got {word!r}", lineno, col)

    for (a, b), lineno, col in arc_sites:
        for endpoint in (a, b):
            if endpoint not in kinds:
                raise ParseError(f"undeclared node {endpoint}", lineno, col)

    return EmergyGraph(kinds, emergy, arcs)


def serialize_graph(g: EmergyGraph) -> str:
    """Canonical text form: nodes ascending, then arcs ascending by (from, to)."""
    lines = []
    for i in g.nodes:
        k = g.kind[i]
        if k is NodeKind.SOURCE:
            lines.append(f"node {i} source {g.source_emergy[i]}")
        else:
            lines.append(f"node {i} {k.value}")
    for (a, b) in sorted(g.arcs):
        lines.append(f"arc {a} {b} {g.arcs[(a, b)]}")
    return "\n".join(lines) + "\n"


def validate_graph(g: EmergyGraph) -> list[Violation]:
    """Check every semantic rule; an empty report means the graph is valid.

    Violations are data, not exceptions: callers decide whether a broken
    graph is fatal. The report order is deterministic (nodes ascending,
    then arcs ascending).
    """
    report: list[Violation] = []
    one = Fraction(1)
    for i in g.nodes:
        k = g.kind[i]
        out = g.successors(i)
        if k is NodeKind.SOURCE:
            if g.source_emergy[i] <= 0:
                report.append(Violation(
                    "emergy-range", i,
                    f"source {i} emergy {g.source_emergy[i]} is not positive"))
            if len(out) != 1:
                report.append(Violation(
                    "source-degree", i,
                    f"source {i} has {len(out)} successors, needs exactly 1"))
            if g.predecessors(i):
                report.append(Violation(
                    "source-pred", i,
                    f"source {i} has predecessors {list(g.predecessors(i))}"))
        elif k is NodeKind.OUTPUT:
            if out:
                report.append(Violation(
                    "output-succ", i, f"output {i} has successors {list(out)}"))
        else:
            if not out:
                report.append(Violation(
                    "dead-intermediate", i,
                    f"{k.value} node {i} has no successors"))
        if k in (NodeKind.SOURCE, NodeKind.SPLIT) and out:
            total = sum((g.arcs[(i, j)] for j in out), Fraction(0))
            if total != one:
                report.append(Violation(
                    "split-sum", i,
                    f"{k.value} {i} outgoing weights sum to {total}, not 1"))
        if k is NodeKind.COPRODUCT:
            if len(out) < 2:
                report.append(Violation(
                    "coproduct-degree", i,
                    f"co-product {i} has {len(out)} successors, needs at least 2"))
            for j in out:
                if g.arcs[(i, j)] != one:
                    report.append(Violation(
                        "coproduct-weight", (i, j),
                        f"co-product arc ({i}, {j}) has weight {g.arcs[(i, j)]}, not 1"))
    for (a, b) in sorted(g.arcs):
        w = g.arcs[(a, b)]
        if not 0 < w <= 1:
            report.append(Violation(
                "weight-range", (a, b),
                f"arc ({a}, {b}) weight {w} is outside (0, 1]"))
    return report


@dataclass(frozen=True)
class TopoResult:
    """Either a topological order of all nodes or a directed cycle witness.

    Exactly one field is set. A cycle is returned in closed form (first node
    repeated at the end) so consecutive pairs are all arcs.
    """

    order: tuple[int, ...] | None
    cycle: tuple[int, ...] | None


def topological_order(g: EmergyGraph) -> TopoResult:
    """Depth-first order computation, deterministic by ascending node ids."""
    GRAY, BLACK = 1, 2
    state: dict[int, int] = {}
    finished: list[int] = []
    for root in g.nodes:
        if root in state:
            continue
        state[root] = GRAY
        path = [root]
        iters = [iter(g.successors(root))]
        while path:
            nxt = next(iters[-1], None)
            if nxt is None:
                done = path.pop()
                iters.pop()
                state[done] = BLACK
                finished.append(done)
                continue
            mark = state.get(nxt, 0)
            if mark == GRAY:
                start = path.index(nxt)
                return TopoResult(None, tuple(path[start:]) + (nxt,))
            if mark == 0:
                state[nxt] = GRAY
                path.append(nxt)
                iters.append(iter(g.successors(nxt)))
    return TopoResult(tuple(reversed(finished)), None)
