"""Emergy path enumeration and the path value function.

An emergy path for a query arc (l, l') starts at a source, ends with the arc
itself, and is simple except that the final node l' may coincide with one
earlier node (that is how a path may close a cycle exactly once).

Plain node tuples double as the path algebra: `None` is the absorbing
no-connection element and the empty tuple is the neutral zero-arc path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import EmergyGraph, NodeKind, require_arc


@dataclass(frozen=True, order=True)
class EmergyPath:
    """A node sequence with its value cached at enumeration time."""

    nodes: tuple[int, ...]
    value: Fraction

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def arc_count(self) -> int:
        return len(self.nodes) - 1

    def __str__(self) -> str:
        return ",".join(str(n) for n in self.nodes)


def path_value(g: EmergyGraph, path: Sequence[int] | None) -> Fraction:
    """Value of a path: 0 for no path, 1 for a zero-arc path, otherwise the
    product of its arc weights, scaled by the source emergy when the path
    starts at a source."""
    if path is None:
        return Fraction(0)
    path = tuple(path)
    if len(path) <= 1:
        return Fraction(1)
    value = Fraction(1)
    for tail, head in zip(path, path[1:]):
        try:
            value *= g.arcs[(tail, head)]
        except KeyError:
            raise ValueError(f"({tail}, {head}) is not an arc") from None
    if g.kind.get(path[0]) is NodeKind.SOURCE:
        value *= g.source_emergy[path[0]]
    return value


def concat_paths(a: Sequence[int] | None, b: Sequence[int] | None) -> tuple[int, ...] | None:
    """Join two paths when the endpoints meet.

    Absorbing on `None`, neutral on the empty tuple, and `None` when the
    first path does not end where the second begins.
    """
    if a is None or b is None:
        return None
    a, b = tuple(a), tuple(b)
    if not a:
        return b
    if not b:
        return a
    if a[-1] != b[0]:
        return None
    return a + b[1:]


def enumerate_emergy_paths(g: EmergyGraph, arc: tuple[int, int]) -> list[EmergyPath]:
    """All emergy paths ending with `arc`, sorted lexicographically.

    Runs a backtracking search from each source in ascending id order,
    expanding successors ascending, so the output order is the lexicographic
    order of the node sequences. A branch completes exactly when it reaches
    the arc tail; the head is then appended without a visited check, which is
    the one permitted repetition. Values are accumulated along the way.

    Assumes a valid graph (sources have no predecessors, so interior nodes
    are never sources). Returns an empty list when no source reaches the arc.
    """
    tail, head = require_arc(g, arc)
    arc_weight = g.arcs[(tail, head)]
    results: list[EmergyPath] = []

    def walk(node: int, prefix: tuple[int, ...], seen: set[int], value: Fraction):
        if node == tail:
            results.append(EmergyPath(prefix + (head,), value * arc_weight))
            return
        for nxt in g.successors(node):
            if nxt in seen:
                continue
            seen.add(nxt)
            walk(nxt, prefix + (nxt,), seen, value * g.arcs[(node, nxt)])
            seen.remove(nxt)

    for s in g.sources:
        walk(s, (s,), {s}, g.source_emergy[s])
    return results
