"""Independent oracles and small utilities shared across the test modules.

Everything here deliberately avoids the package's clever code paths: the
path oracle enumerates every bounded walk and filters by the definition, the
induced-path oracle scans raw vertex quadruples, and the subset maximizer
grows compatible sets directly from the relation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from empower.compat import CompatibilityGraph, compatible
from empower.graph import EmergyGraph, NodeKind
from empower.paths import path_value


def satisfies_path_definition(g: EmergyGraph, seq: tuple[int, ...], arc: tuple[int, int]) -> bool:
    """Literal check of the emergy-path definition for a query arc."""
    if len(seq) < 2 or (seq[-2], seq[-1]) != arc:
        return False
    if g.kind.get(seq[0]) is not NodeKind.SOURCE:
        return False
    if any(g.kind.get(n) is NodeKind.SOURCE for n in seq[1:]):
        return False
    for a, b in zip(seq, seq[1:]):
        if (a, b) not in g.arcs:
            return False
    prefix = seq[:-1]
    if len(set(prefix)) != len(prefix):
        return False
    return seq.count(seq[-1]) <= 2


def oracle_emergy_paths(g: EmergyGraph, arc: tuple[int, int]) -> list[tuple[int, ...]]:
    """Enumerate all bounded walks from every node and filter by the definition."""
    max_nodes = len(g.nodes) + 1
    found = []
    stack: list[tuple[int, ...]] = [(n,) for n in g.nodes]
    while stack:
        walk = stack.pop()
        if satisfies_path_definition(g, walk, arc):
            found.append(walk)
        if len(walk) < max_nodes:
            for nxt in g.successors(walk[-1]):
                stack.append(walk + (nxt,))
    return sorted(found)


def naive_find_p4(cg: CompatibilityGraph) -> tuple[int, ...] | None:
    """Quadruple-by-quadruple induced-path scan, the dumbest possible way."""
    n = len(cg.vertices)
    edges = {frozenset(e) for e in cg.edges}
    for quad in combinations(range(n), 4):
        inside = [frozenset(p) for p in combinations(quad, 2) if frozenset(p) in edges]
        if len(inside) != 3:
            continue
        degree = {v: sum(v in e for e in inside) for v in quad}
        if sorted(degree.values()) == [1, 1, 2, 2]:
            return quad
    return None


def rooted_simple_paths(g: EmergyGraph, root: int, arc: tuple[int, int]) -> list[tuple[int, ...]]:
    """Simple paths from `root` ending with `arc` (for acyclic instances)."""
    tail, head = arc
    found: list[tuple[int, ...]] = []

    def walk(node: int, prefix: tuple[int, ...], seen: set[int]):
        if node == tail:
            found.append(prefix + (head,))
            return
        for nxt in g.successors(node):
            if nxt in seen:
                continue
            seen.add(nxt)
            walk(nxt, prefix + (nxt,), seen)
            seen.remove(nxt)

    walk(root, (root,), {root})
    return found


def best_compatible_value(g: EmergyGraph, seqs: list[tuple[int, ...]]) -> Fraction:
    """Maximum total value over pairwise-compatible subsets, grown directly."""
    values = [path_value(g, s) for s in seqs]
    n = len(seqs)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compatible(g, seqs[i], seqs[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    best = Fraction(0)

    def mask_sum(mask: int) -> Fraction:
        total = Fraction(0)
        while mask:
            bit = mask & -mask
            mask ^= bit
            total += values[bit.bit_length() - 1]
        return total

    def grow(value: Fraction, candidates: int):
        nonlocal best
        if value > best:
            best = value
        rest = candidates
        while rest:
            bit = rest & -rest
            rest ^= bit
            i = bit.bit_length() - 1
            picked = value + values[i]
            remaining = rest & masks[i]
            if picked + mask_sum(remaining) > best:
                grow(picked, remaining)

    grow(Fraction(0), (1 << n) - 1)
    return best


def arc_with_most_paths(g: EmergyGraph, max_paths: int | None = None) -> tuple[int, int] | None:
    """The arc carrying the most emergy paths (capped when asked), ties low."""
    from empower.paths import enumerate_emergy_paths

    best_arc, best_count = None, -1
    for arc in sorted(g.arcs):
        count = len(enumerate_emergy_paths(g, arc))
        if max_paths is not None and count > max_paths:
            continue
        if count > best_count:
            best_arc, best_count = arc, count
    return best_arc
