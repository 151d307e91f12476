"""General-case maximum empower solver.

The emergy paths of one source, laid out as a prefix trie, decompose the
compatibility structure exactly: branches under a split node are mutually
compatible (take them all, add), branches under a co-product are mutually
exclusive (take the best one). Evaluating each source's trie bottom-up and
summing across sources therefore yields the maximum-weight set of pairwise
compatible paths, together with the witness set itself. `brute_force_solve`
maximizes over all compatible subsets directly and exists purely as an
oracle for small instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Sequence

from .compat import compatible
from .graph import EmergyGraph, NodeKind
from .paths import EmergyPath, enumerate_emergy_paths


@dataclass
class TrieNode:
    """One position in a per-source path trie; leaves carry whole paths."""

    node_id: int
    children: dict[int, "TrieNode"] = field(default_factory=dict)
    leaf: EmergyPath | None = None

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children.values())


@dataclass(frozen=True)
class EmergyState:
    """A set of pairwise compatible paths with its total value."""

    paths: tuple[EmergyPath, ...]
    value: Fraction

    @classmethod
    def of(cls, paths: Iterable[EmergyPath]) -> "EmergyState":
        ordered = tuple(sorted(paths))
        return cls(ordered, sum((p.value for p in ordered), Fraction(0)))


@dataclass(frozen=True)
class SolveStats:
    path_count: int
    trie_sizes: tuple[int, ...]
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    value: Fraction
    witness: EmergyState
    method: str
    stats: SolveStats


def build_source_trie(paths: Sequence[EmergyPath]) -> TrieNode:
    """Insert the paths of one source into a shared-prefix trie.

    Raises when two paths are prefix-related (or duplicated): distinct
    emergy paths ending with the same arc never are, because the earlier
    occurrence of the arc tail would break simplicity, and the evaluation
    below leans on leaves being exactly the paths.
    """
    if not paths:
        raise ValueError("cannot build a trie from zero paths")
    root = TrieNode(paths[0].nodes[0])
    for p in paths:
        if p.nodes[0] != root.node_id:
            raise ValueError("paths of one trie must share their first node")
        node = root
        for nid in p.nodes[1:]:
            if node.leaf is not None:
                raise ValueError(f"path {node.leaf} is a strict prefix of {p}")
            node = node.children.setdefault(nid, TrieNode(nid))
        if node.leaf is not None or node.children:
            raise ValueError(f"path {p} duplicates or prefixes another path")
        node.leaf = p
    return root


def evaluate_trie(g: EmergyGraph, root: TrieNode) -> tuple[Fraction, list[EmergyPath]]:
    """Best total value over compatible leaf subsets, with the chosen leaves.

    Bottom-up: a leaf is worth its path value; a unary node passes its child
    through; a branching split sums all children (their selections coexist);
    a branching co-product keeps the best child, ties going to the smallest
    child id. Branching anywhere else is a structural error.
    """
    def walk(node: TrieNode) -> tuple[Fraction, list[EmergyPath]]:
        if node.leaf is not None:
            return node.leaf.value, [node.leaf]
        parts = [walk(node.children[k]) for k in sorted(node.children)]
        if len(parts) == 1:
            return parts[0]
        kind = g.kind[node.node_id]
        if kind is NodeKind.SPLIT:
            total = sum((value for value, _ in parts), Fraction(0))
            chosen = [p for _, sel in parts for p in sel]
            return total, chosen
        if kind is NodeKind.COPRODUCT:
            best = parts[0]
            for cand in parts[1:]:
                if cand[0] > best[0]:
                    best = cand
            return best
        raise ValueError(f"trie branches at {kind.value} node {node.node_id}")

    return walk(root)


def solve_general(g: EmergyGraph, arc: tuple[int, int]) -> SolveResult:
    """Maximum empower of `arc` by per-source trie evaluation.

    Works on cyclic and acyclic graphs alike; the cost after enumeration is
    linear in the total length of the enumerated paths. Returns value 0 with
    an empty witness when no source reaches the arc.
    """
    started = time.perf_counter()
    paths = enumerate_emergy_paths(g, arc)
    total = Fraction(0)
    chosen: list[EmergyPath] = []
    sizes: list[int] = []
    for _, group in groupby(paths, key=lambda p: p.source):
        trie = build_source_trie(list(group))
        sizes.append(trie.size())
        value, selected = evaluate_trie(g, trie)
        total += value
        chosen.extend(selected)
    stats = SolveStats(len(paths), tuple(sizes), time.perf_counter() - started)
    return SolveResult(total, EmergyState.of(chosen), "cotree", stats)


def brute_force_solve(g: EmergyGraph, arc: tuple[int, int], cap: int = 20) -> SolveResult:
    """Exhaustive maximization over all pairwise-compatible path subsets.

    The oracle the trie solver is tested against; refuses more than `cap`
    paths. Ties are broken toward the lexicographically smallest path set.
    """
    started = time.perf_counter()
    paths = enumerate_emergy_paths(g, arc)
    n = len(paths)
    if n > cap:
        raise ValueError(f"{n} paths exceed the brute-force cap {cap}")
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compatible(g, paths[i].nodes, paths[j].nodes):
                masks[i] |= 1 << j
                masks[j] |= 1 << i

    best_value = Fraction(0)
    best_members: tuple[int, ...] = ()

    def mask_sum(mask: int) -> Fraction:
        total = Fraction(0)
        while mask:
            bit = mask & -mask
            mask ^= bit
            total += paths[bit.bit_length() - 1].value
        return total

    def grow(members: tuple[int, ...], value: Fraction, candidates: int):
        # every subset of `candidates` extends `members` to a compatible set;
        # branches that cannot tie the best even taking everything are dead
        # (values are positive, so the bound is sound and ties survive)
        nonlocal best_value, best_members
        if value > best_value or (value == best_value and members < best_members):
            best_value, best_members = value, members
        rest = candidates
        while rest:
            bit = rest & -rest
            rest ^= bit
            i = bit.bit_length() - 1
            picked = value + paths[i].value
            remaining = rest & masks[i]
            if picked + mask_sum(remaining) < best_value:
                continue
            grow(members + (i,), picked, remaining)

    grow((), Fraction(0), (1 << n) - 1)
    state = EmergyState.of(paths[i] for i in best_members)
    stats = SolveStats(n, (), time.perf_counter() - started)
    return SolveResult(best_value, state, "brute", stats)
