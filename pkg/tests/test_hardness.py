"""The counting reduction, digit decoding, and the differential cross-check."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from empower.generators import random_digraph
from empower.graph import ParseError, topological_order, validate_graph
from empower.hardness import (
    Digraph,
    build_reduction,
    count_simple_paths,
    decode_counts,
    dfs_counts,
    enumerate_simple_paths,
    parse_digraph,
    reduction_counts,
    serialize_digraph,
    simple_path_bound,
)
from empower.paths import enumerate_emergy_paths
from empower.solver import solve_general


def digraph(n: int, arcs: set[tuple[int, int]], start=1, target=None) -> Digraph:
    return Digraph(frozenset(range(1, n + 1)), frozenset(arcs), start, target or n)


SINGLE_ARC = digraph(2, {(1, 2)})
TRIANGLE = digraph(3, {(1, 2), (2, 3), (1, 3)})


class TestDigraph:
    def test_invariants(self):
        with pytest.raises(ValueError, match="differ"):
            digraph(2, set(), start=1, target=1)
        with pytest.raises(ValueError, match="self-loop"):
            digraph(2, {(1, 1)})
        with pytest.raises(ValueError, match="undeclared"):
            digraph(2, {(1, 3)})

    def test_parse_round_trip(self):
        text = serialize_digraph(TRIANGLE)
        assert parse_digraph(text) == TRIANGLE

    def test_parse_errors(self):
        with pytest.raises(ParseError, match="duplicate vertex"):
            parse_digraph("vertex 1\nvertex 1\nstart 1\ntarget 2\n")
        with pytest.raises(ParseError, match="duplicate edge"):
            parse_digraph("vertex 1\nvertex 2\nedge 1 2\nedge 1 2\nstart 1\ntarget 2\n")
        with pytest.raises(ParseError, match="missing start"):
            parse_digraph("vertex 1\nvertex 2\n")
        with pytest.raises(ParseError, match="undeclared"):
            parse_digraph("vertex 1\nstart 1\ntarget 9\n")
        with pytest.raises(ParseError, match="unrecognized"):
            parse_digraph("node 1 split\n")


class TestBound:
    def test_small_counts(self):
        assert simple_path_bound(SINGLE_ARC) == 4
        assert simple_path_bound(TRIANGLE) == 15

    def test_single_vertex_formula(self):
        # the formula itself is defined down to one vertex
        one = Digraph(frozenset({1, 2}), frozenset(), 1, 2)
        assert simple_path_bound(one) == 4
        import math
        assert sum(math.factorial(1) // math.factorial(1 - i) for i in range(1, 2)) == 1


class TestBuildReduction:
    def test_single_arc_instance(self):
        inst = build_reduction(SINGLE_ARC)
        assert inst.bound == 4
        g = inst.graph
        assert g.arcs == {
            (inst.source, 1): Fraction(1),
            (1, 2): Fraction(1, 4),
            (1, inst.drain): Fraction(3, 4),
            (2, inst.sink): Fraction(1)}
        assert inst.target_arc == (2, inst.sink)
        assert g.source_emergy[inst.source] == 1
        assert validate_graph(g) == []

    def test_vertex_without_successors_drains_fully(self):
        inst = build_reduction(digraph(3, {(1, 3)}))
        assert inst.graph.arcs[(2, inst.drain)] == 1

    def test_no_coproducts_anywhere(self):
        from empower.graph import NodeKind
        inst = build_reduction(TRIANGLE)
        assert all(k is not NodeKind.COPRODUCT for k in inst.graph.kind.values())

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_reduction_always_validates(self, seed):
        d = random_digraph(2 + seed % 5, 0.5, seed)
        assert validate_graph(build_reduction(d).graph) == []

    @given(st.integers(0, 10_000))
    @settings(max_examples=20, deadline=None)
    def test_path_value_shape(self, seed):
        d = random_digraph(2 + seed % 4, 0.5, seed)
        inst = build_reduction(d)
        exit_weight = inst.graph.arcs[inst.target_arc]
        for p in enumerate_emergy_paths(inst.graph, inst.target_arc):
            assert p.value == exit_weight / inst.bound ** (p.arc_count - 2)


class TestDecode:
    def test_two_digits(self):
        vec = decode_counts(Fraction(2) + Fraction(3, 15), 15, 3)
        assert vec.counts == ((2, 2), (3, 3))
        assert vec.total == 5

    def test_single_arc_expansion(self):
        vec = decode_counts(Fraction(1, 4), 4, 3)
        assert vec.counts == ((2, 0), (3, 1))

    def test_zero(self):
        vec = decode_counts(Fraction(0), 4, 4)
        assert vec.counts == ((2, 0), (3, 0), (4, 0))
        assert vec.total == 0

    def test_digit_too_large(self):
        with pytest.raises(ValueError, match="outside"):
            decode_counts(Fraction(9), 4, 3)

    def test_negative_value(self):
        with pytest.raises(ValueError, match="outside"):
            decode_counts(Fraction(-1, 2), 4, 3)

    def test_nonzero_residue(self):
        with pytest.raises(ValueError, match="residue"):
            decode_counts(Fraction(1, 3), 4, 3)


class TestCounting:
    def test_single_arc(self):
        assert count_simple_paths(SINGLE_ARC, "reduction") == 1
        assert count_simple_paths(SINGLE_ARC, "dfs") == 1

    def test_triangle(self):
        assert count_simple_paths(TRIANGLE, "reduction") == 2
        assert count_simple_paths(TRIANGLE, "dfs") == 2

    def test_disconnected(self):
        d = digraph(2, set())
        assert count_simple_paths(d, "reduction") == 0
        assert count_simple_paths(d, "dfs") == 0
        inst = build_reduction(d)
        assert solve_general(inst.graph, inst.target_arc).value == 0

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown method"):
            count_simple_paths(SINGLE_ARC, "guess")

    def test_enumeration_is_sorted_and_simple(self):
        d = digraph(4, {(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)})
        paths = enumerate_simple_paths(d)
        assert paths == sorted(paths)
        for p in paths:
            assert len(set(p)) == len(p)
            assert p[0] == 1 and p[-1] == 4

    @given(st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_reduction_matches_dfs_per_length(self, seed):
        d = random_digraph(2 + seed % 5, 0.5, seed)
        assert reduction_counts(d) == dfs_counts(d)

    @given(st.integers(0, 10_000))
    @settings(max_examples=20, deadline=None)
    def test_acyclic_digraphs_agree_across_solvers(self, seed):
        d = random_digraph(2 + seed % 5, 0.4, seed)
        inst = build_reduction(d)
        if topological_order(inst.graph).order is None:
            return
        from empower.dag import solve_dag
        assert solve_dag(inst.graph, inst.target_arc) == \
            solve_general(inst.graph, inst.target_arc).value
