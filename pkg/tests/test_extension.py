import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graft.errors import BadWitness, DegreeMismatch, InfeasibleTrivial, ParityViolation, WrongVertexCount
from graft.extension import (
    ExtensionProblem,
    build_connection_plan,
    edit_cost,
    optimal_extension,
    rt_size,
    trivial_extension,
    validate_extension,
)
from graft.graph import Graph, complete_graph
from graft.subgraph import DegreeBoundedSubgraph, find_rt_subgraph

from .helpers import graphs

SINGLE = Graph(2, [(1, 2)])
H1 = Graph(3, [(1, 3), (2, 3)])
H2 = Graph(4, [(1, 3), (2, 4)])
H3 = Graph(4, [(1, 2), (3, 4)])


def w(*edges, p):
    return DegreeBoundedSubgraph(frozenset(edges), p)


class TestValidate:
    def test_h1(self):
        ext = validate_extension(SINGLE, H1, 1, 2)
        assert ext.removed == {(1, 2)}
        assert ext.added == {(1, 3), (2, 3)}
        assert edit_cost(SINGLE, ext) == ext.cost == 3

    def test_h3_trivial(self):
        ext = validate_extension(SINGLE, H3, 2, 1)
        assert not ext.removed and not ext.added and not ext.cross_edges
        assert ext.is_trivial
        assert edit_cost(SINGLE, ext) == 0

    def test_h2(self):
        ext = validate_extension(SINGLE, H2, 2, 1)
        assert ext.removed == {(1, 2)}
        assert ext.added == {(1, 3), (2, 4)}
        assert ext.cross_edges == {(1, 3), (2, 4)}
        assert edit_cost(SINGLE, ext) == 3

    def test_wrong_vertex_count(self):
        with pytest.raises(WrongVertexCount):
            validate_extension(SINGLE, H1, 2, 1)

    def test_degree_mismatch_names_vertex(self):
        with pytest.raises(DegreeMismatch) as info:
            validate_extension(SINGLE, Graph(3, [(1, 3)]), 1, 2)
        assert info.value.vertex == 2

    def test_new_vertex_degree_checked(self):
        with pytest.raises(DegreeMismatch) as info:
            validate_extension(SINGLE, H1, 1, 1)
        assert info.value.vertex == 3


class TestProblem:
    def test_parity(self):
        with pytest.raises(ParityViolation):
            ExtensionProblem(SINGLE, 3, 1)

    @pytest.mark.parametrize("r", range(1, 12))
    def test_t_is_integral(self, r):
        for k in range(1, 15):
            if (r * k) % 2 == 0:
                assert (r * (k - r + 1)) % 2 == 0
                assert rt_size(r, k) * 2 == r * (k - r + 1)


class TestTrivial:
    def test_single_edge(self):
        ext = trivial_extension(ExtensionProblem(SINGLE, 2, 1))
        assert ext.h == H3 and ext.cost == 0

    def test_empty_graph_four_cycle(self):
        ext = trivial_extension(ExtensionProblem(Graph(3), 4, 2))
        h = ext.h
        assert h.n == 7 and ext.cost == 0
        assert all(h.degree(v) == 0 for v in (1, 2, 3))
        assert all(h.degree(v) == 2 for v in (4, 5, 6, 7))
        assert len(h.edges) == 4

    def test_infeasible(self):
        with pytest.raises(InfeasibleTrivial):
            trivial_extension(ExtensionProblem(complete_graph(3), 1, 2))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8), st.integers(2, 9), st.integers(1, 8))
    def test_always_free(self, g, r, k):
        if k > r - 1 or (r * k) % 2:
            return
        ext = trivial_extension(ExtensionProblem(g, r, k))
        assert ext.cost == 0 and not ext.cross_edges


class TestConnectionPlan:
    def test_single_new_vertex(self):
        plan = build_connection_plan(w((1, 2), p=1), 1, 2, 2)
        assert plan.v_vector == (1, 2) and plan.assignment == (3, 3)

    def test_round_robin(self):
        plan = build_connection_plan(w((1, 2), p=2), 2, 2, 2)
        assert plan.v_vector == (1, 2) and plan.assignment == (3, 4)

    def test_two_disjoint_edges(self):
        plan = build_connection_plan(w((1, 2), (3, 4), p=1), 1, 4, 4)
        assert plan.v_vector == (1, 2, 3, 4) and set(plan.assignment) == {5}

    def test_bad_witness(self):
        with pytest.raises(BadWitness):
            build_connection_plan(w((1, 2), (1, 3), p=1), 1, 4, 4)
        with pytest.raises(BadWitness):
            build_connection_plan(w((1, 2), p=1), 1, 4, 4)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=9, max_edges=20), st.sampled_from([(1, 2), (1, 4), (2, 2), (2, 3), (3, 4), (2, 5), (4, 4), (4, 5)]))
    def test_invariants(self, g, rk):
        r, k = rk
        t = rt_size(r, k)
        sub = find_rt_subgraph(g, r, t)
        if not sub:
            return
        plan = build_connection_plan(sub, r, k, g.n)
        deg = sub.degrees()
        assert len(plan.v_vector) == 2 * t
        for v, d in deg.items():
            idx = [i for i, z in enumerate(plan.v_vector) if z == v]
            assert len(idx) == d <= r and idx == list(range(idx[0], idx[0] + d))
        for hub in range(g.n + 1, g.n + r + 1):
            assert plan.assignment.count(hub) == k - r + 1
        pairs = plan.cross_edges()
        assert len(set(pairs)) == len(pairs)


class TestOptimal:
    def test_single_edge(self):
        ext = optimal_extension(ExtensionProblem(SINGLE, 1, 2), w((1, 2), p=1))
        assert ext.h == H1 and ext.cost == 3

    def test_c4(self):
        c4 = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        ext = optimal_extension(ExtensionProblem(c4, 2, 2), w((1, 2), p=2))
        assert ext.h.edges == {(2, 3), (3, 4), (1, 4), (5, 6), (1, 5), (2, 6)}
        assert all(ext.h.degree(v) == 2 for v in ext.h.vertices)
        assert edit_cost(c4, ext) == 3

    def test_path(self):
        p3 = Graph(3, [(1, 2), (2, 3)])
        ext = optimal_extension(ExtensionProblem(p3, 1, 2), w((1, 2), p=1))
        assert ext.h.edges == {(2, 3), (1, 4), (2, 4)}
        assert tuple(ext.h.degree(v) for v in ext.h.vertices) == (1, 2, 1, 2)
        assert edit_cost(p3, ext) == 3

    def test_witness_must_be_in_graph(self):
        with pytest.raises(BadWitness):
            optimal_extension(ExtensionProblem(Graph(3, [(1, 2)]), 1, 2), w((2, 3), p=1))

    def test_needs_k_at_least_r(self):
        with pytest.raises(BadWitness):
            optimal_extension(ExtensionProblem(complete_graph(4), 4, 2), w((1, 2), p=4))

    def test_random_cost_identities(self):
        rng = random.Random(11)
        built = 0
        for _ in range(150):
            n = rng.randint(2, 20)
            g = Graph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.3))
            for r, k in [(1, 2), (2, 3), (3, 4), (2, 6), (4, 5)]:
                t = rt_size(r, k)
                sub = find_rt_subgraph(g, r, t)
                if not sub:
                    continue
                ext = optimal_extension(ExtensionProblem(g, r, k), sub)
                assert len(ext.removed) == t and len(ext.added) == 2 * t
                assert edit_cost(g, ext) == 3 * t
                assert all(ext.h.degree(v) == g.degree(v) for v in g.vertices)
                assert all(ext.h.degree(v) == k for v in range(n + 1, n + r + 1))
                built += 1
        assert built > 100
