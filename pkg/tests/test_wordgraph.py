"""Graph construction and metric tests against a brute-force oracle."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdffeatures.wordgraph import (
    GraphFeatureBlock,
    WordGraph,
    aggregate_page_graphs,
    average_degree,
    build_word_graph,
    clustering_coefficient,
    degree_centrality_stats,
    density,
    page_metrics,
)


def graph_from_edges(nodes, edges):
    g = WordGraph()
    for v in nodes:
        g.nodes.add(v)
        g.adjacency[v] = set()
    for u, v in edges:
        g.adjacency[u].add(v)
        g.adjacency[v].add(u)
    return g


def oracle_metrics(nodes, edges):
    """Independent brute-force computation (triple enumeration)."""
    edge_set = {frozenset(e) for e in edges}
    n = len(nodes)
    deg = {v: sum(1 for e in edge_set if v in e) for v in nodes}
    avg_deg = sum(deg.values()) / n if n else 0.0
    dens = 2 * len(edge_set) / (n * (n - 1)) if n > 1 else 0.0
    total = 0.0
    for v in nodes:
        neighbors = [u for u in nodes if u != v and frozenset((u, v)) in edge_set]
        k = len(neighbors)
        if k < 2:
            continue
        triangles = sum(
            1 for a, b in itertools.combinations(neighbors, 2) if frozenset((a, b)) in edge_set
        )
        total += triangles / (k * (k - 1) / 2)
    clustering = total / n if n else 0.0
    if n > 1:
        centralities = [deg[v] / (n - 1) for v in nodes]
        dc = (sum(centralities) / n, max(centralities))
    else:
        dc = (0.0, 0.0)
    return avg_deg, dens, clustering, dc


TRIANGLE = graph_from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
PATH4 = graph_from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
STAR4 = graph_from_edges("axyz", [("a", "x"), ("a", "y"), ("a", "z")])
K4 = graph_from_edges("abcd", [e for e in itertools.combinations("abcd", 2)])
SINGLE = graph_from_edges("a", [])
EMPTY = WordGraph()


class TestBuildWordGraph:
    def test_duplicate_tokens_collapse(self):
        g = build_word_graph(["a", "b", "a"], window=2)
        assert g.nodes == {"a", "b"}
        assert g.adjacency == {"a": {"b"}, "b": {"a"}}

    def test_empty_tokens(self):
        g = build_word_graph([], window=2)
        assert g.nodes == set() and g.edge_count == 0

    def test_window_three_by_hand(self):
        # windows (a,b,c) and (b,c,a) -> edges ab, ac, bc
        g = build_word_graph(["a", "b", "c", "a"], window=3)
        edges = {frozenset((u, v)) for u in g.adjacency for v in g.adjacency[u]}
        assert edges == {frozenset("ab"), frozenset("ac"), frozenset("bc")}

    def test_no_self_loops(self):
        g = build_word_graph(["x", "x", "x"], window=3)
        assert g.adjacency["x"] == set()

    def test_window_below_two_rejected(self):
        with pytest.raises(ValueError):
            build_word_graph(["a"], window=1)


class TestMetricExamples:
    def test_average_degree_triangle(self):
        assert average_degree(TRIANGLE) == 2.0

    def test_average_degree_single_node(self):
        assert average_degree(SINGLE) == 0.0

    def test_average_degree_path(self):
        assert average_degree(PATH4) == pytest.approx(1.5)

    def test_density_complete3(self):
        assert density(TRIANGLE) == 1.0

    def test_density_path4(self):
        assert density(PATH4) == pytest.approx(0.5)

    def test_density_degenerate(self):
        assert density(SINGLE) == 0.0
        assert density(EMPTY) == 0.0

    def test_clustering_triangle(self):
        assert clustering_coefficient(TRIANGLE) == 1.0

    def test_clustering_star(self):
        assert clustering_coefficient(STAR4) == 0.0

    def test_clustering_triangle_with_pendant(self):
        # locals {1, 1, 1/3, 0} -> mean 7/12
        g = graph_from_edges("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
        assert clustering_coefficient(g) == pytest.approx(7 / 12, abs=1e-9)

    def test_degree_centrality_complete4(self):
        assert degree_centrality_stats(K4) == (pytest.approx(1.0), pytest.approx(1.0))

    def test_degree_centrality_star(self):
        mean, peak = degree_centrality_stats(STAR4)
        assert mean == pytest.approx(0.5)
        assert peak == pytest.approx(1.0)

    def test_degree_centrality_empty(self):
        assert degree_centrality_stats(EMPTY) == (0.0, 0.0)


class TestOracleEquivalence:
    def test_random_graphs_match_bruteforce(self):
        rng = random.Random(1234)
        for _ in range(300):
            n = rng.randrange(0, 30)
            nodes = [f"n{i}" for i in range(n)]
            edges = [
                (u, v)
                for u, v in itertools.combinations(nodes, 2)
                if rng.random() < rng.choice((0.05, 0.2, 0.5))
            ]
            g = graph_from_edges(nodes, edges)
            exp_avg, exp_den, exp_clu, (exp_dcm, exp_dcx) = oracle_metrics(nodes, edges)
            assert average_degree(g) == pytest.approx(exp_avg, abs=1e-9)
            assert density(g) == pytest.approx(exp_den, abs=1e-9)
            assert clustering_coefficient(g) == pytest.approx(exp_clu, abs=1e-9)
            got_dcm, got_dcx = degree_centrality_stats(g)
            assert got_dcm == pytest.approx(exp_dcm, abs=1e-9)
            assert got_dcx == pytest.approx(exp_dcx, abs=1e-9)


@st.composite
def token_lists(draw):
    alphabet = st.sampled_from(["a", "b", "c", "d", "e", "f", "g"])
    return draw(st.lists(alphabet, max_size=40))


class TestProperties:
    @given(token_lists(), st.sampled_from([2, 3]))
    @settings(max_examples=150)
    def test_relabel_symmetry(self, tokens, window):
        g = build_word_graph(tokens, window)
        mapping = {c: c.upper() * 2 for c in "abcdefg"}
        g2 = build_word_graph([mapping[t] for t in tokens], window)
        assert average_degree(g) == pytest.approx(average_degree(g2))
        assert density(g) == pytest.approx(density(g2))
        assert clustering_coefficient(g) == pytest.approx(clustering_coefficient(g2))
        assert degree_centrality_stats(g) == pytest.approx(degree_centrality_stats(g2))

    @given(token_lists(), st.sampled_from([2, 3]))
    @settings(max_examples=150)
    def test_metrics_finite_and_bounded(self, tokens, window):
        import math

        g = build_word_graph(tokens, window)
        values = [
            average_degree(g),
            density(g),
            clustering_coefficient(g),
            *degree_centrality_stats(g),
        ]
        assert all(math.isfinite(v) for v in values)
        assert 0.0 <= density(g) <= 1.0
        assert 0.0 <= clustering_coefficient(g) <= 1.0

    @given(token_lists())
    @settings(max_examples=100)
    def test_adding_edge_increases_density(self, tokens):
        g = build_word_graph(tokens, 2)
        nodes = sorted(g.nodes)
        missing = [
            (u, v)
            for u, v in itertools.combinations(nodes, 2)
            if v not in g.adjacency[u]
        ]
        if not missing:
            return
        before = density(g)
        u, v = missing[0]
        g.adjacency[u].add(v)
        g.adjacency[v].add(u)
        assert density(g) > before

    @given(token_lists(), st.sampled_from([2, 3]))
    @settings(max_examples=100)
    def test_undirected_simple_invariants(self, tokens, window):
        g = build_word_graph(tokens, window)
        for u, neighbors in g.adjacency.items():
            assert u in g.nodes
            for v in neighbors:
                assert v in g.nodes
                assert u in g.adjacency[v]
                assert v != u


class TestAggregation:
    def test_single_page_mean_equals_max(self):
        m = page_metrics(TRIANGLE)
        block = aggregate_page_graphs([m])
        assert block.node_count_total == 3
        assert block.edge_count_total == 3
        assert block.clustering_mean == block.clustering_max == 1.0
        assert block.avg_degree_mean == block.avg_degree_max == 2.0
        assert block.density_mean == block.density_max == 1.0

    def test_two_page_mean_max(self):
        block = aggregate_page_graphs([page_metrics(STAR4), page_metrics(TRIANGLE)])
        assert block.clustering_mean == pytest.approx(0.5)
        assert block.clustering_max == 1.0
        assert block.node_count_total == 7
        assert block.degree_centrality_peak == 1.0

    def test_zero_pages_all_zero(self):
        block = aggregate_page_graphs([])
        assert block == GraphFeatureBlock()
        assert all(v == 0 for v in block.values())

    def test_all_empty_pages_all_zero(self):
        block = aggregate_page_graphs([page_metrics(WordGraph()) for _ in range(3)])
        assert all(v == 0 for v in block.values())
