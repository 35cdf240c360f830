"""Per-page word co-occurrence graphs and their aggregated feature block.

Graphs are undirected and simple: nodes are unique tokens, an edge joins two
distinct tokens that co-occur inside any sliding window of consecutive
tokens (window 2 is the adjacent-pairs rule). All ratio metrics return 0 on
degenerate graphs so downstream vectors stay finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(slots=True)
class WordGraph:
    nodes: set[str] = field(default_factory=set)
    adjacency: dict[str, set[str]] = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency.values()) // 2

    def degree(self, node: str) -> int:
        return len(self.adjacency.get(node, ()))


@dataclass(frozen=True, slots=True)
class PageGraphMetrics:
    """Per-page scalar metrics feeding the document-level aggregation."""

    node_count: int
    edge_count: int
    density: float
    avg_degree: float
    clustering: float
    degree_centrality_mean: float
    degree_centrality_max: float


@dataclass(frozen=True, slots=True)
class GraphFeatureBlock:
    """Document-level graph block (11 values).

    Counts sum over pages; density, average degree, clustering and the
    per-page mean degree centrality aggregate as (mean, max) over pages;
    ``degree_centrality_peak`` is the largest single-node centrality seen
    on any page.
    """

    node_count_total: int = 0
    edge_count_total: int = 0
    density_mean: float = 0.0
    density_max: float = 0.0
    avg_degree_mean: float = 0.0
    avg_degree_max: float = 0.0
    clustering_mean: float = 0.0
    clustering_max: float = 0.0
    degree_centrality_mean: float = 0.0
    degree_centrality_max: float = 0.0
    degree_centrality_peak: float = 0.0

    def values(self) -> list[float]:
        return [
            self.node_count_total,
            self.edge_count_total,
            self.density_mean,
            self.density_max,
            self.avg_degree_mean,
            self.avg_degree_max,
            self.clustering_mean,
            self.clustering_max,
            self.degree_centrality_mean,
            self.degree_centrality_max,
            self.degree_centrality_peak,
        ]


def build_word_graph(tokens: list[str], window: int = 2) -> WordGraph:
    """Build the co-occurrence graph of *tokens* for a sliding *window*."""
    if window < 2:
        raise ValueError("window must be at least 2")
    graph = WordGraph()
    for token in tokens:
        if token not in graph.nodes:
            graph.nodes.add(token)
            graph.adjacency[token] = set()
    n = len(tokens)
    for i in range(n):
        u = tokens[i]
        for j in range(i + 1, min(i + window, n)):
            v = tokens[j]
            if u != v:
                graph.adjacency[u].add(v)
                graph.adjacency[v].add(u)
    return graph


def average_degree(graph: WordGraph) -> float:
    n = graph.node_count
    if n == 0:
        return 0.0
    return sum(graph.degree(v) for v in graph.nodes) / n


def density(graph: WordGraph) -> float:
    n = graph.node_count
    if n < 2:
        return 0.0
    return 2.0 * graph.edge_count / (n * (n - 1))


def clustering_coefficient(graph: WordGraph) -> float:
    n = graph.node_count
    if n == 0:
        return 0.0
    total = 0.0
    adjacency = graph.adjacency
    for v in graph.nodes:
        neighbors = adjacency[v]
        k = len(neighbors)
        if k < 2:
            continue
        links = 0
        neighbor_list = list(neighbors)
        for i in range(k):
            adj_i = adjacency[neighbor_list[i]]
            for j in range(i + 1, k):
                if neighbor_list[j] in adj_i:
                    links += 1
        total += links / (k * (k - 1) / 2)
    return total / n


def degree_centrality_stats(graph: WordGraph) -> tuple[float, float]:
    n = graph.node_count
    if n < 2:
        return 0.0, 0.0
    centralities = [graph.degree(v) / (n - 1) for v in graph.nodes]
    return sum(centralities) / n, max(centralities)


def page_metrics(graph: WordGraph) -> PageGraphMetrics:
    dc_mean, dc_max = degree_centrality_stats(graph)
    return PageGraphMetrics(
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        density=density(graph),
        avg_degree=average_degree(graph),
        clustering=clustering_coefficient(graph),
        degree_centrality_mean=dc_mean,
        degree_centrality_max=dc_max,
    )


def aggregate_page_graphs(per_page: list[PageGraphMetrics]) -> GraphFeatureBlock:
    if not per_page:
        return GraphFeatureBlock()
    count = len(per_page)
    densities = [m.density for m in per_page]
    avg_degrees = [m.avg_degree for m in per_page]
    clusterings = [m.clustering for m in per_page]
    dc_means = [m.degree_centrality_mean for m in per_page]
    return GraphFeatureBlock(
        node_count_total=sum(m.node_count for m in per_page),
        edge_count_total=sum(m.edge_count for m in per_page),
        density_mean=sum(densities) / count,
        density_max=max(densities),
        avg_degree_mean=sum(avg_degrees) / count,
        avg_degree_max=max(avg_degrees),
        clustering_mean=sum(clusterings) / count,
        clustering_max=max(clusterings),
        degree_centrality_mean=sum(dc_means) / count,
        degree_centrality_max=max(dc_means),
        degree_centrality_peak=max(m.degree_centrality_max for m in per_page),
    )
