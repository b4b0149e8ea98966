"""
Shared helpers for the dezagraphs tests: networkx conversion and hypothesis strategies.
"""

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dezagraphs.graph_core import Graph

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


def from_networkx(g: nx.Graph) -> Graph:
    """Convert a networkx graph, numbering vertices in node order."""
    index = {node: i for i, node in enumerate(g.nodes())}
    return Graph.from_edges(g.number_of_nodes(), [(index[u], index[v]) for u, v in g.edges()])


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])

