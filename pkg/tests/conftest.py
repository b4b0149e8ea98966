"""
Pytest configuration and shared fixtures for the dezagraphs tests.
"""

import networkx as nx
import pytest

from dezagraphs.config import get_settings
from dezagraphs.constructions import theorem1_family
from dezagraphs.graph_core import Graph, cycle_graph
from tests.helpers import from_networkx


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Isolate every test from DEZA_* variables and the cached settings."""
    for key in ("DEZA_MAX_N", "DEZA_WORKERS", "DEZA_SEARCH_NODE_LIMIT", "DEZA_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k33() -> Graph:
    return from_networkx(nx.complete_bipartite_graph(3, 3))


@pytest.fixture
def prism() -> Graph:
    """K3 x K2, the other connected cubic graph on six vertices."""
    return from_networkx(nx.circular_ladder_graph(3))


@pytest.fixture
def family_2_2() -> Graph:
    """The (8,5,4,2) member: 2-clique extension of C4."""
    return theorem1_family(2, 2)


@pytest.fixture
def family_3_2() -> Graph:
    return theorem1_family(3, 2)


@pytest.fixture
def family_2_3() -> Graph:
    return theorem1_family(2, 3)
