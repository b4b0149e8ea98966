"""
Canonical Labeling
Canonical forms come from nauty's canonical labeling (pynauty). The form keeps
the upper-triangle adjacency code of the relabeled graph so that forms sort
deterministically and compare equal exactly for isomorphic graphs.
"""

from dataclasses import dataclass, field
from typing import List, Sequence

import pynauty

from .graph_core import Graph, to_graph6, vertices_of


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Upper-triangle adjacency code of the canonically relabeled graph.

    Bits are read in graph6 order (x(0,1), x(0,2), x(1,2), ...), the first
    pair being the most significant.
    """

    n: int
    code: int
    graph6: str = field(compare=False)

    def __str__(self) -> str:
        return self.graph6


def to_nauty(graph: Graph) -> pynauty.Graph:
    adjacency = {v: sorted(vertices_of(row)) for v, row in enumerate(graph.adj) if row}
    return pynauty.Graph(graph.n, directed=False, adjacency_dict=adjacency)


def _code(graph: Graph, order: Sequence[int]) -> int:
    adj = graph.adj
    code = 0
    for j in range(1, graph.n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_labeling(graph: Graph) -> List[int]:
    """order[p] is the vertex placed at position p of the canonical graph."""
    return list(pynauty.canon_label(to_nauty(graph)))


def _relabel(graph: Graph, order: Sequence[int]) -> Graph:
    mapping = [0] * graph.n
    for p, v in enumerate(order):
        mapping[v] = p
    return graph.relabeled(mapping)


def canonical_graph(graph: Graph) -> Graph:
    return _relabel(graph, canonical_labeling(graph))


def canonical_form(graph: Graph) -> CanonicalForm:
    order = canonical_labeling(graph)
    relabeled = _relabel(graph, order)
    return CanonicalForm(n=graph.n, code=_code(graph, order), graph6=to_graph6(relabeled).decode("ascii"))
