"""
Graph Core
Immutable bitmask graphs, graph6 serialization and the neighbourhood kernel
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from .errors import Graph6ParseError, GraphArgumentError

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is the neighbour bitmask of v: bit u is set iff u ~ v.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.adj, tuple):
            object.__setattr__(self, "adj", tuple(self.adj))
        if self.n < 1:
            raise GraphArgumentError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphArgumentError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphArgumentError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphArgumentError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphArgumentError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphArgumentError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabeled(self, mapping: Sequence[int]) -> "Graph":
        """Vertex v of self becomes vertex mapping[v] of the result."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphArgumentError("relabeling must be a permutation of the vertex set")
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << mapping[u]
            rows[mapping[v]] = row
        return Graph(self.n, tuple(rows))

    def is_coclique(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in _bits(mask))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def vertices_of(mask: int) -> FrozenSet[int]:
    return frozenset(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# Builders

def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


# Neighbourhood kernel

def common_neighbors(graph: Graph, u: int, v: int) -> int:
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u == v:
        raise GraphArgumentError(f"common_neighbors needs two distinct vertices, got {u} twice")
    return (graph.adj[u] & graph.adj[v]).bit_count()


def neighborhood(graph: Graph, v: int) -> FrozenSet[int]:
    graph.check_vertex(v)
    return vertices_of(graph.adj[v])


def closed_neighborhood(graph: Graph, v: int) -> FrozenSet[int]:
    graph.check_vertex(v)
    return vertices_of(graph.adj[v] | 1 << v)


def second_neighborhood_mask(graph: Graph, v: int) -> int:
    reach = 0
    for u in _bits(graph.adj[v]):
        reach |= graph.adj[u]
    return reach & ~(graph.adj[v] | 1 << v)


def second_neighborhood(graph: Graph, v: int) -> FrozenSet[int]:
    graph.check_vertex(v)
    return vertices_of(second_neighborhood_mask(graph, v))


def regular_degree(graph: Graph) -> Optional[int]:
    """k if the graph is k-regular with at least one edge, else None."""
    degrees = set(graph.degrees())
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    return k if k > 0 else None


def eccentricity(graph: Graph, v: int) -> Optional[int]:
    reached = 1 << v
    frontier = reached
    depth = 0
    while reached != graph.full_mask:
        step = 0
        for u in _bits(frontier):
            step |= graph.adj[u]
        frontier = step & ~reached
        if not frontier:
            return None
        reached |= frontier
        depth += 1
    return depth


def diameter(graph: Graph) -> Optional[int]:
    """Largest eccentricity, or None for a disconnected graph."""
    best = 0
    for v in range(graph.n):
        ecc = eccentricity(graph, v)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def complement(graph: Graph) -> Graph:
    full = graph.full_mask
    return Graph(graph.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(graph.adj)))


# graph6

def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])
    raise GraphArgumentError(f"graph6 cannot encode n={n}")


def to_graph6(graph: Graph) -> bytes:
    """Standard graph6 record without header or newline."""
    out = bytearray(_encode_size(graph.n))
    value = 0
    filled = 0
    for j in range(1, graph.n):
        column = graph.adj[j]
        for i in range(j):
            value = value << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(value + 63)
                value = 0
                filled = 0
    if filled:
        out.append((value << (6 - filled)) + 63)
    return bytes(out)


def _decode_size(data: bytes) -> Tuple[int, int]:
    if not data:
        raise Graph6ParseError("empty record", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6ParseError("truncated size prefix", len(data))
    n = 0
    for offset in range(start, start + width):
        n = n << 6 | (data[offset] - 63)
    return n, start + width


def from_graph6(record: Union[bytes, str]) -> Graph:
    data = record.encode("utf-8") if isinstance(record, str) else bytes(record)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside 63..126", base + offset)
    n, body_start = _decode_size(data)
    if n < 1:
        raise Graph6ParseError("graph with no vertices", base)
    pairs = n * (n - 1) // 2
    body = data[body_start:]
    expected = (pairs + 5) // 6
    if len(body) != expected:
        raise Graph6ParseError(
            f"expected {expected} body bytes for n={n}, found {len(body)}",
            base + body_start + min(len(body), expected),
        )
    rows = [0] * n
    i, j = 0, 1
    for index, byte in enumerate(body):
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            position = index * 6 + (5 - shift)
            if position >= pairs:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", base + body_start + index)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_graph6_lines(text: Union[str, bytes]) -> Iterator[Tuple[int, Graph]]:
    """Yield (line number, graph) for every record; blank lines are errors."""
    raw = text.encode("utf-8") if isinstance(text, str) else text
    lines = raw.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    for number, line in enumerate(lines, start=1):
        try:
            yield number, from_graph6(line)
        except Graph6ParseError as error:
            raise error.at_line(number) from None


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(graph).decode("ascii") + "\n" for graph in graphs)
