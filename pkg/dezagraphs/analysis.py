"""
Deza Analysis
Recognition of Deza, strictly Deza and strongly regular graphs, the alpha/beta
invariants, vertex typing and the rho-partition with its quotient graph.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import ContradictionError, DegenerateParametersError, HypothesisError
from .graph_core import (
    Graph,
    _bits,
    diameter,
    mask_of,
    regular_degree,
    second_neighborhood_mask,
    vertices_of,
)
from .models import DezaParameters, SrgParameters

logger = logging.getLogger(__name__)


class DezaClass(str, Enum):
    NOT_DEZA = "not_deza"
    STRONGLY_REGULAR = "strongly_regular"
    STRICTLY_DEZA = "strictly_deza"
    DEZA_WIDE_DIAMETER = "deza_wide_diameter"


class VertexKind(str, Enum):
    A1 = "A1"
    A2 = "A2"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class VertexProfile:
    v: int
    a_set: FrozenSet[int]
    b_set: FrozenSet[int]

    @property
    def alpha(self) -> int:
        return len(self.a_set)

    @property
    def beta(self) -> int:
        return len(self.b_set)

    @property
    def closed_b(self) -> FrozenSet[int]:
        return self.b_set | {self.v}


@dataclass(frozen=True)
class VertexType:
    """Type of a vertex plus its distinguished partner.

    C: the unique vertex of N(v) in B(v). A1: the y in N(v) missed by every
    member of B(v). A2: the z in N2(v) seen by every member of B(v).
    """

    kind: VertexKind
    star: Optional[int] = None


@dataclass(frozen=True)
class RhoPartition:
    classes: Tuple[FrozenSet[int], ...]
    class_of: Tuple[int, ...]

    @property
    def class_size(self) -> int:
        return len(self.classes[0])

    def as_lists(self) -> List[List[int]]:
        return [sorted(cls) for cls in self.classes]


def _pair_counts(graph: Graph):
    adj = graph.adj
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            yield u, v, (adj[u] & adj[v]).bit_count()


def deza_parameters(graph: Graph) -> Optional[DezaParameters]:
    """(n, k, b, a) when the graph is Deza; b = a if only one count occurs."""
    k = regular_degree(graph)
    if k is None:
        return None
    counts = set()
    for _, _, c in _pair_counts(graph):
        counts.add(c)
        if len(counts) > 2:
            return None
    return DezaParameters(n=graph.n, k=k, b=max(counts), a=min(counts))


def is_strongly_regular(graph: Graph) -> Optional[SrgParameters]:
    k = regular_degree(graph)
    if k is None:
        return None
    lambdas, mus = set(), set()
    for u, v, c in _pair_counts(graph):
        (lambdas if graph.is_adjacent(u, v) else mus).add(c)
        if len(lambdas) > 1 or len(mus) > 1:
            return None
    # complete graphs have no nonadjacent pair; mu is recorded as 0
    return SrgParameters(n=graph.n, k=k, lambda_=lambdas.pop(), mu=mus.pop() if mus else 0)


def is_strictly_deza(graph: Graph) -> bool:
    return (
        deza_parameters(graph) is not None
        and diameter(graph) == 2
        and is_strongly_regular(graph) is None
    )


def deza_class(graph: Graph) -> DezaClass:
    if deza_parameters(graph) is None:
        return DezaClass.NOT_DEZA
    if is_strongly_regular(graph) is not None:
        return DezaClass.STRONGLY_REGULAR
    if diameter(graph) == 2:
        return DezaClass.STRICTLY_DEZA
    return DezaClass.DEZA_WIDE_DIAMETER


def srg_complement_parameters(srg: SrgParameters) -> SrgParameters:
    n, k, lam, mu = srg.as_tuple()
    return SrgParameters(n=n, k=n - k - 1, lambda_=n - 2 * k + mu - 2, mu=n - 2 * k + lam)


def coedge_regular_value(graph: Graph) -> Optional[int]:
    """Common-neighbour count shared by every nonadjacent pair, if regular and constant."""
    if regular_degree(graph) is None:
        return None
    values = {c for u, v, c in _pair_counts(graph) if not graph.is_adjacent(u, v)}
    return values.pop() if len(values) == 1 else None


def beta_by_formula(params: DezaParameters) -> Fraction:
    n, k, b, a = params.as_tuple()
    if b == a:
        raise DegenerateParametersError(f"beta is undefined for b = a = {a}")
    return Fraction(k * (k - 1) - a * (n - 1), b - a)


def vertex_profile(graph: Graph, params: DezaParameters, v: int) -> VertexProfile:
    graph.check_vertex(v)
    if params.b == params.a:
        raise DegenerateParametersError(
            "b = a: every pair has the same count, use is_strongly_regular instead"
        )
    a_set, b_set = set(), set()
    row = graph.adj[v]
    for u in range(graph.n):
        if u == v:
            continue
        c = (row & graph.adj[u]).bit_count()
        if c == params.b:
            b_set.add(u)
        elif c == params.a:
            a_set.add(u)
        else:
            raise HypothesisError(
                f"parameters {params.label} do not describe the graph: "
                f"vertices {v} and {u} have {c} common neighbours"
            )
    return VertexProfile(v=v, a_set=frozenset(a_set), b_set=frozenset(b_set))


def deza_invariants(graph: Graph, params: DezaParameters) -> Tuple[int, int]:
    """(alpha, beta), checking that both are independent of the vertex."""
    profiles = [vertex_profile(graph, params, v) for v in range(graph.n)]
    alphas = {p.alpha for p in profiles}
    betas = {p.beta for p in profiles}
    if len(alphas) != 1 or len(betas) != 1:
        raise ContradictionError(
            f"alpha/beta vary over the vertices: alpha in {sorted(alphas)}, beta in {sorted(betas)}"
        )
    return alphas.pop(), betas.pop()


@lru_cache(maxsize=256)
def _standing_hypothesis_failure(graph: Graph, params: DezaParameters) -> Optional[str]:
    if deza_parameters(graph) != params:
        return f"{params.label} are not the Deza parameters of the graph"
    if not is_strictly_deza(graph):
        return "graph is not strictly Deza"
    if params.k != params.b + 1:
        return f"k = b + 1 fails ({params.k} != {params.b + 1})"
    if beta_by_formula(params) <= 1:
        return "beta > 1 fails"
    return None


def require_standing_hypothesis(graph: Graph, params: DezaParameters) -> None:
    failure = _standing_hypothesis_failure(graph, params)
    if failure is not None:
        raise HypothesisError(failure)


def classify_vertex(graph: Graph, params: DezaParameters, v: int) -> VertexType:
    require_standing_hypothesis(graph, params)
    profile = vertex_profile(graph, params, v)
    nbrs = vertices_of(graph.adj[v])
    meet = profile.b_set & nbrs

    if not meet:
        missed = set()
        gained = set()
        for x in profile.b_set:
            x_nbrs = vertices_of(graph.adj[x])
            missed.add(nbrs - x_nbrs)
            gained.add(x_nbrs - nbrs)
        if len(missed) == 1:
            (only,) = missed
            if len(only) == 1:
                return VertexType(VertexKind.A1, next(iter(only)))
        if len(gained) == 1:
            (only,) = gained
            if len(only) == 1:
                z = next(iter(only))
                if second_neighborhood_mask(graph, v) >> z & 1:
                    return VertexType(VertexKind.A2, z)
        raise ContradictionError(
            f"vertex {v} has B(v) disjoint from N(v) but fits neither the A1 nor the A2 pattern",
            [v],
        )
    if profile.b_set <= nbrs:
        return VertexType(VertexKind.B)
    if len(meet) == 1:
        return VertexType(VertexKind.C, next(iter(meet)))
    raise ContradictionError(
        f"vertex {v}: |B(v) & N(v)| = {len(meet)} with B(v) not inside N(v)", [v]
    )


def classify_all(graph: Graph, params: DezaParameters) -> List[VertexType]:
    return [classify_vertex(graph, params, v) for v in range(graph.n)]


def type_census(types: Sequence[VertexType]) -> Dict[str, int]:
    census: Dict[str, int] = {}
    for entry in types:
        census[entry.kind.value] = census.get(entry.kind.value, 0) + 1
    return dict(sorted(census.items()))


def closed_b_sets(graph: Graph, params: DezaParameters) -> List[FrozenSet[int]]:
    return [vertex_profile(graph, params, v).closed_b for v in range(graph.n)]


def rho_partition(graph: Graph, params: DezaParameters) -> RhoPartition:
    require_standing_hypothesis(graph, params)
    closures = closed_b_sets(graph, params)
    beta = beta_by_formula(params)
    class_of = [-1] * graph.n
    classes: List[FrozenSet[int]] = []
    for v in range(graph.n):
        if class_of[v] != -1:
            continue
        cls = closures[v]
        for u in sorted(cls):
            if closures[u] != cls:
                raise ContradictionError(
                    f"B[{v}] and B[{u}] overlap without being equal", [v, u]
                )
            if class_of[u] != -1:
                raise ContradictionError(f"vertex {u} lies in two B[.]-classes", [u])
            class_of[u] = len(classes)
        if len(cls) != beta + 1:
            raise ContradictionError(
                f"B[{v}] has {len(cls)} vertices, expected beta + 1 = {beta + 1}", sorted(cls)
            )
        classes.append(cls)
    return RhoPartition(classes=tuple(classes), class_of=tuple(class_of))


def quotient_graph(graph: Graph, rho: RhoPartition) -> Graph:
    """Graph on the rho-classes; X ~ Y iff members of X see members of Y."""
    masks = [mask_of(cls) for cls in rho.classes]
    m = len(masks)
    rows = [0] * m
    for x in range(m):
        rep = min(rho.classes[x])
        for y in range(m):
            if x == y:
                continue
            expected = (graph.adj[rep] & masks[y]).bit_count()
            for member in rho.classes[x]:
                if (graph.adj[member] & masks[y]).bit_count() != expected:
                    raise ContradictionError(
                        f"class {x} sees class {y} unevenly: vertices {rep} and {member} differ",
                        [rep, member],
                    )
            if expected:
                rows[x] |= 1 << y
    return Graph(m, tuple(rows))


def twin_partner(graph: Graph, v: int) -> Optional[int]:
    """The vertex u != v with N[u] = N[v], when exactly one exists."""
    closed = graph.adj[v] | 1 << v
    twins = [u for u in _bits(graph.adj[v]) if graph.adj[u] | 1 << u == closed]
    return twins[0] if len(twins) == 1 else None


def twin_classes(graph: Graph) -> List[List[int]]:
    groups: Dict[int, List[int]] = {}
    for v in range(graph.n):
        groups.setdefault(graph.adj[v] | 1 << v, []).append(v)
    return sorted(groups.values())


def complete_multipartite_parts(graph: Graph) -> Optional[List[List[int]]]:
    """Parts of a complete multipartite graph, or None.

    Nonadjacency must be an equivalence relation: vertices with identical
    open neighbourhoods form the parts and are pairwise nonadjacent.
    """
    groups: Dict[int, List[int]] = {}
    for v in range(graph.n):
        groups.setdefault(graph.adj[v], []).append(v)
    parts = sorted(groups.values())
    for part in parts:
        mask = mask_of(part)
        if graph.adj[part[0]] != graph.full_mask & ~mask:
            return None
    return parts
