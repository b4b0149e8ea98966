"""
Constructions
Complete multipartite graphs, extensions (compositions) of graphs, the
2-clique extensions of K_{t,...,t}, and construction from a parameter
quadruple with a feasibility report.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import GraphArgumentError, HypothesisError, InfeasibleParametersError
from .graph_core import Graph, complete_graph, empty_graph, mask_of
from .models import DezaParameters, FamilyIndex, FeasibilityReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultipartiteShape:
    part_sizes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(self.part_sizes))
        if not self.part_sizes:
            raise GraphArgumentError("a multipartite shape needs at least one part")
        if any(size < 1 for size in self.part_sizes):
            raise GraphArgumentError(f"part sizes must be positive, got {list(self.part_sizes)}")

    @classmethod
    def uniform(cls, s: int, t: int) -> "MultipartiteShape":
        return cls((t,) * s)

    @property
    def order(self) -> int:
        return sum(self.part_sizes)

    def parts(self) -> List[List[int]]:
        out, start = [], 0
        for size in self.part_sizes:
            out.append(list(range(start, start + size)))
            start += size
        return out


def complete_multipartite(shape: MultipartiteShape) -> Graph:
    n = shape.order
    full = (1 << n) - 1
    rows = [0] * n
    for part in shape.parts():
        mask = mask_of(part)
        for v in part:
            rows[v] = full & ~mask
    return Graph(n, tuple(rows))


def extension(base: Graph, fibre: Graph) -> Graph:
    """Composition: (v, i) ~ (u, j) iff v ~ u, or v = u and i ~ j in the fibre.

    Vertex (v, i) gets index v * fibre.n + i.
    """
    m = fibre.n
    block = (1 << m) - 1
    rows = []
    for v in range(base.n):
        outer = 0
        for u in range(base.n):
            if base.adj[v] >> u & 1:
                outer |= block << (u * m)
        for i in range(m):
            rows.append(outer | fibre.adj[i] << (v * m))
    return Graph(base.n * m, tuple(rows))


def _check_multiplicity(m: int) -> None:
    if m < 1:
        raise GraphArgumentError(f"extension multiplicity must be at least 1, got {m}")


def clique_extension(base: Graph, m: int) -> Graph:
    _check_multiplicity(m)
    return extension(base, complete_graph(m))


def coclique_extension(base: Graph, m: int) -> Graph:
    _check_multiplicity(m)
    return extension(base, empty_graph(m))


def family_parameters(s: int, t: int) -> DezaParameters:
    n = 2 * s * t
    k = 2 * (s - 1) * t + 1
    return DezaParameters(n=n, k=k, b=k - 1, a=2 * k - n)


def theorem1_family(s: int, t: int) -> Graph:
    """2-clique extension of the complete multipartite graph with s parts of size t."""
    if s < 2:
        raise HypothesisError(f"s = {s}: at least two parts are needed for a connected graph of diameter 2")
    if t < 2:
        raise HypothesisError(f"t = {t}: parts of size 1 give beta = 2t - 1 = 1, but beta > 1 is required")
    return clique_extension(complete_multipartite(MultipartiteShape.uniform(s, t)), 2)


def _report(params: DezaParameters, violated: str, reason: str, beta: Optional[Fraction] = None,
            applicable: bool = True) -> FeasibilityReport:
    return FeasibilityReport(
        parameters=params,
        feasible=False,
        applicable=applicable,
        violated=violated,
        reason=reason,
        beta=None if beta is None else str(beta),
    )


def check_feasibility(params: DezaParameters) -> FeasibilityReport:
    """Walk the hypotheses, then the identities, and report the first failure."""
    n, k, b, a = params.as_tuple()
    if b != k - 1:
        return _report(params, "b = k-1", f"b = {b} but k - 1 = {k - 1}", applicable=False)
    if b == a:
        return _report(params, "b > a", f"b = a = {a}: beta is undefined", applicable=False)
    beta = Fraction(k * (k - 1) - a * (n - 1), b - a)
    if beta <= 1:
        return _report(params, "beta > 1", f"beta = {beta} is not greater than 1", beta, applicable=False)
    if a == k - 2:
        return _report(
            params,
            "a != k-2",
            "a = k-2 impossible: no strictly Deza graph has parameters (n, k, k-1, k-2)",
            beta,
        )
    if a != 2 * k - n:
        return _report(params, "a = 2k-n", f"a = 2k - n fails ({a} != {2 * k - n})", beta)
    if beta.denominator != 1:
        return _report(params, "beta integral", f"beta = {beta} is not an integer", beta)
    width = n - k + 1
    if width % 2:
        return _report(params, "n-k+1 even", f"n - k + 1 = {width} is odd", beta)
    t = width // 2
    if t < 2:
        return _report(params, "(n-k+1)/2 >= 2", f"part size (n - k + 1)/2 = {t} is below 2", beta)
    if n % width:
        return _report(params, "(n-k+1) | n", f"n - k + 1 = {width} does not divide n = {n}", beta)
    s = n // width
    if s < 2:
        return _report(params, "s >= 2", f"only {s} part", beta)
    return FeasibilityReport(
        parameters=params,
        feasible=True,
        reason="feasible",
        beta=str(beta),
        family=FamilyIndex(s=s, t=t),
    )


def construct_from_parameters(params: DezaParameters) -> Graph:
    report = check_feasibility(params)
    if not report.feasible:
        logger.info(f"parameters {params.label} rejected: {report.reason}")
        raise InfeasibleParametersError(report)
    return theorem1_family(report.family.s, report.family.t)
