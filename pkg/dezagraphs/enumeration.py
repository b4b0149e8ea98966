"""
Enumeration
Isomorph-free generation of connected regular graphs and strictly Deza graphs.

Adjacency matrices are built row by row. A matrix survives only if its rows
so far are maximal (in upper-triangle reading order) among the relabelings
that fix the finished rows as a set: later columns stay sorted, and no
transposition of two finished rows gives a larger prefix. Every isomorphism
class keeps its maximal matrix, so deduplicating leaves by canonical form
yields each class exactly once.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .analysis import (
    classify_all,
    deza_invariants,
    deza_parameters,
    is_strictly_deza,
    type_census,
)
from .canonical import CanonicalForm, canonical_form
from .config import HARD_MAX_N, Settings, get_settings
from .errors import GraphArgumentError, PartialResultError, ResourceLimitError
from .graph_core import Graph, diameter, from_graph6
from .models import CensusRecord
from .verifier import verify_theorem1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchUnit:
    """One independent subtree: degree, optional (b, a) bounds, second-row branch."""

    n: int
    k: int
    b: Optional[int] = None
    a: Optional[int] = None
    branch: Optional[int] = None


@dataclass
class UnitResult:
    unit: SearchUnit
    forms: List[CanonicalForm] = field(default_factory=list)
    nodes: int = 0
    exhausted: bool = False


class _Budget(Exception):
    pass


def _choices(runs: List[Tuple[int, int, bool]], need: int) -> Iterator[Tuple[int, ...]]:
    """Edge counts per run, summing to need, largest counts first."""
    capacities = [end - start if open_ else 0 for start, end, open_ in runs]
    suffix = [0] * (len(runs) + 1)
    for index in range(len(runs) - 1, -1, -1):
        suffix[index] = suffix[index + 1] + capacities[index]

    def walk(index: int, left: int) -> Iterator[Tuple[int, ...]]:
        if index == len(runs):
            if left == 0:
                yield ()
            return
        for count in range(min(capacities[index], left), -1, -1):
            if left - count > suffix[index + 1]:
                break
            for tail in walk(index + 1, left - count):
                yield (count,) + tail

    return walk(0, need)


class OrderlySearch:
    def __init__(self, unit: SearchUnit, node_limit: Optional[int] = None):
        self.unit = unit
        self.n = unit.n
        self.k = unit.k
        self.bounds = None if unit.b is None else (unit.b, unit.a)
        self.node_limit = node_limit
        self.adj = [0] * self.n
        self.col = [0] * self.n
        self.nodes = 0
        self.found: Dict[CanonicalForm, None] = {}

    def run(self) -> UnitResult:
        result = UnitResult(unit=self.unit)
        try:
            self._extend(0)
        except _Budget:
            result.exhausted = True
        result.forms = list(self.found)
        result.nodes = self.nodes
        return result

    def _extend(self, r: int) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Budget()
        if r == self.n:
            self._leaf()
            return
        n, k, adj = self.n, self.k, self.adj
        need = k - adj[r].bit_count()
        runs: List[Tuple[int, int, bool]] = []
        j = r + 1
        while j < n:
            start, key = j, self.col[j]
            while j < n and self.col[j] == key:
                j += 1
            runs.append((start, j, adj[start].bit_count() < k))
        saved_col = list(self.col)
        for index, counts in enumerate(_choices(runs, need)):
            if r == 1 and self.unit.branch is not None and index != self.unit.branch:
                continue
            chosen = 0
            for (start, _, _), count in zip(runs, counts):
                for u in range(start, start + count):
                    chosen |= 1 << u
            for u in range(r + 1, n):
                bit = chosen >> u & 1
                self.col[u] = saved_col[u] << 1 | bit
                if bit:
                    adj[u] |= 1 << r
            adj[r] |= chosen
            if self._feasible(r) and self._prefix_is_maximal(r):
                self._extend(r + 1)
            adj[r] &= ~chosen
            for u in range(r + 1, n):
                adj[u] &= ~(1 << r)
            self.col[:] = saved_col

    def _feasible(self, r: int) -> bool:
        n, k, adj = self.n, self.k, self.adj
        room = n - r - 2
        for u in range(r + 1, n):
            if k - adj[u].bit_count() > room:
                return False
        if self.bounds is None:
            return True
        b, a = self.bounds
        row = adj[r]
        for u in range(r):
            count = (adj[u] & row).bit_count()
            if count != a and count != b:
                return False
            if count == 0 and not row >> u & 1:
                return False
        nbrs = [u for u in range(n) if row >> u & 1]
        for x in range(len(nbrs)):
            ax = adj[nbrs[x]]
            for y in range(x + 1, len(nbrs)):
                if (ax & adj[nbrs[y]]).bit_count() > b:
                    return False
        return True

    def _prefix_is_maximal(self, r: int) -> bool:
        for i in range(r):
            order = list(range(r + 1))
            order[i], order[r] = r, i
            if self._compare_prefix(order, r) > 0:
                return False
        return True

    def _compare_prefix(self, order: List[int], r: int) -> int:
        adj, n = self.adj, self.n
        later = list(range(r + 1, n))
        permuted_later: Optional[List[int]] = None
        for p in range(r + 1):
            u = order[p]
            head = [adj[u] >> order[q] & 1 for q in range(p + 1, r + 1)]
            base = [adj[p] >> q & 1 for q in range(p + 1, r + 1)]
            if head != base:
                return 1 if head > base else -1
            if permuted_later is None:
                permuted_later = sorted(
                    later,
                    key=lambda j: [adj[w] >> j & 1 for w in order],
                    reverse=True,
                )
            tail = [adj[u] >> j & 1 for j in permuted_later]
            base_tail = [adj[p] >> j & 1 for j in later]
            if tail != base_tail:
                return 1 if tail > base_tail else -1
        return 0

    def _leaf(self) -> None:
        graph = Graph(self.n, tuple(self.adj))
        if self.bounds is None:
            if diameter(graph) is None:
                return
        elif not is_strictly_deza(graph):
            return
        self.found.setdefault(canonical_form(graph), None)


def run_unit(unit: SearchUnit, node_limit: Optional[int] = None) -> UnitResult:
    return OrderlySearch(unit, node_limit).run()


def _execute(units: Sequence[SearchUnit], workers: int, node_limit: Optional[int]) -> List[UnitResult]:
    if workers <= 1 or len(units) <= 1:
        return [run_unit(unit, node_limit) for unit in units]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_unit, units, repeat(node_limit)))


def _check_ceiling(n: int, settings: Settings) -> None:
    if n < 1:
        raise GraphArgumentError(f"n must be positive, got {n}")
    if n > HARD_MAX_N:
        raise ResourceLimitError(f"n = {n} exceeds the hard limit of {HARD_MAX_N} vertices")
    if n > settings.max_n:
        raise ResourceLimitError(
            f"n = {n} exceeds the configured ceiling {settings.max_n}; "
            f"raise it with --max-n or DEZA_MAX_N (at most {HARD_MAX_N})"
        )


def _collect(results: List[UnitResult]) -> Dict[CanonicalForm, None]:
    forms: Dict[CanonicalForm, None] = {}
    for result in results:
        for form in result.forms:
            forms.setdefault(form, None)
    return forms


def enumerate_regular(
    n: int,
    k: int,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Iterator[Graph]:
    """One canonical representative per connected k-regular graph on n vertices."""
    settings = settings or get_settings()
    _check_ceiling(n, settings)
    if not 0 < k < n:
        raise GraphArgumentError(f"need 0 < k < n, got n={n}, k={k}")
    if n * k % 2:
        logger.warning(f"no {k}-regular graph on {n} vertices: n*k is odd")
        return iter(())
    units = [SearchUnit(n=n, k=k, branch=branch) for branch in range(k)]
    results = _execute(units, workers or settings.workers, settings.search_node_limit)
    forms = sorted(_collect(results))
    if any(result.exhausted for result in results):
        raise PartialResultError(
            f"search node limit {settings.search_node_limit} reached for ({n}, {k})",
            [from_graph6(form.graph6) for form in forms],
        )
    logger.info(f"{len(forms)} connected {k}-regular graphs on {n} vertices")
    return iter([from_graph6(form.graph6) for form in forms])


def feasible_parameter_sets(n: int, degrees: Optional[Sequence[int]] = None) -> List[Tuple[int, int, int]]:
    """(k, b, a) with 0 <= a < b <= k, nk even and an integral beta in [1, n-2]."""
    triples = []
    for k in degrees if degrees is not None else range(2, n - 1):
        if k < 2 or k > n - 2 or n * k % 2:
            continue
        for b in range(1, k + 1):
            for a in range(b):
                numerator = k * (k - 1) - a * (n - 1)
                if numerator % (b - a):
                    continue
                if 1 <= numerator // (b - a) <= n - 2:
                    triples.append((k, b, a))
    return triples


def census_record(graph: Graph, form: Optional[CanonicalForm] = None) -> CensusRecord:
    form = form or canonical_form(graph)
    params = deza_parameters(graph)
    alpha, beta = deza_invariants(graph, params)
    types = None
    if params.k == params.b + 1 and beta > 1:
        types = type_census(classify_all(graph, params))
    verdict = verify_theorem1(graph)
    return CensusRecord(
        graph6=form.graph6,
        parameters=params,
        alpha=alpha,
        beta=beta,
        vertex_types=types,
        theorem1=verdict.holds,
        theorem1_condition=None if verdict.holds else verdict.counterexample.condition,
    )


def enumerate_strictly_deza(
    n: int,
    degrees: Optional[Sequence[int]] = None,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> List[CensusRecord]:
    settings = settings or get_settings()
    _check_ceiling(n, settings)
    triples = feasible_parameter_sets(n, degrees)
    units = [
        SearchUnit(n=n, k=k, b=b, a=a, branch=branch)
        for k, b, a in triples
        for branch in range(k)
    ]
    logger.info(f"n={n}: {len(triples)} feasible (k, b, a) triples, {len(units)} work units")
    results = _execute(units, workers or settings.workers, settings.search_node_limit)
    forms = _collect(results)
    records = []
    for form in forms:
        graph = from_graph6(form.graph6)
        records.append((graph.degree(0), form, census_record(graph, form)))
    records.sort(key=lambda item: (item[0], item[1]))
    census = [record for _, _, record in records]
    if any(result.exhausted for result in results):
        raise PartialResultError(
            f"search node limit {settings.search_node_limit} reached at n={n}; "
            f"{len(census)} records found before stopping",
            census,
        )
    logger.info(f"n={n}: {len(census)} strictly Deza graphs")
    return census


def naive_strictly_deza(n: int) -> List[CanonicalForm]:
    """Brute force over every labeled graph on n vertices; meant for n <= 7."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    forms: Dict[CanonicalForm, None] = {}
    for mask in range(1 << len(pairs)):
        if mask.bit_count() * 2 % n:
            continue
        rows = [0] * n
        for index, (i, j) in enumerate(pairs):
            if mask >> index & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        graph = Graph(n, tuple(rows))
        if is_strictly_deza(graph):
            forms.setdefault(canonical_form(graph), None)
    return sorted(forms)


def summarize(records: Sequence[CensusRecord]) -> Dict[str, int]:
    counts: Dict[Tuple[int, ...], int] = {}
    for record in records:
        key = record.parameters.as_tuple()
        counts[key] = counts.get(key, 0) + 1
    return {"({},{},{},{})".format(*key): counts[key] for key in sorted(counts)}


def write_census(records: Sequence[CensusRecord], jsonl_path: Path, graph6_path: Path) -> None:
    jsonl_path = Path(jsonl_path)
    graph6_path = Path(graph6_path)
    with open(jsonl_path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(record.model_dump_json() + "\n")
    with open(graph6_path, "w", encoding="ascii", newline="\n") as handle:
        for record in records:
            handle.write(record.graph6 + "\n")
    logger.info(f"wrote {len(records)} records to {jsonl_path} and {graph6_path}")
