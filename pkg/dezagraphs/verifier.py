"""
Structure Verifier
Verdicts for the classification of strictly Deza graphs with k = b + 1, the
parameter recognition statement, and per-graph checks of the structural lemmas.
Failures are returned as data; nothing here raises on a negative instance.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from .analysis import (
    VertexKind,
    VertexProfile,
    VertexType,
    beta_by_formula,
    classify_all,
    coedge_regular_value,
    deza_invariants,
    deza_parameters,
    is_strongly_regular,
    quotient_graph,
    rho_partition,
    twin_partner,
    vertex_profile,
)
from .constructions import check_feasibility, theorem1_family
from .errors import ContradictionError, DezaError, HypothesisError
from .graph_core import Graph, complement, diameter, mask_of, vertices_of
from .models import (
    Counterexample,
    DezaParameters,
    FamilyIndex,
    LemmaCheck,
    LemmaReport,
    Theorem1Witness,
    Theorem2Verdict,
    TheoremVerdict,
)

logger = logging.getLogger(__name__)


def strictly_deza_failure(graph: Graph) -> Optional[str]:
    """Why the graph is not strictly Deza, or None when it is."""
    if deza_parameters(graph) is None:
        return "not a Deza graph"
    d = diameter(graph)
    if d is None:
        return "disconnected"
    if d != 2:
        return f"diameter {d}"
    if is_strongly_regular(graph) is not None:
        return "strongly regular"
    return None


def _precondition_failure(graph: Graph) -> Tuple[Optional[str], Optional[str], Optional[DezaParameters]]:
    """(condition, reason, params) of the first failing standing hypothesis."""
    reason = strictly_deza_failure(graph)
    if reason is not None:
        return "strictly Deza", reason, None
    params = deza_parameters(graph)
    if params.k != params.b + 1:
        return "k = b+1", f"k = {params.k} but b + 1 = {params.b + 1}", params
    beta = beta_by_formula(params)
    if beta <= 1:
        return "beta > 1", f"beta = {beta}", params
    return None, None, params


def _fail(condition: str, reason: str, vertices: Optional[List[int]] = None,
          applicable: bool = True) -> TheoremVerdict:
    return TheoremVerdict(
        holds=False,
        applicable=applicable,
        counterexample=Counterexample(condition=condition, reason=reason, vertices=vertices or []),
    )


def verify_theorem1(graph: Graph) -> TheoremVerdict:
    """Recover the 2-clique extension structure from twins and rho-classes."""
    condition, reason, params = _precondition_failure(graph)
    if condition == "strictly Deza":
        return _fail(condition, reason, applicable=False)
    beta_ok = params.b != params.a and beta_by_formula(params) > 1
    if condition is not None:
        return _fail(condition, reason, applicable=beta_ok)
    try:
        return _recover_structure(graph, params)
    except (ContradictionError, HypothesisError) as exc:
        logger.warning(f"structure recovery failed on {graph}: {exc}")
        return _fail("structure", str(exc), getattr(exc, "vertices", []))


def _recover_structure(graph: Graph, params: DezaParameters) -> TheoremVerdict:
    n, k = params.n, params.k
    types = classify_all(graph, params)
    twin: List[int] = []
    for v, vtype in enumerate(types):
        partner = twin_partner(graph, v)
        if vtype.kind is not VertexKind.C:
            return _fail("type C", f"vertex {v} is of type {vtype.kind.value}", [v])
        if partner is None or vtype.star != partner:
            return _fail("type C", f"the star of vertex {v} is not a twin with the same closed neighbourhood", [v])
        twin.append(partner)
    for v, u in enumerate(twin):
        if twin[u] != v:
            return _fail("twin matching", f"twins of {v} and {u} do not pair up", [v, u])

    rho = rho_partition(graph, params)
    width = n - k + 1
    for cls in rho.classes:
        if len(cls) != width:
            return _fail("rho classes", f"class of size {len(cls)}, expected n - k + 1 = {width}", sorted(cls))
        stray = [v for v in cls if twin[v] not in cls]
        if stray:
            return _fail("rho classes", "a class splits a twin pair", stray)

    quotient = quotient_graph(graph, rho)
    m = quotient.n
    if quotient.edge_count() != m * (m - 1) // 2:
        return _fail("quotient complete", f"quotient on {m} classes has {quotient.edge_count()} edges")

    s, t = m, width // 2
    mapping = [0] * n
    for p, cls in enumerate(rho.classes):
        pairs = sorted({(min(v, twin[v]), max(v, twin[v])) for v in cls})
        for q, (low, high) in enumerate(pairs):
            mapping[low] = (p * t + q) * 2
            mapping[high] = (p * t + q) * 2 + 1
    try:
        target = theorem1_family(s, t)
    except HypothesisError as exc:
        return _fail("isomorphism", str(exc))
    if graph.relabeled(mapping) != target:
        return _fail("isomorphism", f"twin/part labeling does not reproduce the ({s},{t}) family member")

    witness = Theorem1Witness(
        family=FamilyIndex(s=s, t=t),
        parameters=params,
        twin=twin,
        parts=rho.as_lists(),
        quotient_order=m,
        relabeling=mapping,
    )
    return TheoremVerdict(holds=True, applicable=True, witness=witness)


def verify_theorem2(params: DezaParameters) -> Theorem2Verdict:
    report = check_feasibility(params)
    return Theorem2Verdict(
        parameters=params,
        applicable=report.applicable,
        holds=report.feasible,
        reason=report.reason,
        family=report.family,
    )


@dataclass
class _Context:
    graph: Graph
    params: DezaParameters
    profiles: List[VertexProfile]
    types: Optional[List[VertexType]]
    type_error: Optional[str]

    def nbrs(self, v: int) -> FrozenSet[int]:
        return vertices_of(self.graph.adj[v])

    def kinds(self, *kinds: VertexKind) -> List[int]:
        return [v for v, vtype in enumerate(self.types) if vtype.kind in kinds]


_STATEMENTS: Dict[str, str] = {
    "vertex_trichotomy": "B(v) is disjoint from N(v), inside N(v), or meets N(v) in one vertex",
    "parameter_positivity": "alpha > 0 and b > a > 0",
    "type_a_coclique": "for x of type A, B[x] is a coclique of size beta + 1",
    "type_a_closure": "for x of type A and u in B(x), B[u] = B[x] and u is of type A",
    "closure_of_b_and_c": "for v of type B or C and u in B(v), B[u] = B[v] and u has the type of v",
    "closed_sets_partition": "any two sets B[v], B[u] are equal or disjoint",
    "neighbourhood_closure": "for v of type B or C and u in N(v) minus B(v), B[u] lies in N(v) minus B(v)",
    "twin_closed_neighbourhoods": "for v of type C, the star of v has the closed neighbourhood of v",
    "divisibility": "beta + 1 divides k - 1 (types A1, C) or k - beta (types A2, B)",
    "type_homogeneity": "all vertices fall on the same side of the divisibility split",
    "no_type_a1": "no vertex is of type A1",
    "no_type_a2": "no vertex is of type A2",
    "not_all_type_b": "not every vertex is of type B",
    "type_census": "every vertex is of type C",
    "quotient_complete": "the rho-classes have size beta + 1 and the quotient is complete",
}


def _check(name: str, failures: List[int], details: str = "") -> LemmaCheck:
    return LemmaCheck(
        name=name,
        statement=_STATEMENTS[name],
        applicable=True,
        passed=not failures,
        details=details if details or not failures else f"fails at {len(failures)} vertices",
        vertices=sorted(set(failures)),
    )


def _trichotomy(ctx: _Context) -> LemmaCheck:
    bad = []
    for v, profile in enumerate(ctx.profiles):
        meet = profile.b_set & ctx.nbrs(v)
        if meet and not profile.b_set <= ctx.nbrs(v) and len(meet) != 1:
            bad.append(v)
    return _check("vertex_trichotomy", bad)


def _positivity(ctx: _Context) -> LemmaCheck:
    alpha, _ = deza_invariants(ctx.graph, ctx.params)
    ok = alpha > 0 and ctx.params.b > ctx.params.a > 0
    return _check("parameter_positivity", [] if ok else list(range(ctx.graph.n)),
                  f"alpha = {alpha}, b = {ctx.params.b}, a = {ctx.params.a}")


def _type_a_coclique(ctx: _Context) -> LemmaCheck:
    beta = ctx.profiles[0].beta
    bad = []
    for x in ctx.kinds(VertexKind.A1, VertexKind.A2):
        closed = ctx.profiles[x].closed_b
        mask = mask_of(closed)
        if len(closed) != beta + 1 or not ctx.graph.is_coclique(mask):
            bad.append(x)
    return _check("type_a_coclique", bad)


def _closure(ctx: _Context, name: str, kinds: Tuple[VertexKind, ...], same_kind: bool) -> LemmaCheck:
    a_kinds = {VertexKind.A1, VertexKind.A2}
    bad = []
    for v in ctx.kinds(*kinds):
        closed = ctx.profiles[v].closed_b
        for u in ctx.profiles[v].b_set:
            if ctx.profiles[u].closed_b != closed:
                bad.append(u)
            elif same_kind and ctx.types[u].kind is not ctx.types[v].kind:
                bad.append(u)
            elif not same_kind and ctx.types[u].kind not in a_kinds:
                bad.append(u)
    return _check(name, bad)


def _partition(ctx: _Context) -> LemmaCheck:
    bad = []
    closures = [p.closed_b for p in ctx.profiles]
    for v in range(ctx.graph.n):
        for u in range(v + 1, ctx.graph.n):
            if closures[v] & closures[u] and closures[v] != closures[u]:
                bad.extend([v, u])
    return _check("closed_sets_partition", bad)


def _neighbourhood_closure(ctx: _Context) -> LemmaCheck:
    bad = []
    for v in ctx.kinds(VertexKind.B, VertexKind.C):
        outside = ctx.nbrs(v) - ctx.profiles[v].b_set
        for u in outside:
            if not ctx.profiles[u].closed_b <= outside:
                bad.append(u)
    return _check("neighbourhood_closure", bad)


def _twins(ctx: _Context) -> LemmaCheck:
    adj = ctx.graph.adj
    bad = [
        v for v in ctx.kinds(VertexKind.C)
        if adj[ctx.types[v].star] | 1 << ctx.types[v].star != adj[v] | 1 << v
    ]
    return _check("twin_closed_neighbourhoods", bad)


def _divisibility(ctx: _Context) -> LemmaCheck:
    k, beta = ctx.params.k, ctx.profiles[0].beta
    bad = []
    for v, vtype in enumerate(ctx.types):
        target = k - 1 if vtype.kind in (VertexKind.A1, VertexKind.C) else k - beta
        if target % (beta + 1):
            bad.append(v)
    return _check("divisibility", bad, f"beta + 1 = {beta + 1}")


def _homogeneity(ctx: _Context) -> LemmaCheck:
    first = ctx.kinds(VertexKind.A1, VertexKind.C)
    second = ctx.kinds(VertexKind.A2, VertexKind.B)
    bad = first + second if first and second else []
    return _check("type_homogeneity", bad)


def _census(ctx: _Context) -> LemmaCheck:
    bad = [v for v, vtype in enumerate(ctx.types) if vtype.kind is not VertexKind.C]
    census: Dict[str, int] = {}
    for vtype in ctx.types:
        census[vtype.kind.value] = census.get(vtype.kind.value, 0) + 1
    return _check("type_census", bad, f"census {dict(sorted(census.items()))}")


def _quotient(ctx: _Context) -> LemmaCheck:
    rho = rho_partition(ctx.graph, ctx.params)
    quotient = quotient_graph(ctx.graph, rho)
    m = quotient.n
    complete = quotient.edge_count() == m * (m - 1) // 2
    return _check("quotient_complete", [] if complete else list(range(ctx.graph.n)),
                  f"{m} classes of size {rho.class_size}")


_TYPED_CHECKS: List[Tuple[str, Callable[[_Context], LemmaCheck]]] = [
    ("type_a_coclique", _type_a_coclique),
    ("type_a_closure", lambda c: _closure(c, "type_a_closure", (VertexKind.A1, VertexKind.A2), False)),
    ("closure_of_b_and_c", lambda c: _closure(c, "closure_of_b_and_c", (VertexKind.B, VertexKind.C), True)),
    ("closed_sets_partition", _partition),
    ("neighbourhood_closure", _neighbourhood_closure),
    ("twin_closed_neighbourhoods", _twins),
    ("divisibility", _divisibility),
    ("type_homogeneity", _homogeneity),
    ("no_type_a1", lambda c: _check("no_type_a1", c.kinds(VertexKind.A1))),
    ("no_type_a2", lambda c: _check("no_type_a2", c.kinds(VertexKind.A2))),
    ("not_all_type_b", lambda c: _check(
        "not_all_type_b", list(range(c.graph.n)) if len(c.kinds(VertexKind.B)) == c.graph.n else [])),
    ("type_census", _census),
    ("quotient_complete", _quotient),
]


def _inapplicable(condition: str, reason: str) -> LemmaReport:
    precondition = f"{condition}: {reason}"
    return LemmaReport(
        applicable=False,
        precondition=precondition,
        checks=[
            LemmaCheck(name=name, statement=statement, applicable=False, precondition=precondition)
            for name, statement in _STATEMENTS.items()
        ],
    )


def lemma_suite(graph: Graph) -> LemmaReport:
    """Evaluate each structural lemma's conclusion directly on the graph."""
    condition, reason, params = _precondition_failure(graph)
    if condition is not None:
        return _inapplicable(condition, reason)

    profiles = [vertex_profile(graph, params, v) for v in range(graph.n)]
    types, type_error = None, None
    try:
        types = classify_all(graph, params)
    except ContradictionError as exc:
        type_error = str(exc)
    ctx = _Context(graph=graph, params=params, profiles=profiles, types=types, type_error=type_error)

    checks = [_trichotomy(ctx)]
    try:
        checks.append(_positivity(ctx))
    except ContradictionError as exc:
        checks.append(_check("parameter_positivity", exc.vertices or [0], str(exc)))
    for name, run in _TYPED_CHECKS:
        if types is None:
            checks.append(_check(name, [0], f"vertex classification failed: {type_error}"))
            continue
        try:
            checks.append(run(ctx))
        except DezaError as exc:
            checks.append(_check(name, getattr(exc, "vertices", None) or [0], str(exc)))
    report = LemmaReport(applicable=True, checks=checks)
    if not report.all_passed:
        failed = [c.name for c in checks if not c.passed]
        logger.warning(f"lemma checks failed on {graph}: {failed}")
    return report


def verify_complement_property(graph: Graph) -> LemmaCheck:
    """A strictly Deza graph with a Deza complement is coedge-regular with b = a + 2."""
    statement = "a strictly Deza graph with a Deza complement is coedge-regular with b = a + 2"
    reason = strictly_deza_failure(graph)
    if reason is None and deza_parameters(complement(graph)) is None:
        reason = "complement is not a Deza graph"
    if reason is not None:
        return LemmaCheck(name="complement_property", statement=statement, applicable=False, precondition=reason)
    params = deza_parameters(graph)
    coedge = coedge_regular_value(graph)
    passed = coedge is not None and params.b == params.a + 2
    return LemmaCheck(
        name="complement_property",
        statement=statement,
        applicable=True,
        passed=passed,
        details=f"coedge value {coedge}, b = {params.b}, a = {params.a}",
    )
