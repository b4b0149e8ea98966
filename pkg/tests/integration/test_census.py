"""
Integration tests over the enumerated corpus: nonexistence, invariants,
classification in both directions, uniqueness and canonical exactness.

Runs above eight vertices are marked slow; select them with `pytest -m slow`.
"""

import random

import networkx as nx
import pytest

from dezagraphs.analysis import beta_by_formula, deza_invariants, deza_parameters, is_strictly_deza
from dezagraphs.canonical import canonical_form
from dezagraphs.config import Settings
from dezagraphs.constructions import family_parameters, theorem1_family
from dezagraphs.enumeration import enumerate_regular, enumerate_strictly_deza, naive_strictly_deza
from dezagraphs.graph_core import from_graph6
from dezagraphs.verifier import lemma_suite, verify_complement_property, verify_theorem1
from tests.helpers import to_networkx

WIDE = Settings(max_n=16)

_CENSUS = {}


def census(n):
    if n not in _CENSUS:
        _CENSUS[n] = enumerate_strictly_deza(n, settings=WIDE)
    return _CENSUS[n]


def family_indices(max_order):
    return [(s, t) for s in range(2, 9) for t in range(2, 9) if 2 * s * t <= max_order]


class TestNonexistence:
    """Test that no strictly Deza graph has fewer than eight vertices."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_census_and_brute_force_agree_and_are_empty(self, n):
        """Test orderly generation against all labeled graphs."""
        assert census(n) == []
        assert naive_strictly_deza(n) == []

    @pytest.mark.slow
    def test_seven_vertices_against_brute_force(self):
        """Test n = 7 over all 2^21 labeled graphs."""
        assert census(7) == []
        assert naive_strictly_deza(7) == []


def _check_no_k_minus_2(records):
    for record in records:
        params = record.parameters
        assert not (params.b == params.k - 1 and params.a == params.k - 2), record.graph6


def _check_invariants(records):
    for record in records:
        graph = from_graph6(record.graph6)
        params = deza_parameters(graph)
        assert params == record.parameters
        alpha, beta = deza_invariants(graph, params)
        assert (alpha, beta) == (record.alpha, record.beta)
        assert beta == beta_by_formula(params)
        assert is_strictly_deza(graph)


def _check_classification(records):
    for record in records:
        graph = from_graph6(record.graph6)
        params = record.parameters
        hypothesis = params.k == params.b + 1 and beta_by_formula(params) > 1
        verdict = verify_theorem1(graph)
        assert verdict.holds == hypothesis == record.theorem1
        if verdict.holds:
            witness = verdict.witness
            target = theorem1_family(witness.family.s, witness.family.t)
            assert graph.relabeled(witness.relabeling) == target
            assert (witness.family.s, witness.family.t) == (params.n // (record.beta + 1), (record.beta + 1) // 2)
            assert nx.is_isomorphic(to_networkx(graph), to_networkx(target))
            assert lemma_suite(graph).all_passed
            assert record.vertex_types == {"C": params.n}


def _check_complement(records):
    applicable = 0
    for record in records:
        check = verify_complement_property(from_graph6(record.graph6))
        if check.applicable:
            applicable += 1
            assert check.passed, (record.graph6, check.details)
    return applicable


def _check_uniqueness(records):
    by_quadruple = {}
    for record in records:
        params = record.parameters
        if params.b == params.k - 1 and params.a == 2 * params.k - params.n and record.beta > 1:
            by_quadruple.setdefault(params.as_tuple(), set()).add(record.graph6)
    for quadruple, forms in by_quadruple.items():
        assert len(forms) == 1, quadruple


class TestCorpusAtEightVertices:
    """Test every corpus property at n = 8."""

    def test_family_member_is_the_only_k_equal_b_plus_1_graph(self, family_2_2):
        """Test membership and uniqueness of (8,5,4,2)."""
        records = census(8)
        hits = [r for r in records if r.parameters.label == "(8,5,4,2)"]
        assert [r.graph6 for r in hits] == [canonical_form(family_2_2).graph6]

    def test_properties(self):
        """Test invariants, classification, uniqueness and the k-2 exclusion."""
        records = census(8)
        assert records
        _check_no_k_minus_2(records)
        _check_invariants(records)
        _check_classification(records)
        _check_uniqueness(records)

    def test_complement_property(self):
        """Test coedge-regularity and b = a + 2 wherever the complement is Deza."""
        assert _check_complement(census(8)) >= 1


@pytest.mark.slow
class TestCorpusUpToTwelve:
    """Test corpus properties for 9 <= n <= 12."""

    @pytest.mark.parametrize("n", [9, 10])
    def test_no_k_minus_2(self, n):
        """Test that (b, a) = (k-1, k-2) never occurs."""
        _check_no_k_minus_2(census(n))

    @pytest.mark.parametrize("n", [9, 10, 11, 12])
    def test_properties(self, n):
        """Test invariants, both classification directions and uniqueness."""
        records = census(n)
        _check_invariants(records)
        _check_classification(records)
        _check_uniqueness(records)

    @pytest.mark.parametrize("n", [9, 10, 11, 12])
    def test_complement_property(self, n):
        """Test the complement statement over the corpus."""
        _check_complement(census(n))

    def test_twelve_vertex_family_members_are_found(self):
        """Test closure under construction at n = 12."""
        forms = {r.graph6 for r in census(12)}
        for s, t in [(2, 3), (3, 2)]:
            assert canonical_form(theorem1_family(s, t)).graph6 in forms


@pytest.mark.slow
def test_sixteen_vertex_family_members_are_found():
    """Test closure under construction at n = 16, restricted to the family degree."""
    for s, t in [(2, 4), (4, 2)]:
        params = family_parameters(s, t)
        records = enumerate_strictly_deza(16, degrees=[params.k], settings=WIDE)
        assert canonical_form(theorem1_family(s, t)).graph6 in {r.graph6 for r in records}


class TestFamily:
    """Test the constructed family against the classification."""

    @pytest.mark.parametrize("s", [2, 3, 4, 5])
    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_parameter_identity(self, s, t):
        """Test (2st, 2(s-1)t+1, 2(s-1)t, 2(s-2)t+2) and a = 2k - n."""
        params = deza_parameters(theorem1_family(s, t))
        assert params.as_tuple() == (2 * s * t, 2 * (s - 1) * t + 1, 2 * (s - 1) * t, 2 * (s - 2) * t + 2)
        assert params.a == 2 * params.k - params.n

    @pytest.mark.parametrize("s,t", family_indices(16))
    def test_converse(self, s, t):
        """Test structure of each family member up to 16 vertices."""
        graph = theorem1_family(s, t)
        params = deza_parameters(graph)
        _, beta = deza_invariants(graph, params)
        assert is_strictly_deza(graph)
        assert params.k == params.b + 1
        assert beta == params.n - params.k > 1
        verdict = verify_theorem1(graph)
        assert verdict.holds
        assert all(len(part) == params.n - params.k + 1 for part in verdict.witness.parts)
        assert verdict.witness.quotient_order == params.n // (beta + 1)
        report = lemma_suite(graph)
        assert report.all_passed
        assert report.check("type_census").passed


class TestCanonicalExactness:
    """Test canonical forms against the networkx isomorphism oracle."""

    @staticmethod
    def _bucket_agrees(n, k, rng):
        reps = list(enumerate_regular(n, k))
        labeled = []
        for g in reps:
            mapping = list(range(n))
            rng.shuffle(mapping)
            labeled.extend([g, g.relabeled(mapping)])
        forms = [canonical_form(g) for g in labeled]
        nx_graphs = [to_networkx(g) for g in labeled]
        for i in range(len(labeled)):
            for j in range(i + 1, len(labeled)):
                assert (forms[i] == forms[j]) == nx.is_isomorphic(nx_graphs[i], nx_graphs[j])

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_small_buckets(self, n):
        """Test every (n, k) bucket for n <= 7."""
        rng = random.Random(n)
        for k in range(1, n):
            if n * k % 2 == 0:
                self._bucket_agrees(n, k, rng)

    @pytest.mark.slow
    def test_eight_vertex_buckets(self):
        """Test every (8, k) bucket."""
        rng = random.Random(8)
        for k in range(1, 8):
            self._bucket_agrees(8, k, rng)
