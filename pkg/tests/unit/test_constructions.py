"""
Unit tests for multipartite graphs, extensions, the k = b + 1 family and feasibility.
"""

import networkx as nx
import pytest

from dezagraphs.analysis import deza_parameters, is_strictly_deza
from dezagraphs.constructions import (
    MultipartiteShape,
    check_feasibility,
    clique_extension,
    coclique_extension,
    complete_multipartite,
    construct_from_parameters,
    extension,
    family_parameters,
    theorem1_family,
)
from dezagraphs.errors import GraphArgumentError, HypothesisError, InfeasibleParametersError
from dezagraphs.graph_core import complete_graph, cycle_graph
from dezagraphs.models import DezaParameters
from tests.helpers import from_networkx, to_networkx


class TestMultipartite:
    """Test complete multipartite graphs."""

    def test_k33(self, k33):
        """Test that two parts of three give K_{3,3}."""
        assert complete_multipartite(MultipartiteShape((3, 3))) == k33

    def test_uneven_parts_match_networkx(self):
        """Test K_{1,2,3} against networkx."""
        ours = complete_multipartite(MultipartiteShape((1, 2, 3)))
        assert ours == from_networkx(nx.complete_multipartite_graph(1, 2, 3))

    def test_shape_validation(self):
        """Test that empty shapes and nonpositive parts are refused."""
        with pytest.raises(GraphArgumentError):
            MultipartiteShape(())
        with pytest.raises(GraphArgumentError):
            MultipartiteShape((2, 0))


class TestExtensions:
    """Test clique and coclique extensions."""

    def test_clique_extension_is_lexicographic_product(self, c5):
        """Test the composition against networkx with vertex (v, i) at v*m + i."""
        ours = clique_extension(c5, 2)
        theirs = nx.lexicographic_product(to_networkx(c5), nx.complete_graph(2))
        mapped = nx.relabel_nodes(theirs, {(v, i): v * 2 + i for v, i in theirs.nodes()})
        assert set(ours.edges()) == {tuple(sorted(e)) for e in mapped.edges()}

    def test_coclique_extension_of_edge_is_c4(self):
        """Test that the 2-coclique extension of K2 is K_{2,2}."""
        g = coclique_extension(complete_graph(2), 2)
        assert g.degrees() == [2, 2, 2, 2]
        assert not g.is_adjacent(0, 1)

    def test_multiplicity_one_is_identity(self, c5):
        """Test that extending by a single vertex changes nothing."""
        assert clique_extension(c5, 1) == c5
        assert extension(c5, complete_graph(1)) == c5

    def test_multiplicity_must_be_positive(self, c5):
        """Test that m = 0 is an argument error."""
        with pytest.raises(GraphArgumentError):
            coclique_extension(c5, 0)

    def test_clique_extension_degree(self):
        """Test degree (k + 1) m - 1 of an m-clique extension."""
        assert clique_extension(cycle_graph(6), 3).degrees() == [8] * 18


class TestFamily:
    """Test the 2-clique extensions of K_{t,...,t}."""

    @pytest.mark.parametrize("s,t", [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3)])
    def test_parameters_match_closed_form(self, s, t):
        """Test (2st, 2(s-1)t+1, 2(s-1)t, 2(s-2)t+2) and a = 2k - n."""
        g = theorem1_family(s, t)
        params = deza_parameters(g)
        assert params == family_parameters(s, t)
        assert params.as_tuple() == (2 * s * t, 2 * (s - 1) * t + 1, 2 * (s - 1) * t, 2 * (s - 2) * t + 2)
        assert params.a == 2 * params.k - params.n
        assert is_strictly_deza(g)

    def test_small_indices_are_refused(self):
        """Test that s < 2 or t < 2 violate the hypotheses."""
        with pytest.raises(HypothesisError):
            theorem1_family(1, 3)
        with pytest.raises(HypothesisError):
            theorem1_family(3, 1)


class TestFeasibility:
    """Test the ordered feasibility chain and construction from parameters."""

    def test_feasible_quadruple_recovers_family(self, family_2_2):
        """Test (8,5,4,2) gives (s, t) = (2, 2) and the family graph."""
        report = check_feasibility(DezaParameters.parse("8,5,4,2"))
        assert report.feasible
        assert (report.family.s, report.family.t) == (2, 2)
        assert construct_from_parameters(DezaParameters.parse("8,5,4,2")) == family_2_2

    def test_a_equal_2k_minus_n_is_required(self):
        """Test that (12,9,8,5) fails the a = 2k - n identity."""
        report = check_feasibility(DezaParameters.parse("12,9,8,5"))
        assert not report.feasible
        assert report.applicable
        assert report.reason == "a = 2k - n fails (5 != 6)"

    def test_a_equal_k_minus_2_is_impossible(self):
        """Test that (10,9,8,7) is rejected before any other identity."""
        with pytest.raises(InfeasibleParametersError) as info:
            construct_from_parameters(DezaParameters.parse("10,9,8,7"))
        assert "a = k-2 impossible" in str(info.value)
        assert info.value.report.violated == "a != k-2"

    def test_hypothesis_failures_are_inapplicable(self):
        """Test that b != k - 1 and beta <= 1 are reported as inapplicable."""
        assert not check_feasibility(DezaParameters.parse("8,5,3,2")).applicable
        assert not check_feasibility(DezaParameters.parse("6,3,3,0")).applicable

    def test_part_size_must_divide_n(self):
        """Test a quadruple that passes a = 2k - n but not (n-k+1) | n."""
        report = check_feasibility(DezaParameters.parse("10,7,6,4"))
        assert not report.feasible
        assert report.violated == "(n-k+1) | n"
