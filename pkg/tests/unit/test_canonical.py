"""
Unit tests for canonical labeling.
"""

from itertools import permutations

import networkx as nx
import pynauty
from hypothesis import given
from hypothesis import strategies as st

from dezagraphs.canonical import canonical_form, canonical_graph, canonical_labeling, to_nauty
from dezagraphs.constructions import theorem1_family
from dezagraphs.graph_core import complement, cycle_graph
from tests.helpers import PROPERTY_SETTINGS, from_networkx, graphs, to_networkx


class TestCanonicalForm:
    """Test label invariance and separation of canonical forms."""

    def test_c4_under_all_labelings(self):
        """Test that all 24 labelings of C4 share one form."""
        c4 = cycle_graph(4)
        forms = {canonical_form(c4.relabeled(list(p))) for p in permutations(range(4))}
        assert len(forms) == 1

    def test_k33_and_prism_differ(self, k33, prism):
        """Test that the two cubic graphs on six vertices are separated."""
        assert canonical_form(k33) != canonical_form(prism)

    def test_double_complement(self, petersen):
        """Test that complementing twice keeps the form."""
        assert canonical_form(complement(complement(petersen))) == canonical_form(petersen)

    def test_form_graph6_decodes_to_canonical_graph(self, family_2_2):
        """Test that the form's graph6 is the canonically relabeled graph."""
        form = canonical_form(family_2_2)
        assert str(form) == form.graph6
        assert nx.is_isomorphic(to_networkx(canonical_graph(family_2_2)), to_networkx(family_2_2))
        assert canonical_form(canonical_graph(family_2_2)) == form

    def test_labeling_is_a_permutation(self, petersen):
        """Test that the canonical order lists every vertex once."""
        assert sorted(canonical_labeling(petersen)) == list(range(10))

    def test_vertex_transitive_family(self):
        """Test invariance on a larger highly symmetric graph."""
        g = theorem1_family(2, 4)
        shuffled = g.relabeled([(5 * v + 3) % 16 for v in range(16)])
        assert canonical_form(shuffled) == canonical_form(g)

    def test_nauty_graph_keeps_isomorphism_type(self, k33, prism):
        """Test that the pynauty conversion separates K_{3,3} from the prism and keeps relabelings together."""
        shuffled = k33.relabeled([3, 0, 4, 1, 5, 2])
        assert pynauty.isomorphic(to_nauty(k33), to_nauty(shuffled))
        assert pynauty.certificate(to_nauty(k33)) == pynauty.certificate(to_nauty(shuffled))
        assert not pynauty.isomorphic(to_nauty(k33), to_nauty(prism))

    def test_isolated_vertices(self):
        """Test graphs with edgeless vertices, which carry no adjacency entry."""
        path = from_networkx(nx.path_graph(3))
        padded = from_networkx(nx.disjoint_union(nx.path_graph(3), nx.empty_graph(2)))
        assert canonical_form(padded) == canonical_form(padded.relabeled([4, 0, 3, 1, 2]))
        assert canonical_form(padded) != canonical_form(path)

    @PROPERTY_SETTINGS
    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    def test_invariant_under_random_relabeling(self, g, rng):
        """Test canonical_form(G) = canonical_form(pi G) for random pi."""
        mapping = list(range(g.n))
        rng.shuffle(mapping)
        assert canonical_form(g.relabeled(mapping)) == canonical_form(g)

    @PROPERTY_SETTINGS
    @given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
    def test_equal_forms_iff_isomorphic(self, g, h):
        """Test agreement with the networkx isomorphism oracle."""
        same = canonical_form(g) == canonical_form(h)
        assert same == (g.n == h.n and nx.is_isomorphic(to_networkx(g), to_networkx(h)))
