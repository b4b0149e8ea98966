"""
dezagraphs
Recognition, construction, enumeration and structural verification of
strictly Deza graphs, with emphasis on the parameter case k = b + 1.
"""

from .analysis import (
    DezaClass,
    VertexKind,
    beta_by_formula,
    classify_vertex,
    deza_class,
    deza_parameters,
    is_strictly_deza,
    is_strongly_regular,
    quotient_graph,
    rho_partition,
    vertex_profile,
)
from .canonical import CanonicalForm, canonical_form
from .constructions import (
    check_feasibility,
    clique_extension,
    coclique_extension,
    complete_multipartite,
    construct_from_parameters,
    theorem1_family,
)
from .enumeration import enumerate_regular, enumerate_strictly_deza
from .graph_core import Graph, common_neighbors, from_graph6, to_graph6
from .models import DezaParameters, LemmaReport, TheoremVerdict
from .verifier import lemma_suite, verify_theorem1, verify_theorem2

__version__ = "1.0.0"
