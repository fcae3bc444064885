"""Construction, verification and exhaustive search of K_{r+1}-saturated graphs."""

from .bounds import BoundsReport, verify_graph
from .canonical import CanonicalForm, canonical_form, is_isomorphic
from .constructions import moore_graph, s_graph, turan
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    components,
    contains_clique,
    cycle_graph,
    diameter,
    empty_graph,
    find_clique,
    girth,
    path_graph,
)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .saturation import SaturationCertificate, is_saturated
from .search import SearchCensus, census, enumerate_saturated
from .spectral import full_spectrum, spectral_radius

__all__ = [
    "BoundsReport", "CanonicalForm", "Graph", "Graph6Error", "GraphError",
    "SaturationCertificate", "SearchCensus", "canonical_form", "census",
    "complete_graph", "components", "contains_clique", "cycle_graph", "diameter",
    "empty_graph", "enumerate_saturated", "find_clique", "full_spectrum", "girth",
    "is_isomorphic", "is_saturated", "moore_graph", "parse_graph6", "path_graph",
    "s_graph", "spectral_radius", "to_graph6", "turan", "verify_graph",
]

__version__ = "0.1.0"
