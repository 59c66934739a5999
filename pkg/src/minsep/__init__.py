"""Enumerate, count and cross-check minimal separators and potential maximal cliques."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    GraphError,
    VertexSet,
    build_graph,
    connected_components,
    contract_edge,
    neighborhood,
    remove_vertices,
)
from .separators import (  # noqa: E402
    GOLDEN,
    EnumerationReport,
    Separation,
    brute_force_minimal_separators,
    enumerate_minimal_ab_separators,
    enumerate_minimal_separators,
    is_ab_separator,
    is_minimal_ab_separator,
    is_minimal_separator,
    max_sep_exhaustive,
)
from .families import block, glued, growth_base, layer_family, lb_count, melon  # noqa: E402
from .triangulation import check_corollary, is_chordal, is_pmc, minimal_triangulations, pmcs_definitional  # noqa: E402
