"""Clique counts of graphs without long cycles through an edge."""

from .graph import (
    Graph,
    GraphError,
    VertexMap,
    build_graph,
    contract,
    cut_vertices,
    edge_switch,
    from_graph6,
    has_adjacent_two_cut,
    is_connected,
    is_two_connected,
    to_graph6,
)
from .cliques import CliqueProfile, brute_force_profile, clique_profile, count_cliques
from .cycles import (
    CycleReport,
    NoQualifyingEdge,
    circumference,
    ell,
    has_cycle_through_edge_at_least,
    longest_cycle_through_edge,
)
from .bounds import (
    ConstructionSpec,
    Decomposition,
    ParameterError,
    binom,
    build_H,
    build_Q,
    build_X,
    check_inequality_1,
    check_inequality_3,
    check_proposition,
    conjecture_bound,
    decompose,
    f_s,
    g_s,
    psi_s,
)

__version__ = "0.1.0"
