"""p-competition graphs of digraphs: cover verification, constructions for
cycles and cycle complements, digraph realization, and exact desk-scale
oracles."""

from .competition import common_prey_count, p_competition_graph
from .covers import (
    REASON_FAMILY_SMALLER_THAN_P,
    REASON_NONEDGE_IN_P_SETS,
    REASON_UNCOVERED_EDGE,
    CliqueCover,
    Verdict,
    complement_cycle_cover,
    cover_from_json_dict,
    cover_to_json_dict,
    cycle_cover,
    lift_cover,
    verify_ecc,
    verify_p_ecc,
)
from .errors import (
    InfeasibleError,
    InvalidParameterError,
    PcompError,
    ScaleError,
    UnsupportedInstanceError,
)
from .graphs import (
    Digraph,
    Graph,
    complement,
    digraph_from_json_dict,
    digraph_to_dot,
    digraph_to_json_dict,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_json_dict,
    is_clique,
    make_cycle,
)
from .oracle import (
    Decision,
    SearchResult,
    exact_theta_e,
    exact_theta_e_p,
    is_p_competition,
    maximal_cliques,
)
from .realization import (
    is_acyclic,
    realize,
    realize_acyclic,
    satisfies_acyclic_ordering,
)

__version__ = "0.1.0"

__all__ = [
    "CliqueCover",
    "Decision",
    "Digraph",
    "Graph",
    "InfeasibleError",
    "InvalidParameterError",
    "PcompError",
    "REASON_FAMILY_SMALLER_THAN_P",
    "REASON_NONEDGE_IN_P_SETS",
    "REASON_UNCOVERED_EDGE",
    "ScaleError",
    "SearchResult",
    "UnsupportedInstanceError",
    "Verdict",
    "common_prey_count",
    "complement",
    "complement_cycle_cover",
    "cover_from_json_dict",
    "cover_to_json_dict",
    "cycle_cover",
    "digraph_from_json_dict",
    "digraph_to_dot",
    "digraph_to_json_dict",
    "exact_theta_e",
    "exact_theta_e_p",
    "graph_from_json_dict",
    "graph_to_dot",
    "graph_to_json_dict",
    "is_acyclic",
    "is_clique",
    "is_p_competition",
    "lift_cover",
    "make_cycle",
    "maximal_cliques",
    "p_competition_graph",
    "realize",
    "realize_acyclic",
    "satisfies_acyclic_ordering",
    "verify_ecc",
    "verify_p_ecc",
]
