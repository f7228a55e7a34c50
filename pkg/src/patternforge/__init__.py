"""patternforge: clique-to-pattern reductions, cores, minors, and paired detectors."""

from .catalog import catalog_lookup, complement_pattern, identify_pattern
from .errors import CapacityError, InputError, InternalError, PatternForgeError
from .graphs import (
    Graph,
    Pattern,
    PartitionedGraph,
    complement,
    graph_from_edges,
    induced_subgraph,
    is_H_partite,
    is_isomorphic,
    load_graph,
    parse_edge_list,
    save_graph,
    write_edge_list,
)
from .homcore import (
    CCovering,
    chromatic_number,
    compute_core,
    find_C_coloring,
    find_homomorphism,
    is_color_critical,
    is_core,
    min_C_covering,
)
from .minors import (
    MinorFunction,
    core_clique_lower_bound,
    eta_path_cycle_formula,
    find_Kt_minor_function,
    has_clique,
    induced_si_bound,
    max_clique,
    max_clique_minor,
)
from .reductions import (
    Hypergraph4P3U,
    ReductionInstance,
    build_core_reduction,
    build_hyperclique_c4_reduction,
    build_pathcycle_reduction,
    build_psi_reduction,
    choose_set_representative,
    extract_clique_psi,
    extract_hyperclique,
)

__version__ = "0.1.0"
