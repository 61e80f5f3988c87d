"""Rainbow vertex-disconnection numbers: exact solving, characterizations,
bound audits, extremal constructions, and random-graph threshold experiments.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundCheck,
    BoundReport,
    NgAuditRecord,
    NgCheck,
    degree_sum_audit,
    improved_size_bound,
    ng_audit,
    size_band_lemma,
)
from .characterizations import (
    NMinusOneCheck,
    PatternMatch,
    build_extremal_n_minus_1,
    build_ng_extremal,
    check_rvd_is_1,
    check_rvd_is_2,
    check_rvd_is_n,
    check_rvd_is_n_minus_1,
    extremal_n_minus_1_size,
    find_pair_cover,
    find_triple_cover,
    tree_complement_extremal,
)
from .coloring import (
    CutCertificate,
    RvdColoringCheck,
    VertexColoring,
    conflict_graph,
    exists_rainbow_cut,
    format_coloring,
    identity_coloring,
    is_rainbow,
    is_rvd_coloring,
    is_vertex_cut,
    monochromatic_coloring,
    parse_coloring,
    verify_certificate,
)
from .connectivity import (
    BlockDecomposition,
    BlockKind,
    blocks,
    connectivity,
    local_connectivity,
    upper_connectivity,
)
from .graphs import (
    Graph,
    Graph6Error,
    GraphStats,
    complement,
    complete_bipartite_graph,
    complete_graph,
    common_neighbor_count,
    common_neighbors,
    components,
    cycle_graph,
    empty_graph,
    encode_edge_list,
    encode_graph6,
    from_edges,
    graph_stats,
    induced_subgraph,
    is_connected,
    is_tree,
    min_pairwise_common_neighbors,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
)
from .randomlab import (
    CRITERION_BOTH,
    CRITERION_RVD_N,
    ExperimentRecord,
    SweepConfig,
    SweepPoint,
    almost_sure_check,
    criterion_both,
    criterion_rvd_n,
    sample_gnp,
    threshold_probability,
    threshold_sweep,
    trial_stream,
)
from .solver import (
    BOUNDS_ONLY,
    CLOSED_FORM,
    DEFAULT_EXACT_CAP,
    EXACT_SEARCH,
    RvdReport,
    chromatic_number,
    injective_chromatic_number,
    max_clique,
    rvd_exact,
    rvd_fast,
    rvd_lower_bound,
    rvd_upper_bound,
)
