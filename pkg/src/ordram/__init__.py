"""Ordered Ramsey numbers: data model, constructions, search and bounds."""

from .core import (
    BLUE,
    RED,
    EdgeColoring,
    FormatError,
    OrderedGraph,
    ParameterError,
    SchemeSpec,
    alternating_path,
    bandwidth,
    build_scheme,
    c4_ordering,
    coloring_to_oc,
    complete,
    complete_multipartite,
    degeneracy,
    edge_lengths,
    graph_to_og,
    interval_chromatic_number,
    is_decomposable,
    matching_nest,
    matching_shift,
    monotone_cycle,
    monotone_path,
    oc_to_coloring,
    og_to_graph,
    star,
)
from .containment import (
    Embedding,
    avoids,
    find_embedding,
    find_monochromatic,
    longest_monotone_cycle,
    longest_monotone_path,
)
from .constructions import (
    CertifiedColoring,
    alternating_parity,
    block_matching,
    matching_construction,
    matching_lb_params,
    monotone_cycle_construction,
    monotone_path_grid,
    pentagon_coloring,
    star_blowup,
    star_coloring,
)
from .solver import (
    Budget,
    PartialColoring,
    RamseyResult,
    SearchResult,
    exists_avoiding,
    exists_avoiding_parallel,
    ramsey_number,
    turan_bipartite,
)
from .bounds import (
    AltPathBounds,
    BoundValue,
    alt_path_bounds,
    bandwidth_upper,
    decomposable_upper,
    degenerate_upper,
    geometric_cycle_exact,
    hyperpath_exact,
    monotone_cycles_exact,
    monotone_paths_exact,
    partition_count,
    path_vs_clique_exact,
    probabilistic_lower,
    star_blowup_lower,
    stars_multicolor_exact,
    stars_pair_exact,
)
from .embedding import (
    BicliqueWitness,
    PlacedEmbedding,
    check_outcome,
    embed_or_biclique,
)

__version__ = "0.1.0"
