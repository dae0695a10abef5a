"""Exact local metric dimension via cut-vertex decomposition."""

from .graph import (
    Graph,
    bfs_distances,
    clique_number,
    complete,
    cycle,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    is_connected,
    join,
    path,
)
from .local_metric import (
    BasisFamily,
    DimResult,
    alpha,
    enumerate_local_metric_bases,
    is_local_metric_generator,
    local_metric_dimension,
    representation,
    rho,
)
from .decomposition import (
    Decomposition,
    articulation_points,
    blocks,
    classify,
    decompose,
    dim_via_decomposition,
    equality_certificate,
    upper_bound_via_alpha,
)

__version__ = "0.1.0"
