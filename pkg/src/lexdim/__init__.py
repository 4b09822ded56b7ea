"""Exact metric dimension of lexicographic products G[H]."""

from .graph import (
    INF,
    DistanceMatrix,
    Graph,
    GraphError,
    bfs_distances,
    complement,
    diameter,
    from_edge_list,
    is_connected,
    line_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .generators import complete, complete_multipartite, cycle, empty, kneser, path, petersen
from .resolver import (
    BasisReport,
    Case,
    GapDecomposition,
    Mode,
    all_adjacency_bases,
    classify_case,
    dimension,
    gaps,
    is_resolving,
    representation,
)
from .twins import TwinSummary, are_twins, twin_partition
from .lex import (
    Prediction,
    VerificationError,
    VerificationReport,
    lex_product,
    predict_dim_lex,
    predict_family_path_cycle,
    verify,
)
from .tables import Family, TableError, closed_form_dim_lex
from .expr import parse_expr, to_graph

__version__ = "0.1.0"
