"""Extremal S_{n-1,n-1}-free subgraphs of the hypercube Q_n."""

from .construct import ExtremalPair, base_pair_3, extremal_edge_count, extremal_pair
from .forbidden import (
    DoubleStarPattern,
    EmbeddingWitness,
    contains_double_star,
    is_balanced_free,
)
from .hypercube import (
    MAX_DIM,
    CubeAutomorphism,
    Edge,
    apply_automorphism,
    edge_count,
    edge_from_id,
    edge_id,
    layer,
    layer_size,
    neighbors,
)
from .repair import RepairReport, RepairStep, normalize_min_degree
from .solver import (
    DeletionCertificate,
    SolveResult,
    covering_bound,
    exhaustive_turan,
    min_edge_dominating,
    turan_formula,
    verify_certificate,
)
from .subgraph import CrossEdgeReport, CubeSubgraph, cross_edges, full_degree_set, min_degree

__version__ = "0.1.0"
