"""Exact walk counts versus degree power sums in graphs, with mechanical verification."""

from .degrees import albertson_irregularity, degree_power_sum, laplacian_quadratic, power_lemma_gap
from .generators import generate
from .graph import (
    Graph,
    GraphFormatError,
    degree_vector,
    is_connected,
    is_regular,
    parse_edge_list,
    serialize_edge_list,
)
from .matrix import (
    SymMatrix,
    abs_row_sums,
    grand_sum_power,
    parse_matrix,
    verify_matrix_inequality,
)
from .oracle import brute_force_walks
from .spectral import SpectralResult, crossover_k, perron, spectral_walk_bound
from .verify import WalkReport, verify_chain, verify_inequality, verify_k3
from .walks import adjacency_apply, mixed_walk_sum, total_walks, walk_vector

__version__ = "0.1.0"
