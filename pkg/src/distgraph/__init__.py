"""Random distance graphs on integer lattices.

A toolkit for graphs whose vertices live in a metric space and whose edges
appear independently with a probability that decreases in the pairwise
distance.  Includes exact l1 shell combinatorics on boxes and on Z^r,
distribution-equivalent naive and stratified samplers, Waxman and
Erdos-Renyi baselines, connectivity analysis, and a reproducible sweep
harness for locating the connectivity/isolation phase transition.
"""

from .analysis import ComponentSummary, UnionFind, analyze, is_connected
from .degrees import expected_degree_finite, expected_degree_infinite
from .edgelist import format_edge_list, read_edge_list, write_edge_list
from .errors import CapacityError
from .harness import (
    FAMILY_ER,
    FAMILY_LATTICE,
    FAMILY_WAXMAN,
    SweepConfig,
    SweepRow,
    rows_to_csv,
    rows_to_json,
    run_sweep,
)
from .lattice import (
    LatticeSpace,
    l1_distance,
    pair_count_by_distance,
    shell_count_finite,
    shell_count_finite_bruteforce,
    shell_count_infinite,
)
from .models import Constant, EdgeProbabilityModel, InverseDistance, Truncated, WaxmanExponential
from .samplers import (
    EuclideanPointSet,
    Provenance,
    SampledGraph,
    make_graph,
    sample_er_graph,
    sample_lattice_graph_naive,
    sample_lattice_graph_stratified,
    sample_waxman_graph,
)
from .seeding import derive_trial_seed

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ComponentSummary",
    "Constant",
    "EdgeProbabilityModel",
    "EuclideanPointSet",
    "FAMILY_ER",
    "FAMILY_LATTICE",
    "FAMILY_WAXMAN",
    "InverseDistance",
    "LatticeSpace",
    "Provenance",
    "SampledGraph",
    "SweepConfig",
    "SweepRow",
    "Truncated",
    "UnionFind",
    "WaxmanExponential",
    "analyze",
    "derive_trial_seed",
    "expected_degree_finite",
    "expected_degree_infinite",
    "format_edge_list",
    "is_connected",
    "l1_distance",
    "make_graph",
    "pair_count_by_distance",
    "read_edge_list",
    "rows_to_csv",
    "rows_to_json",
    "run_sweep",
    "sample_er_graph",
    "sample_lattice_graph_naive",
    "sample_lattice_graph_stratified",
    "sample_waxman_graph",
    "shell_count_finite",
    "shell_count_finite_bruteforce",
    "shell_count_infinite",
    "write_edge_list",
]
