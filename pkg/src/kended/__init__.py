"""Largest k-ended trees, independent-set degree sums and the theorems linking them.

Exact solvers for t_k (the order of a largest tree with at most k leaves)
and sigma_m (minimum degree sum of an independent m-set) on small graphs,
the edge exchanges used to reason about maximum k-ended trees, and a
harness that checks the degree-sum theorems over whole graph corpora.
"""

from __future__ import annotations

from .errors import (
    ConnectivityError,
    InstanceError,
    InvalidExchangeError,
    KendedError,
    NoBranchVertexError,
    ParameterError,
    ParseError,
    PreconditionError,
    SamplingError,
    SizeError,
    TreeError,
)
from .graph import (
    INFINITY,
    FamilySpec,
    Graph,
    Infinity,
    build_family,
    enumerate_labeled_connected,
    independence_number,
    random_connected,
    sigma,
    sigma_profile,
)
from .graph6 import parse_graph6, read_graph6_file, to_graph6_str, write_graph6
from .harness import (
    CheckOutcome,
    GraphProfile,
    TheoremInstance,
    VerificationReport,
    check_instance,
    generate_instances,
    make_instance,
    sharpness_suite,
    verify_corpus,
)
from .solver import (
    TkResult,
    bruteforce_profile,
    enumerate_max_cycles,
    enumerate_max_trees,
    heuristic_k_ended,
    min_leaf_count_spanning,
    t_k_bruteforce,
    t_k_exact,
    t_profile,
    t_values,
)
from .transforms import (
    ExchangeResult,
    Outcome,
    ReplayReport,
    exchange,
    leaf_edge_reduction,
    proof_replay,
    prune_shortest_tailing,
    tailing_swap,
)
from .trees import (
    SubTree,
    TailingDecomposition,
    branch_vertices,
    dominates,
    is_dominating,
    is_independence_tree,
    leaves,
    spanning_trees,
    tailings,
)

__version__ = "0.1.0"
