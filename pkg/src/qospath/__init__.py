"""QoS-constrained network path algorithms.

A catalog of routing-flavoured graph algorithms: budget-constrained
two-weight ("bicriteria") path search by Lagrangian multiplier probing,
shortest-path and knapsack sensitivity classification, Hamiltonian paths
in tournaments and in graph cubes, exact small-graph subset-DP paths and
cycles, and color-alternating optimal paths and Euler cycles.  Each fast
algorithm is paired with an exhaustive oracle in :mod:`qospath.oracles`
for verification at small scale.
"""

from .graphs import (
    BiweightedDigraph,
    ColoredDigraph,
    ColoredMultigraph,
    CycleResult,
    GraphFormatError,
    PathResult,
    WeightedDigraph,
    WeightedGraph,
    parse_graph,
    serialize_graph,
    transpose,
    undirected_to_directed,
)
from .bicriteria import (
    BicriteriaAnswer,
    ConstrainedQuery,
    CycleError,
    NegativeCycleError,
    Objective,
    Sense,
    StateCapError,
    Status,
    dag_optimal_path,
    exact_constrained,
    probe_x_min,
    shortest_path_at_x,
    solve_constrained,
)
from .path_sensitivity import (
    DistanceLabels,
    ElementClassification,
    classify_undirected,
    classify_unit,
    classify_weighted,
    distance_labels,
)
from .knapsack_sensitivity import (
    KnapsackInstance,
    classify_by_removal,
    classify_feasibility,
    classify_mincost,
)
from .tournament import (
    STRATEGIES,
    TournamentOracle,
    ham_path,
    matrix_tournament,
    random_tournament,
    verify_ham_path,
)
from .subset_path import min_q_cycle, min_q_path
from .cube_ham import consecutive_distances, cube_ham_path, verify_cube_path
from .color_alt_path import alt_path_expanded, alt_path_two_best
from .color_alt_euler import (
    FeasibilityReport,
    build_alt_euler,
    check_feasible,
    pair_objects,
    verify_alt_euler,
)

__version__ = "0.1.0"
