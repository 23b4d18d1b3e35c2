"""Exact solvers and complexity diagnostics for the airplane refueling problem."""

from .complexity import (
    BigCount,
    ComplexityReport,
    Regime,
    estimate_m,
    growth_ratio,
    heuristic_m,
    q_m_bound,
    q_m_exact,
    q_star,
)
from .core import (
    Airplane,
    AssumptionError,
    AssumptionParams,
    Instance,
    InstanceClass,
    Scalar,
    Schedule,
    as_scalar,
    classify,
    crossing_point,
    delta,
    integer_view,
    is_sequential_feasible,
    phi,
    phi_le,
    relabel_by_design_ratio,
    total_distance,
)
from .generator import (
    GeneratorParams,
    SplitMix64,
    benchmark_family,
    random_crossing,
    random_general,
    random_subset,
)
from .solvers import (
    GuardError,
    SearchMode,
    SearchOptions,
    Solution,
    brute_force,
    enumerate_sfs_oracle,
    greedy_sequential,
    sequential_search,
)

__version__ = "0.1.0"

__all__ = [
    "Airplane",
    "AssumptionError",
    "AssumptionParams",
    "BigCount",
    "ComplexityReport",
    "GeneratorParams",
    "GuardError",
    "Instance",
    "InstanceClass",
    "Regime",
    "Scalar",
    "Schedule",
    "SearchMode",
    "SearchOptions",
    "Solution",
    "SplitMix64",
    "as_scalar",
    "benchmark_family",
    "brute_force",
    "classify",
    "crossing_point",
    "delta",
    "enumerate_sfs_oracle",
    "estimate_m",
    "greedy_sequential",
    "growth_ratio",
    "heuristic_m",
    "integer_view",
    "is_sequential_feasible",
    "phi",
    "phi_le",
    "q_m_bound",
    "q_m_exact",
    "q_star",
    "random_crossing",
    "random_general",
    "random_subset",
    "relabel_by_design_ratio",
    "sequential_search",
    "total_distance",
    "__version__",
]
