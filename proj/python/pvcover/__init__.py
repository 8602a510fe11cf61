"""Partition vertex cover: knapsack-cover LP relaxation, threshold rounding and baselines."""

from ._core import (
    ExactResult,
    FractionalSolution,
    InfeasibleAfterRestartsError,
    Instance,
    InvariantError,
    ParseError,
    RoundedSolution,
    SolveReport,
    SolverError,
    VertexSelection,
    __version__,
    coverage,
    exact_solve,
    expected_round_cost,
    gap_row,
    generate_random,
    generate_star,
    greedy_solve,
    is_feasible,
    min_beta_sum,
    parse_instance,
    reduce_set_cover,
    separate_is_clean,
    serialize_instance,
    solve_lp1,
    solve_pvclp,
    solve_rounded,
    estimate_round_coverage,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
