"""Trace estimation via the n-copy controlled-SWAP test."""

from ._core import (  # noqa: F401
    DensityMatrix,
    MomentVector,
    OutcomeDistribution,
    PureState,
    ShotCounts,
    concurrence,
    density_of,
    exact_distribution_dense,
    exact_distribution_moments,
    exact_distribution_statevector,
    exp_trace,
    extend_moments,
    gibbs_cost,
    hybrid_estimate_exact,
    icem,
    make_ghz,
    make_w,
    moments,
    moments_from_distribution,
    moments_of_spectrum,
    newton_girard_coeffs,
    normalize_counts,
    outcome_index,
    outcome_string,
    plan_shots,
    q_concurrence,
    random_mixed,
    random_pure,
    reduced_density,
    run_hoeffding_experiment,
    run_mse_experiment,
    sample,
    trace_from_distribution,
    traces_from_counts,
    tsallis_q,
    von_neumann_entropy,
    word_cycle_type,
    word_trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
