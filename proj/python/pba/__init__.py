"""Distributed probabilistic bisection over agent networks.

Grid beliefs with log-domain updates, binary-symmetric-channel responses,
gossip-style log-belief averaging, and a seeded Monte Carlo experiment
runner. Everything is implemented in the C++ core; this package re-exports
the bindings.
"""

from ._pba import (
    AggregateSummary,
    AlgorithmVariant,
    BeliefDensity,
    ExperimentConfig,
    ExperimentResult,
    NetworkMode,
    ResponseOracle,
    SocialNetwork,
    TrialTrace,
    VariantResult,
    VariantSelection,
    WeightRule,
    aggregate,
    assign_errors_by_centrality,
    bayes_update,
    bisect,
    capacity,
    default_slope_window,
    geometric_average,
    load_config_file,
    master_network,
    mse_avg,
    mse_max,
    random_geometric_graph,
    rate_bound,
    run_experiment,
    run_trial,
    slope,
    stationary_distribution,
    trial_seed,
    validate,
    write_outputs,
)

__all__ = [
    "AggregateSummary",
    "AlgorithmVariant",
    "BeliefDensity",
    "ExperimentConfig",
    "ExperimentResult",
    "NetworkMode",
    "ResponseOracle",
    "SocialNetwork",
    "TrialTrace",
    "VariantResult",
    "VariantSelection",
    "WeightRule",
    "aggregate",
    "assign_errors_by_centrality",
    "bayes_update",
    "bisect",
    "capacity",
    "default_slope_window",
    "geometric_average",
    "load_config_file",
    "master_network",
    "mse_avg",
    "mse_max",
    "random_geometric_graph",
    "rate_bound",
    "run_experiment",
    "run_trial",
    "slope",
    "stationary_distribution",
    "trial_seed",
    "validate",
    "write_outputs",
]
