#pragma once

#include <vector>

#include "pba/config.hpp"
#include "pba/engine.hpp"
#include "pba/metrics.hpp"

namespace pba {

struct VariantResult {
    AlgorithmVariant variant;
    std::vector<TrialTrace> traces;  // in trial order
    AggregateSummary summary;
};

struct ExperimentResult {
    SocialNetwork network;  // the master-seed network (per-trial mode: representative)
    StationaryDistribution centrality;
    std::vector<double> epsilons;
    double rate_bound_value = 0.0;
    std::vector<VariantResult> variants;
};

// Number of worker threads a run will use: `requested` if positive, else the
// PBA_THREADS environment variable, else the hardware count (capped at 8).
unsigned resolve_thread_count(unsigned requested);

// Runs every selected variant over n_trials seeded trials. Trials are
// dispatched to a worker pool; results are identical for any thread count.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned n_threads = 0);

// Writes network.edges, nodes.csv, mse.csv, concentration.csv and
// summary.csv under config.output_dir (created if needed).
void write_outputs(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace pba
