#pragma once

#include <cstdint>
#include <vector>

#include "pba/belief.hpp"
#include "pba/channel.hpp"
#include "pba/config.hpp"
#include "pba/metrics.hpp"
#include "pba/network.hpp"
#include "pba/variant.hpp"

namespace pba {

// One synchronized simulation: per-agent beliefs plus the oracle and network
// they evolve against. A state at round t is a deterministic function of its
// construction arguments.
struct SimulationState {
    std::size_t round = 0;
    std::vector<BeliefDensity> beliefs;
    ResponseOracle oracle;
    SocialNetwork network;
};

// Uniform beliefs at round 0.
SimulationState make_initial_state(SocialNetwork network, ResponseOracle oracle,
                                   std::size_t grid_size);

// Everything one round produced, for tracing and diagnostics.
struct StepRecord {
    std::vector<double> query_points;
    std::vector<int> responses;
    std::vector<double> prenorm_integrals;  // should be 1 (the median normalizer identity)
    std::vector<double> d_terms;            // log-averaging normalizers; social variant only
};

// Advances the state one round. Stage 1 (every variant): each agent bisects
// its round-t belief, gets a noisy response, applies the Bayes update.
// Stage 2: social averages log-beliefs per network row, no-collab skips,
// linear mixes beliefs arithmetically. Stage 1 reads only round-t beliefs
// (synchronous update).
StepRecord step(SimulationState& state, AlgorithmVariant variant);

// Derived seed of a trial under a master seed.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial_index);

// The network a run uses: a random geometric graph for n_agents >= 2, the
// trivial one-node network otherwise.
SocialNetwork build_network(const ExperimentConfig& config, std::uint64_t network_seed);

// The network every trial shares in fixed mode, derived from the master
// seed. Per-trial runs derive fresh ones from each trial seed instead.
SocialNetwork master_network(const ExperimentConfig& config);

// Runs one full trial: builds the network (fixed mode rebuilds the same one
// from the master seed), assigns error probabilities by centrality, draws
// the target, then executes config.horizon rounds. config.variant must be a
// single variant, not "all".
TrialTrace run_trial(const ExperimentConfig& config, std::uint64_t seed);

}  // namespace pba
