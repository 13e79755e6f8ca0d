#include "pba/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pba {

namespace {

// Salts for the independent streams hanging off a trial seed.
constexpr std::uint64_t kTrialSalt = 0x747269616c00ULL;    // master -> trial
constexpr std::uint64_t kNetworkSalt = 0x6e6574776bULL;    // trial/master -> graph sampling
constexpr std::uint64_t kTargetSalt = 0x746172676574ULL;   // trial -> X*
constexpr std::uint64_t kOracleSalt = 0x6f7261636c65ULL;   // trial -> response streams

constexpr double kPrenormTolerance = 1e-6;

AlgorithmVariant to_algorithm(VariantSelection selection) {
    switch (selection) {
        case VariantSelection::SocialLearning:
            return AlgorithmVariant::SocialLearning;
        case VariantSelection::NoCollaboration:
            return AlgorithmVariant::NoCollaboration;
        case VariantSelection::LinearConsensus:
            return AlgorithmVariant::LinearConsensus;
        case VariantSelection::All:
            break;
    }
    throw std::invalid_argument("run_trial: config.variant must name a single variant");
}

}  // namespace

SimulationState make_initial_state(SocialNetwork network, ResponseOracle oracle,
                                   std::size_t grid_size) {
    if (oracle.n_agents() != network.n_agents) {
        throw std::invalid_argument("make_initial_state: oracle and network sizes differ");
    }
    SimulationState state{0, {}, std::move(oracle), std::move(network)};
    state.beliefs.reserve(state.network.n_agents);
    for (std::size_t i = 0; i < state.network.n_agents; ++i) {
        state.beliefs.push_back(BeliefDensity::uniform(grid_size));
    }
    return state;
}

StepRecord step(SimulationState& state, AlgorithmVariant variant) {
    const std::size_t n = state.network.n_agents;
    StepRecord record;
    record.query_points.resize(n);
    record.responses.resize(n);
    record.prenorm_integrals.resize(n);

    // Stage 1: query, respond, update. Inputs are the round-t beliefs only.
    std::vector<BeliefDensity> updated;
    updated.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const QueryPoint q = bisect(state.beliefs[i]);
        const int y = state.oracle.respond(i, q);
        UpdateResult ur = bayes_update(state.beliefs[i], q, y, state.oracle.epsilons()[i]);
        if (std::abs(ur.prenorm_integral - 1.0) > kPrenormTolerance) {
            throw std::logic_error("step: update normalizer drifted from 1 at the median");
        }
        record.query_points[i] = q.x_hat;
        record.responses[i] = y;
        record.prenorm_integrals[i] = ur.prenorm_integral;
        updated.push_back(std::move(ur.belief));
    }

    // Stage 2.
    switch (variant) {
        case AlgorithmVariant::NoCollaboration:
            state.beliefs = std::move(updated);
            break;
        case AlgorithmVariant::SocialLearning: {
            record.d_terms.resize(n);
            std::vector<BeliefDensity> mixed;
            mixed.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                AverageResult ar = geometric_average(updated, state.network.row(i));
                record.d_terms[i] = ar.log_integral;
                mixed.push_back(std::move(ar.belief));
            }
            state.beliefs = std::move(mixed);
            break;
        }
        case AlgorithmVariant::LinearConsensus: {
            const std::size_t m = updated.front().grid_size();
            std::vector<BeliefDensity> mixed;
            mixed.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto row = state.network.row(i);
                // An exact basis row is an identity, matching the log-domain
                // averaging convention.
                std::size_t unit = n;
                bool basis = true;
                for (std::size_t j = 0; j < n && basis; ++j) {
                    if (row[j] == 1.0 && unit == n) {
                        unit = j;
                    } else if (row[j] != 0.0) {
                        basis = false;
                    }
                }
                if (basis && unit < n) {
                    mixed.push_back(updated[unit]);
                    continue;
                }
                std::vector<double> mix(m, 0.0);
                for (std::size_t j = 0; j < n; ++j) {
                    const double w = row[j];
                    if (w == 0.0) {
                        continue;
                    }
                    const auto d = updated[j].density();
                    for (std::size_t k = 0; k < m; ++k) {
                        mix[k] += w * d[k];
                    }
                }
                mixed.push_back(BeliefDensity::from_density(std::move(mix)));
            }
            state.beliefs = std::move(mixed);
            break;
        }
    }

    ++state.round;
    return record;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial_index) {
    return derive_seed(derive_seed(master_seed, kTrialSalt), trial_index);
}

SocialNetwork build_network(const ExperimentConfig& config, std::uint64_t network_seed) {
    if (config.n_agents == 1) {
        return network_from_adjacency(1, {0}, config.weight_rule);
    }
    Rng rng(network_seed);
    return random_geometric_graph(config.n_agents, config.radius, rng, config.weight_rule);
}

SocialNetwork master_network(const ExperimentConfig& config) {
    return build_network(config, derive_seed(config.master_seed, kNetworkSalt));
}

TrialTrace run_trial(const ExperimentConfig& config, std::uint64_t seed) {
    const AlgorithmVariant variant = to_algorithm(config.variant);

    const std::uint64_t network_seed =
        config.network_mode == NetworkMode::Fixed
            ? derive_seed(config.master_seed, kNetworkSalt)
            : derive_seed(seed, kNetworkSalt);
    SocialNetwork network = build_network(config, network_seed);
    std::vector<double> epsilons =
        assign_errors_by_centrality(network, config.low_eps, config.high_eps, config.n_low);

    const double target = config.fixed_target
                              ? *config.fixed_target
                              : Rng(derive_seed(seed, kTargetSalt)).next_unit();
    ResponseOracle oracle(target, std::move(epsilons), derive_seed(seed, kOracleSalt));

    const std::size_t n = network.n_agents;
    SimulationState state = make_initial_state(std::move(network), std::move(oracle),
                                               config.grid_size);

    TrialTrace trace;
    trace.n_agents = n;
    trace.horizon = config.horizon;
    trace.target = target;
    trace.query_points.reserve((config.horizon + 1) * n);
    trace.log_belief_at_target.reserve((config.horizon + 1) * n);

    for (std::size_t i = 0; i < n; ++i) {
        trace.log_belief_at_target.push_back(state.beliefs[i].log_density_at(target));
    }

    for (std::size_t t = 0; t < config.horizon; ++t) {
        StepRecord record = step(state, variant);
        trace.query_points.insert(trace.query_points.end(), record.query_points.begin(),
                                  record.query_points.end());
        for (std::size_t i = 0; i < n; ++i) {
            trace.log_belief_at_target.push_back(state.beliefs[i].log_density_at(target));
        }
        trace.d_terms.insert(trace.d_terms.end(), record.d_terms.begin(), record.d_terms.end());
    }

    // Row `horizon`: the medians the final beliefs would query.
    for (std::size_t i = 0; i < n; ++i) {
        trace.query_points.push_back(bisect(state.beliefs[i]).x_hat);
    }
    return trace;
}

}  // namespace pba
