#include <doctest.h>

#include <cmath>
#include <vector>

#include "pba/engine.hpp"

using namespace pba;

namespace {

// Identity-mixing network: no edges, every row a standard basis vector.
// Built directly (a disconnected relation is rejected by the generators) to
// pin down the no-collaboration equivalences.
SocialNetwork identity_network(std::size_t n) {
    SocialNetwork net;
    net.n_agents = n;
    net.adjacency.assign(n * n, 0);
    net.weights.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        net.weights[i * n + i] = 1.0;
    }
    net.positions.assign(n, {0.5, 0.5});
    return net;
}

SocialNetwork complete_network(std::size_t n) {
    std::vector<std::uint8_t> adj(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        adj[i * n + i] = 0;
    }
    return network_from_adjacency(n, std::move(adj));
}

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.n_agents = 6;
    cfg.grid_size = 64;
    cfg.horizon = 10;
    cfg.n_trials = 3;
    cfg.radius = 0.6;
    cfg.variant = VariantSelection::SocialLearning;
    cfg.master_seed = 12;
    return cfg;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("no-collaboration is bit-identical to social learning on identity weights") {
    const std::vector<double> eps{0.3, 0.1, 0.4};
    SimulationState social = make_initial_state(identity_network(3),
                                                ResponseOracle(0.37, eps, 21), 32);
    SimulationState solo = make_initial_state(identity_network(3),
                                              ResponseOracle(0.37, eps, 21), 32);
    for (int round = 0; round < 5; ++round) {
        step(social, AlgorithmVariant::SocialLearning);
        step(solo, AlgorithmVariant::NoCollaboration);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto a = social.beliefs[i].log_density();
            const auto b = solo.beliefs[i].log_density();
            for (std::size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k] == b[k]);
            }
        }
    }
}

TEST_CASE("linear consensus on identity weights is bit-identical to no-collaboration") {
    const std::vector<double> eps{0.3, 0.1};
    SimulationState linear = make_initial_state(identity_network(2),
                                                ResponseOracle(0.8, eps, 5), 32);
    SimulationState solo = make_initial_state(identity_network(2),
                                              ResponseOracle(0.8, eps, 5), 32);
    for (int round = 0; round < 5; ++round) {
        step(linear, AlgorithmVariant::LinearConsensus);
        step(solo, AlgorithmVariant::NoCollaboration);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto a = linear.beliefs[i].log_density();
            const auto b = solo.beliefs[i].log_density();
            for (std::size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k] == b[k]);
            }
        }
    }
}

TEST_CASE("one truthful step from a uniform prior reproduces the hand update") {
    // Find a seed whose first agent-0 draw answers truthfully; the query is
    // 0.5 and the target 0.3, so the truthful response is 1.
    for (std::uint64_t seed = 0;; ++seed) {
        REQUIRE(seed < 50);
        ResponseOracle probe(0.3, {0.1}, seed);
        if (probe.respond(0, QueryPoint{0.5}) != 1) {
            continue;
        }
        SimulationState state = make_initial_state(identity_network(1),
                                                   ResponseOracle(0.3, {0.1}, seed), 4);
        const StepRecord rec = step(state, AlgorithmVariant::SocialLearning);
        CHECK(rec.query_points[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(rec.responses[0] == 1);
        CHECK(rec.prenorm_integrals[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(state.beliefs[0].density_at(0.25) == doctest::Approx(1.8).epsilon(1e-12));
        CHECK(state.beliefs[0].density_at(0.75) == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(state.round == 1);
        break;
    }
}

TEST_CASE("stage 2 consumes only round-t updates (synchronous semantics)") {
    const std::vector<double> eps{0.2, 0.35, 0.12, 0.4};
    const auto net = complete_network(4);
    SimulationState state = make_initial_state(net, ResponseOracle(0.55, eps, 17), 64);

    // Replay stage 1 by hand against a twin oracle, then average the stage-1
    // outputs; the engine must produce exactly this.
    ResponseOracle twin(0.55, eps, 17);
    std::vector<BeliefDensity> tilde;
    for (std::size_t i = 0; i < 4; ++i) {
        const QueryPoint q = bisect(state.beliefs[i]);
        const int y = twin.respond(i, q);
        tilde.push_back(bayes_update(state.beliefs[i], q, y, eps[i]).belief);
    }
    std::vector<BeliefDensity> expected;
    for (std::size_t i = 0; i < 4; ++i) {
        expected.push_back(geometric_average(tilde, net.row(i)).belief);
    }

    step(state, AlgorithmVariant::SocialLearning);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto got = state.beliefs[i].log_density();
        const auto want = expected[i].log_density();
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k] == want[k]);
        }
    }
}

TEST_CASE("run_trial at horizon zero records only the uniform-prior state") {
    ExperimentConfig cfg = small_config();
    cfg.horizon = 0;
    const TrialTrace trace = run_trial(cfg, trial_seed(cfg.master_seed, 0));
    CHECK(trace.horizon == 0);
    CHECK(trace.query_points.size() == cfg.n_agents);
    CHECK(trace.log_belief_at_target.size() == cfg.n_agents);
    CHECK(trace.averaging_rounds() == 0);
    for (std::size_t i = 0; i < cfg.n_agents; ++i) {
        CHECK(trace.query(0, i) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(trace.log_p(0, i) == 0.0);
    }
}

TEST_CASE("run_trial is a pure function of config and seed") {
    const ExperimentConfig cfg = small_config();
    const TrialTrace a = run_trial(cfg, trial_seed(cfg.master_seed, 3));
    const TrialTrace b = run_trial(cfg, trial_seed(cfg.master_seed, 3));
    CHECK(a.target == b.target);
    CHECK(a.query_points == b.query_points);
    CHECK(a.log_belief_at_target == b.log_belief_at_target);
    CHECK(a.d_terms == b.d_terms);

    const TrialTrace c = run_trial(cfg, trial_seed(cfg.master_seed, 4));
    CHECK(a.query_points != c.query_points);
}

TEST_CASE("run_trial records nonpositive averaging normalizers and finite log-beliefs") {
    ExperimentConfig cfg = small_config();
    cfg.horizon = 20;
    const TrialTrace trace = run_trial(cfg, trial_seed(cfg.master_seed, 1));
    CHECK(trace.averaging_rounds() == 20);
    for (double d : trace.d_terms) {
        CHECK(d <= 1e-12);
    }
    for (double lp : trace.log_belief_at_target) {
        CHECK(std::isfinite(lp));
        CHECK(lp >= pba::kLogDensityFloor);
    }
    for (double q : trace.query_points) {
        CHECK(q >= 0.0);
        CHECK(q <= 1.0);
    }
}

TEST_CASE("no-collaboration trials record no averaging normalizers") {
    ExperimentConfig cfg = small_config();
    cfg.variant = VariantSelection::NoCollaboration;
    const TrialTrace trace = run_trial(cfg, trial_seed(cfg.master_seed, 0));
    CHECK(trace.averaging_rounds() == 0);
}

TEST_CASE("run_trial rejects the all-variants selection") {
    ExperimentConfig cfg = small_config();
    cfg.variant = VariantSelection::All;
    CHECK_THROWS_AS(run_trial(cfg, 1), std::invalid_argument);
}

TEST_CASE("fixed network mode shares one graph across trials") {
    ExperimentConfig cfg = small_config();
    cfg.network_mode = NetworkMode::Fixed;
    const auto net = master_network(cfg);
    // Distinct trial seeds, same adjacency: targets differ but the network,
    // and hence round-0 behavior, is shared.
    const TrialTrace a = run_trial(cfg, trial_seed(cfg.master_seed, 0));
    const TrialTrace b = run_trial(cfg, trial_seed(cfg.master_seed, 1));
    CHECK(a.target != b.target);
    CHECK(net.n_agents == cfg.n_agents);
}

TEST_CASE("fixed target pins the trial target") {
    ExperimentConfig cfg = small_config();
    cfg.fixed_target = 0.3;
    const TrialTrace trace = run_trial(cfg, trial_seed(cfg.master_seed, 2));
    CHECK(trace.target == 0.3);
}

}  // TEST_SUITE
