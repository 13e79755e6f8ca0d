#include "pba/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pba/experiment.hpp"

namespace pba {

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Distributed probabilistic bisection simulator"};

    std::string config_path;
    std::optional<std::string> variant_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> horizon;
    std::optional<std::size_t> grid;
    std::optional<std::string> out_dir;
    std::optional<std::string> network_mode;
    std::optional<std::size_t> n_agents;
    std::optional<std::size_t> n_low;
    std::optional<double> low_eps;
    std::optional<double> high_eps;
    std::optional<double> radius;
    std::optional<std::string> weight_rule;
    std::optional<double> fixed_target;
    unsigned threads = 0;

    app.add_option("--config", config_path, "Config file (key = value lines); flags win");
    app.add_option("--variant", variant_name, "social|no-collab|linear|all");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--trials", trials, "Monte Carlo trials");
    app.add_option("--horizon", horizon, "Rounds per trial");
    app.add_option("--grid", grid, "Belief grid cells");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--network-mode", network_mode, "fixed|per-trial");
    app.add_option("--n-agents", n_agents, "Number of agents");
    app.add_option("--n-low", n_low, "Agents given the low error probability");
    app.add_option("--low-eps", low_eps, "Low error probability");
    app.add_option("--high-eps", high_eps, "High error probability");
    app.add_option("--radius", radius, "Geometric graph radius");
    app.add_option("--weight-rule", weight_rule, "closed-neighborhood|metropolis");
    app.add_option("--fixed-target", fixed_target, "Pin the target location (debugging)");
    app.add_option("--threads", threads, "Worker threads (default: PBA_THREADS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        ExperimentConfig config;
        if (!config_path.empty()) {
            config = load_config_file(config_path);
        }
        if (variant_name) {
            config.variant = parse_variant(*variant_name);
        }
        if (seed) {
            config.master_seed = *seed;
        }
        if (trials) {
            config.n_trials = *trials;
        }
        if (horizon) {
            config.horizon = *horizon;
        }
        if (grid) {
            config.grid_size = *grid;
        }
        if (out_dir) {
            config.output_dir = *out_dir;
        }
        if (network_mode) {
            config.network_mode = parse_network_mode(*network_mode);
        }
        if (n_agents) {
            config.n_agents = *n_agents;
        }
        if (n_low) {
            config.n_low = *n_low;
        }
        if (low_eps) {
            config.low_eps = *low_eps;
        }
        if (high_eps) {
            config.high_eps = *high_eps;
        }
        if (radius) {
            config.radius = *radius;
        }
        if (weight_rule) {
            config.weight_rule = parse_weight_rule(*weight_rule);
        }
        if (fixed_target) {
            config.fixed_target = *fixed_target;
        }

        const auto violations = validate(config);
        if (!violations.empty()) {
            std::fprintf(stderr, "invalid configuration:\n");
            for (const auto& v : violations) {
                std::fprintf(stderr, "  %s\n", v.c_str());
            }
            return 2;
        }

        const ExperimentResult result = run_experiment(config, threads);
        write_outputs(config, result);
        std::printf("wrote %s/{network.edges,nodes.csv,mse.csv,concentration.csv,summary.csv}\n",
                    config.output_dir.c_str());
        std::printf("agents=%zu trials=%zu horizon=%zu rate_bound=%.6f\n", config.n_agents,
                    config.n_trials, config.horizon, result.rate_bound_value);
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace pba
