#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pba/network.hpp"
#include "pba/variant.hpp"

namespace pba {

enum class NetworkMode {
    Fixed,     // one network, derived from the master seed, shared by all trials
    PerTrial,  // fresh network per trial, derived from each trial seed
};

std::string to_string(NetworkMode mode);
NetworkMode parse_network_mode(const std::string& name);

std::string to_string(WeightRule rule);
WeightRule parse_weight_rule(const std::string& name);

// All run parameters. Defaults reproduce the reference setup: 20 agents on a
// random geometric graph, two low-error agents at the most central nodes,
// 150 trials of 75 rounds.
struct ExperimentConfig {
    std::size_t n_agents = 20;
    std::size_t grid_size = 4096;
    std::size_t horizon = 75;
    std::size_t n_trials = 150;
    double radius = 0.35;
    double low_eps = 0.05;
    double high_eps = 0.40;
    std::size_t n_low = 2;
    VariantSelection variant = VariantSelection::All;
    std::uint64_t master_seed = 1;
    NetworkMode network_mode = NetworkMode::Fixed;
    WeightRule weight_rule = WeightRule::ClosedNeighborhood;
    std::optional<double> fixed_target;  // debugging aid; default draws X* per trial
    std::string output_dir = "out";
};

// Every range/consistency violation, one message per offending field; empty
// means the config is runnable.
std::vector<std::string> validate(const ExperimentConfig& config);

// "key = value" file, '#' comments, unknown keys rejected.
ExperimentConfig load_config_file(const std::string& path);

// Applies one key/value pair (the file loader's engine; also used by tests).
void apply_key_value(ExperimentConfig& config, const std::string& key, const std::string& value);

}  // namespace pba
