#include "pba/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pba {

namespace {

constexpr double kMaxRadius = 1.4142135623730951;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        if (!value.empty() && value[0] == '-') {
            throw std::invalid_argument("negative");
        }
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: expected unsigned integer for '" + key + "', got '" +
                                    value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: expected number for '" + key + "', got '" + value +
                                    "'");
    }
}

void check_eps(std::vector<std::string>& out, const char* field, double value) {
    if (!(value > 0.0 && value < 0.5)) {
        std::ostringstream msg;
        msg << field << ": must lie in (0, 0.5), got " << value;
        out.push_back(msg.str());
    }
}

}  // namespace

std::string to_string(NetworkMode mode) {
    return mode == NetworkMode::Fixed ? "fixed" : "per-trial";
}

NetworkMode parse_network_mode(const std::string& name) {
    if (name == "fixed") {
        return NetworkMode::Fixed;
    }
    if (name == "per-trial") {
        return NetworkMode::PerTrial;
    }
    throw std::invalid_argument("unknown network mode '" + name + "' (expected fixed|per-trial)");
}

std::string to_string(WeightRule rule) {
    return rule == WeightRule::ClosedNeighborhood ? "closed-neighborhood" : "metropolis";
}

WeightRule parse_weight_rule(const std::string& name) {
    if (name == "closed-neighborhood") {
        return WeightRule::ClosedNeighborhood;
    }
    if (name == "metropolis") {
        return WeightRule::Metropolis;
    }
    throw std::invalid_argument("unknown weight rule '" + name +
                                "' (expected closed-neighborhood|metropolis)");
}

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> violations;
    if (config.n_agents < 1) {
        violations.push_back("n_agents: must be >= 1");
    }
    if (config.grid_size < 2) {
        violations.push_back("grid_size: must be >= 2");
    }
    if (config.n_trials < 1) {
        violations.push_back("n_trials: must be >= 1");
    }
    if (!(config.radius > 0.0 && config.radius <= kMaxRadius)) {
        std::ostringstream msg;
        msg << "radius: must lie in (0, sqrt(2)], got " << config.radius;
        violations.push_back(msg.str());
    }
    check_eps(violations, "low_eps", config.low_eps);
    check_eps(violations, "high_eps", config.high_eps);
    if (config.n_low > config.n_agents) {
        violations.push_back("n_low: must not exceed n_agents");
    }
    if (config.fixed_target && !(*config.fixed_target >= 0.0 && *config.fixed_target <= 1.0)) {
        violations.push_back("fixed_target: must lie in [0, 1]");
    }
    if (config.output_dir.empty()) {
        violations.push_back("output_dir: must not be empty");
    }
    return violations;
}

void apply_key_value(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "n_agents") {
        config.n_agents = parse_u64(key, value);
    } else if (key == "grid_size") {
        config.grid_size = parse_u64(key, value);
    } else if (key == "horizon") {
        config.horizon = parse_u64(key, value);
    } else if (key == "n_trials") {
        config.n_trials = parse_u64(key, value);
    } else if (key == "radius") {
        config.radius = parse_double(key, value);
    } else if (key == "low_eps") {
        config.low_eps = parse_double(key, value);
    } else if (key == "high_eps") {
        config.high_eps = parse_double(key, value);
    } else if (key == "n_low") {
        config.n_low = parse_u64(key, value);
    } else if (key == "variant") {
        config.variant = parse_variant(value);
    } else if (key == "master_seed") {
        config.master_seed = parse_u64(key, value);
    } else if (key == "network_mode") {
        config.network_mode = parse_network_mode(value);
    } else if (key == "weight_rule") {
        config.weight_rule = parse_weight_rule(value);
    } else if (key == "fixed_target") {
        config.fixed_target = parse_double(key, value);
    } else if (key == "output_dir") {
        config.output_dir = value;
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot open '" + path + "'");
    }
    ExperimentConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " is not 'key = value'");
        }
        apply_key_value(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

}  // namespace pba
