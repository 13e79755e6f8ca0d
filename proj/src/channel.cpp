#include "pba/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pba {

double capacity(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.5)) {
        throw std::invalid_argument("capacity: epsilon must lie in (0, 0.5], got " +
                                    std::to_string(epsilon));
    }
    return 1.0 + epsilon * std::log2(epsilon) + (1.0 - epsilon) * std::log2(1.0 - epsilon);
}

ResponseOracle::ResponseOracle(double target, std::vector<double> epsilons, std::uint64_t seed)
    : target_(target), epsilons_(std::move(epsilons)) {
    if (!(target_ >= 0.0 && target_ <= 1.0)) {
        throw std::invalid_argument("ResponseOracle: target must lie in [0, 1]");
    }
    if (epsilons_.empty()) {
        throw std::invalid_argument("ResponseOracle: need at least one agent");
    }
    for (double e : epsilons_) {
        if (!(e > 0.0 && e < 0.5)) {
            throw std::invalid_argument(
                "ResponseOracle: error probabilities must lie strictly in (0, 0.5), got " +
                std::to_string(e));
        }
    }
    streams_.reserve(epsilons_.size());
    for (std::size_t i = 0; i < epsilons_.size(); ++i) {
        streams_.emplace_back(derive_seed(seed, i));
    }
}

int ResponseOracle::true_bit(QueryPoint query) const {
    if (!(query.x_hat >= 0.0 && query.x_hat <= 1.0)) {
        throw std::invalid_argument("true_bit: query must lie in [0, 1]");
    }
    return target_ <= query.x_hat ? 1 : 0;
}

int ResponseOracle::respond(std::size_t agent, QueryPoint query) {
    if (agent >= epsilons_.size()) {
        throw std::out_of_range("respond: agent index " + std::to_string(agent) +
                                " out of range");
    }
    const int z = true_bit(query);
    const bool flip = streams_[agent].next_unit() < epsilons_[agent];
    return flip ? 1 - z : z;
}

}  // namespace pba
