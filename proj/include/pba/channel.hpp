#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pba/belief.hpp"
#include "pba/rng.hpp"

namespace pba {

// Capacity of the binary symmetric channel, 1 + e*log2(e) + (1-e)*log2(1-e),
// in bits per use. Domain (0, 1/2]; capacity(1/2) == 0.
double capacity(double epsilon);

// Hidden target plus per-agent BSC noise. Each agent gets its own seeded
// stream derived from the oracle seed by agent index, so responses are
// reproducible independently of evaluation order.
class ResponseOracle {
public:
    ResponseOracle(double target, std::vector<double> epsilons, std::uint64_t seed);

    double target() const { return target_; }
    std::span<const double> epsilons() const { return epsilons_; }
    std::size_t n_agents() const { return epsilons_.size(); }

    // 1 iff the target lies in [0, x_hat]; ties count as inside.
    int true_bit(QueryPoint query) const;

    // true_bit flipped with probability epsilons()[agent]; consumes one draw
    // from the agent's stream.
    int respond(std::size_t agent, QueryPoint query);

private:
    double target_;
    std::vector<double> epsilons_;
    std::vector<Rng> streams_;
};

}  // namespace pba
