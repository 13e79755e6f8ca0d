#pragma once

#include <cstddef>
#include <vector>

#include "pba/belief.hpp"
#include "pba/rng.hpp"

namespace testutil {

// Random normalized belief with one of several shapes: iid rough logs, a
// smooth log random walk, or a spiky density with most cells near the floor.
inline pba::BeliefDensity random_belief(pba::Rng& rng, std::size_t m) {
    std::vector<double> logs(m);
    switch (rng.next_u64() % 3) {
        case 0:
            for (auto& v : logs) {
                v = -25.0 + 30.0 * rng.next_unit();
            }
            break;
        case 1: {
            double level = 4.0 * rng.next_unit() - 2.0;
            for (auto& v : logs) {
                level += 2.0 * rng.next_unit() - 1.0;
                v = level;
            }
            break;
        }
        default: {
            for (auto& v : logs) {
                v = -80.0;  // below the floor; normalization clamps
            }
            const std::size_t spikes = 1 + rng.next_u64() % 3;
            for (std::size_t s = 0; s < spikes; ++s) {
                logs[rng.next_u64() % m] = 10.0 * rng.next_unit();
            }
            break;
        }
    }
    return pba::BeliefDensity(std::move(logs));
}

// Random weight vector, nonnegative, summing to 1.
inline std::vector<double> random_weights(pba::Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = rng.next_unit() + 1e-3;
        sum += x;
    }
    for (auto& x : w) {
        x /= sum;
    }
    // Make the sum exactly 1 within the library's tolerance.
    double s2 = 0.0;
    for (double x : w) {
        s2 += x;
    }
    w[0] += 1.0 - s2;
    return w;
}

}  // namespace testutil
