#include "pba/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pba {

namespace {

void check_round(const TrialTrace& trace, std::size_t t) {
    if (t > trace.horizon) {
        throw std::out_of_range("round " + std::to_string(t) + " exceeds horizon " +
                                std::to_string(trace.horizon));
    }
}

// Sample standard error of the mean; 0 for fewer than two samples.
double standard_error(std::span<const double> xs, double mean) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    const double n = static_cast<double>(xs.size());
    return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

double mse_avg(const TrialTrace& trace, std::size_t t) {
    check_round(trace, t);
    double s = 0.0;
    for (std::size_t i = 0; i < trace.n_agents; ++i) {
        const double e = trace.query(t, i) - trace.target;
        s += e * e;
    }
    return s / static_cast<double>(trace.n_agents);
}

double mse_max(const TrialTrace& trace, std::size_t t) {
    check_round(trace, t);
    double worst = 0.0;
    for (std::size_t i = 0; i < trace.n_agents; ++i) {
        const double e = trace.query(t, i) - trace.target;
        worst = std::max(worst, e * e);
    }
    return worst;
}

SlopeWindow default_slope_window(std::size_t horizon) {
    return SlopeWindow{horizon - (2 * horizon) / 3, horizon};
}

double slope(const TrialTrace& trace, std::size_t agent, SlopeWindow window) {
    if (agent >= trace.n_agents) {
        throw std::out_of_range("slope: agent index out of range");
    }
    if (window.t0 >= window.t1 || window.t1 > trace.horizon) {
        throw std::invalid_argument("slope: window must satisfy t0 < t1 <= horizon");
    }
    const std::size_t points = window.t1 - window.t0 + 1;
    if (points < 3) {
        throw std::invalid_argument("slope: window too short, need at least 3 points");
    }

    const double t_mean = (static_cast<double>(window.t0) + static_cast<double>(window.t1)) / 2.0;
    double y_mean = 0.0;
    for (std::size_t t = window.t0; t <= window.t1; ++t) {
        y_mean += trace.log_p(t, agent);
    }
    y_mean /= static_cast<double>(points);

    double cov = 0.0;
    double var = 0.0;
    for (std::size_t t = window.t0; t <= window.t1; ++t) {
        const double dt = static_cast<double>(t) - t_mean;
        cov += dt * (trace.log_p(t, agent) - y_mean);
        var += dt * dt;
    }
    return cov / var;
}

AggregateSummary aggregate(std::span<const TrialTrace> traces) {
    if (traces.empty()) {
        throw std::invalid_argument("aggregate: need at least one trace");
    }
    const std::size_t n = traces.front().n_agents;
    const std::size_t horizon = traces.front().horizon;
    for (const auto& tr : traces) {
        if (tr.n_agents != n || tr.horizon != horizon) {
            throw std::invalid_argument("aggregate: traces have inconsistent dimensions");
        }
    }

    AggregateSummary out;
    out.n_agents = n;
    out.horizon = horizon;
    out.n_trials = traces.size();

    std::vector<double> samples(traces.size());
    for (std::size_t t = 0; t <= horizon; ++t) {
        for (std::size_t k = 0; k < traces.size(); ++k) {
            samples[k] = mse_avg(traces[k], t);
        }
        double mean = 0.0;
        for (double x : samples) {
            mean += x;
        }
        mean /= static_cast<double>(samples.size());
        out.mean_mse_avg.push_back(mean);
        out.stderr_mse_avg.push_back(standard_error(samples, mean));

        for (std::size_t k = 0; k < traces.size(); ++k) {
            samples[k] = mse_max(traces[k], t);
        }
        mean = 0.0;
        for (double x : samples) {
            mean += x;
        }
        mean /= static_cast<double>(samples.size());
        out.mean_mse_max.push_back(mean);
        out.stderr_mse_max.push_back(standard_error(samples, mean));
    }

    const SlopeWindow window = default_slope_window(horizon);
    const bool can_fit = window.t1 > window.t0 && window.t1 - window.t0 + 1 >= 3;
    for (std::size_t i = 0; i < n; ++i) {
        if (!can_fit) {
            out.mean_slope.push_back(std::numeric_limits<double>::quiet_NaN());
            out.stderr_slope.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        for (std::size_t k = 0; k < traces.size(); ++k) {
            samples[k] = slope(traces[k], i, window);
        }
        double mean = 0.0;
        for (double x : samples) {
            mean += x;
        }
        mean /= static_cast<double>(samples.size());
        out.mean_slope.push_back(mean);
        out.stderr_slope.push_back(standard_error(samples, mean));
    }
    return out;
}

}  // namespace pba
