#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pba {

// Per-round record of one Monte Carlo trial. Rows run t = 0..horizon; row 0
// describes the initial (uniform) beliefs. d_terms holds the log-averaging
// normalizers and has averaging_rounds() x n_agents entries (empty for
// variants that never average).
struct TrialTrace {
    std::size_t n_agents = 0;
    std::size_t horizon = 0;
    double target = 0.0;
    std::vector<double> query_points;          // (horizon+1) x n_agents
    std::vector<double> log_belief_at_target;  // (horizon+1) x n_agents
    std::vector<double> d_terms;               // averaging_rounds x n_agents

    double query(std::size_t t, std::size_t agent) const {
        return query_points[t * n_agents + agent];
    }
    double log_p(std::size_t t, std::size_t agent) const {
        return log_belief_at_target[t * n_agents + agent];
    }
    std::size_t averaging_rounds() const {
        return n_agents == 0 ? 0 : d_terms.size() / n_agents;
    }
};

// Mean over agents of the squared query error at round t.
double mse_avg(const TrialTrace& trace, std::size_t t);

// Worst agent's squared query error at round t.
double mse_max(const TrialTrace& trace, std::size_t t);

// Closed round window [t0, t1] for slope fits.
struct SlopeWindow {
    std::size_t t0;
    std::size_t t1;
};

// Last two-thirds of the horizon, excluding the early transient.
SlopeWindow default_slope_window(std::size_t horizon);

// Ordinary least-squares slope of log2 p_t(target) against t over the
// window, in bits per round. Needs at least 3 points.
double slope(const TrialTrace& trace, std::size_t agent, SlopeWindow window);

// Cross-trial summary: per-round means of mse_avg/mse_max with standard
// errors, and per-agent mean slopes over the default window (NaN when the
// horizon is too short to fit).
struct AggregateSummary {
    std::size_t n_agents = 0;
    std::size_t horizon = 0;
    std::size_t n_trials = 0;
    std::vector<double> mean_mse_avg;    // per round
    std::vector<double> mean_mse_max;    // per round
    std::vector<double> stderr_mse_avg;  // per round
    std::vector<double> stderr_mse_max;  // per round
    std::vector<double> mean_slope;      // per agent
    std::vector<double> stderr_slope;    // per agent
};

AggregateSummary aggregate(std::span<const TrialTrace> traces);

}  // namespace pba
