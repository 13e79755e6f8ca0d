#include "pba/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pba {

namespace {

// Compensated (Kahan) sum; keeps integral checks well below their tolerances
// even for large grids.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

void check_grid_size(std::size_t m) {
    if (m < 2) {
        throw std::invalid_argument("BeliefDensity: grid_size must be >= 2, got " +
                                    std::to_string(m));
    }
}

void check_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                    std::to_string(x));
    }
}

}  // namespace

struct BeliefDensity::Normalized {
    BeliefDensity belief;
    double log_integral;
};

BeliefDensity::Normalized BeliefDensity::normalize(std::vector<double> log_values) {
    check_grid_size(log_values.size());
    const std::size_t m = log_values.size();

    double mx = -std::numeric_limits<double>::infinity();
    for (double v : log_values) {
        if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
            throw std::invalid_argument("BeliefDensity: log density values must not be NaN/+inf");
        }
        mx = std::max(mx, v);
    }
    if (mx == -std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("BeliefDensity: density is identically zero");
    }

    KahanSum shifted;
    for (double v : log_values) {
        shifted.add(std::exp2(v - mx));
    }
    // Integral = 2^mx * sum(2^(v - mx)) / M.
    const double log_integral =
        mx + std::log2(shifted.value() / static_cast<double>(m));

    BeliefDensity out;
    out.log_density_ = std::move(log_values);
    out.density_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double ld = out.log_density_[k] - log_integral;
        if (ld < kLogDensityFloor) {
            ld = kLogDensityFloor;
        }
        out.log_density_[k] = ld;
        out.density_[k] = std::exp2(ld);
    }
    return Normalized{std::move(out), log_integral};
}

BeliefDensity BeliefDensity::uniform(std::size_t grid_size) {
    check_grid_size(grid_size);
    BeliefDensity out;
    out.log_density_.assign(grid_size, 0.0);
    out.density_.assign(grid_size, 1.0);
    return out;
}

BeliefDensity::BeliefDensity(std::vector<double> log_density)
    : BeliefDensity(normalize(std::move(log_density)).belief) {}

BeliefDensity BeliefDensity::from_density(std::vector<double> density) {
    check_grid_size(density.size());
    std::vector<double> logs(density.size());
    for (std::size_t k = 0; k < density.size(); ++k) {
        double d = density[k];
        if (std::isnan(d) || d < 0.0) {
            throw std::invalid_argument("BeliefDensity: density values must be >= 0");
        }
        logs[k] = std::log2(d);  // -inf for empty cells; floored by normalize
    }
    return normalize(std::move(logs)).belief;
}

std::size_t BeliefDensity::cell_of(double x) const {
    check_unit_interval(x, "x");
    const std::size_t m = grid_size();
    auto k = static_cast<std::size_t>(x * static_cast<double>(m));
    return std::min(k, m - 1);  // right-closed at x = 1
}

double BeliefDensity::density_at(double x) const { return density_[cell_of(x)]; }

double BeliefDensity::log_density_at(double x) const { return log_density_[cell_of(x)]; }

double BeliefDensity::cdf_at(double x) const {
    const std::size_t k = cell_of(x);
    const double m = static_cast<double>(grid_size());
    KahanSum below;
    for (std::size_t j = 0; j < k; ++j) {
        below.add(density_[j]);
    }
    const double into_cell = x - static_cast<double>(k) / m;
    return below.value() / m + density_[k] * into_cell;
}

double BeliefDensity::integral() const {
    KahanSum s;
    for (double d : density_) {
        s.add(d);
    }
    return s.value() / static_cast<double>(grid_size());
}

QueryPoint bisect(const BeliefDensity& belief) {
    const std::size_t m = belief.grid_size();
    const auto density = belief.density();
    const double dm = static_cast<double>(m);

    double below = 0.0;
    std::size_t k = m - 1;
    for (std::size_t j = 0; j < m; ++j) {
        const double next = below + density[j] / dm;
        if (next >= 0.5) {
            k = j;
            break;
        }
        below = next;
    }
    // F(k/M + u) = below + density[k] * u; solve for F = 1/2. density > 0 by
    // the floor clamp, so the median is unique.
    double x = static_cast<double>(k) / dm + (0.5 - below) / density[k];
    x = std::clamp(x, static_cast<double>(k) / dm, static_cast<double>(k + 1) / dm);
    return QueryPoint{std::clamp(x, 0.0, 1.0)};
}

UpdateResult bayes_update(const BeliefDensity& belief, QueryPoint query, int response,
                          double epsilon) {
    if (response != 0 && response != 1) {
        throw std::invalid_argument("bayes_update: response must be 0 or 1, got " +
                                    std::to_string(response));
    }
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw std::invalid_argument("bayes_update: epsilon must lie in (0, 0.5), got " +
                                    std::to_string(epsilon));
    }
    check_unit_interval(query.x_hat, "query.x_hat");

    const std::size_t m = belief.grid_size();
    const double dm = static_cast<double>(m);
    // Factor for x <= x_hat and its complement; 2l(x, y) from the response
    // model, scaled so the update is self-normalizing at the median.
    const double f_in = (response == 1) ? 2.0 * (1.0 - epsilon) : 2.0 * epsilon;
    const double f_out = 2.0 - f_in;

    const std::size_t j = std::min(static_cast<std::size_t>(query.x_hat * dm), m - 1);
    // Fraction of cell j lying at or below x_hat; the cell keeps the
    // mass-weighted mixture of the two factors.
    const double phi = std::clamp(query.x_hat * dm - static_cast<double>(j), 0.0, 1.0);
    const double f_mix = phi * f_in + (1.0 - phi) * f_out;

    const auto old_log = belief.log_density();
    const auto old_lin = belief.density();

    const double log_in = std::log2(f_in);
    const double log_out = std::log2(f_out);

    std::vector<double> logs(m);
    KahanSum prenorm;
    for (std::size_t k = 0; k < m; ++k) {
        const double f = (k < j) ? f_in : (k > j) ? f_out : f_mix;
        prenorm.add(old_lin[k] * f);
        logs[k] = old_log[k] + ((k < j) ? log_in : (k > j) ? log_out : std::log2(f_mix));
    }

    auto normalized = BeliefDensity::normalize(std::move(logs));
    return UpdateResult{std::move(normalized.belief), prenorm.value() / dm};
}

AverageResult geometric_average(std::span<const BeliefDensity> beliefs,
                                std::span<const double> weights) {
    if (beliefs.empty() || beliefs.size() != weights.size()) {
        throw std::invalid_argument("geometric_average: need one weight per belief");
    }
    const std::size_t m = beliefs.front().grid_size();
    for (const auto& b : beliefs) {
        if (b.grid_size() != m) {
            throw std::invalid_argument("geometric_average: mixed grid sizes");
        }
    }
    KahanSum wsum;
    for (double w : weights) {
        if (std::isnan(w) || w < 0.0) {
            throw std::invalid_argument("geometric_average: weights must be nonnegative");
        }
        wsum.add(w);
    }
    if (std::abs(wsum.value() - 1.0) > 1e-12) {
        throw std::invalid_argument("geometric_average: weights must sum to 1, got " +
                                    std::to_string(wsum.value()));
    }

    // An exact standard basis row is an identity: return that belief as-is.
    std::size_t unit_index = beliefs.size();
    bool is_basis_row = true;
    for (std::size_t i = 0; i < weights.size() && is_basis_row; ++i) {
        if (weights[i] == 1.0 && unit_index == beliefs.size()) {
            unit_index = i;
        } else if (weights[i] != 0.0) {
            is_basis_row = false;
        }
    }
    if (is_basis_row && unit_index < beliefs.size()) {
        return AverageResult{beliefs[unit_index], 0.0};
    }

    std::vector<double> avg(m, 0.0);
    for (std::size_t i = 0; i < beliefs.size(); ++i) {
        const double w = weights[i];
        if (w == 0.0) {
            continue;
        }
        const auto logs = beliefs[i].log_density();
        for (std::size_t k = 0; k < m; ++k) {
            avg[k] += w * logs[k];
        }
    }

    auto normalized = BeliefDensity::normalize(std::move(avg));
    return AverageResult{std::move(normalized.belief), normalized.log_integral};
}

}  // namespace pba
