#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pba {

// Densities are clamped from below at 2^kLogDensityFloor so the CDF stays
// strictly increasing and log-beliefs stay finite over long runs.
inline constexpr double kLogDensityFloor = -60.0;

class BeliefDensity;
struct QueryPoint;
struct UpdateResult;
struct AverageResult;

UpdateResult bayes_update(const BeliefDensity& belief, QueryPoint query, int response,
                          double epsilon);
AverageResult geometric_average(std::span<const BeliefDensity> beliefs,
                                std::span<const double> weights);

// Piecewise-constant probability density on [0,1]: grid_size() uniform cells,
// cell k covering [k/M, (k+1)/M), right-closed at x = 1. Cell values are kept
// in log2 form plus a linear mirror (density()[k] == exp2(log_density()[k]))
// used for CDF and integral work. Every instance is normalized:
// sum(density)/M == 1 up to the floor clamp.
class BeliefDensity {
public:
    // Density 1 everywhere (log2 density 0).
    static BeliefDensity uniform(std::size_t grid_size);

    // Normalizes the given log2 cell values. -inf entries are allowed on
    // input and end up at the floor.
    explicit BeliefDensity(std::vector<double> log_density);

    // Normalizes the given linear cell values (all >= 0, not all zero).
    static BeliefDensity from_density(std::vector<double> density);

    std::size_t grid_size() const { return log_density_.size(); }
    std::span<const double> log_density() const { return log_density_; }
    std::span<const double> density() const { return density_; }

    // Density of the cell containing x.
    double density_at(double x) const;
    double log_density_at(double x) const;
    // F(x) = integral of the density over [0, x].
    double cdf_at(double x) const;
    // sum(density)/M; equals 1 up to the floor clamp.
    double integral() const;

private:
    BeliefDensity() = default;

    struct Normalized;
    // Shifted log-sum-exp normalization of raw log2 values, then floor clamp
    // and linear mirror rebuild.
    static Normalized normalize(std::vector<double> log_values);

    std::size_t cell_of(double x) const;

    std::vector<double> log_density_;
    std::vector<double> density_;

    friend UpdateResult bayes_update(const BeliefDensity&, QueryPoint, int, double);
    friend AverageResult geometric_average(std::span<const BeliefDensity>,
                                           std::span<const double>);
};

// Posterior median F^{-1}(1/2); the right edge of the queried interval
// [0, x_hat].
struct QueryPoint {
    double x_hat;
};

struct UpdateResult {
    BeliefDensity belief;
    // Integral of p * 2l before renormalization. Equals 1 whenever the query
    // point is the exact median of p.
    double prenorm_integral;
};

struct AverageResult {
    BeliefDensity belief;
    // log2 of the pre-normalization integral (the amount subtracted from the
    // averaged log-density). Nonpositive for stochastic weights by Jensen's
    // inequality.
    double log_integral;
};

// Median of the belief: locates the cell where cumulative mass crosses 1/2
// and interpolates linearly inside it (exact, density is constant per cell).
QueryPoint bisect(const BeliefDensity& belief);

}  // namespace pba
