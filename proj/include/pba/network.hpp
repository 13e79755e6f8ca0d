#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pba/rng.hpp"

namespace pba {

// How a row-stochastic interaction matrix is built from an undirected graph.
// Both rules include a self-loop on every node, which keeps the chain
// aperiodic.
enum class WeightRule {
    ClosedNeighborhood,  // A_ij = 1/(deg(i)+1) over neighbors and self
    Metropolis,          // A_ij = 1/(1+max(deg(i),deg(j))), remainder on the diagonal
};

// Agent graph plus its row-stochastic interaction matrix. adjacency is the
// symmetric edge relation without self-loops; weights has A_ij > 0 exactly
// for edges and the diagonal.
struct SocialNetwork {
    std::size_t n_agents = 0;
    std::vector<std::uint8_t> adjacency;           // n x n, row-major
    std::vector<double> weights;                   // n x n, row-major
    std::vector<std::array<double, 2>> positions;  // unit-square coordinates

    bool edge(std::size_t i, std::size_t j) const { return adjacency[i * n_agents + j] != 0; }
    double weight(std::size_t i, std::size_t j) const { return weights[i * n_agents + j]; }
    std::span<const double> row(std::size_t i) const {
        return {weights.data() + i * n_agents, n_agents};
    }
};

// Left eigenvector of the interaction matrix at eigenvalue 1, normalized to
// sum 1 (eigenvector centrality of the agents).
struct StationaryDistribution {
    std::vector<double> v;
};

// Row-stochastic weights from a symmetric, connected adjacency relation.
// Throws on asymmetric or disconnected input.
std::vector<double> stochasticize(const std::vector<std::uint8_t>& adjacency, std::size_t n,
                                  WeightRule rule = WeightRule::ClosedNeighborhood);

// Assembles a network from an explicit adjacency relation (test fixtures,
// single-agent runs). Positions default to the square's center.
SocialNetwork network_from_adjacency(std::size_t n, std::vector<std::uint8_t> adjacency,
                                     WeightRule rule = WeightRule::ClosedNeighborhood,
                                     std::vector<std::array<double, 2>> positions = {});

// n points uniform in the unit square, edges between pairs at Euclidean
// distance <= radius. Resamples whole graphs until connected; throws after
// max_retries failures (radius too small).
SocialNetwork random_geometric_graph(std::size_t n, double radius, Rng& rng,
                                     WeightRule rule = WeightRule::ClosedNeighborhood,
                                     int max_retries = 1000);

// Left power iteration from the uniform vector until the residual
// max|vA - v| drops to 1e-12 (iteration cap 1e6).
StationaryDistribution stationary_distribution(const SocialNetwork& network);

// Theorem rate exponent: sum_i v_i * capacity(epsilon_i), bits per round.
double rate_bound(const StationaryDistribution& v, std::span<const double> epsilons);

// The n_low agents with the largest stationary weights get low_eps (ties by
// lowest index); everyone else gets high_eps.
std::vector<double> assign_errors_by_centrality(const SocialNetwork& network, double low_eps,
                                                double high_eps, std::size_t n_low);

// Plain-text edge list, one "i j" pair per line, 0-indexed, i < j.
void write_edge_list(const SocialNetwork& network, std::ostream& out);

// Node table CSV: i,x,y,epsilon,v.
void write_node_table(const SocialNetwork& network, std::span<const double> epsilons,
                      const StationaryDistribution& v, std::ostream& out);

}  // namespace pba
