#include "pba/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pba/channel.hpp"

namespace pba {

namespace {

constexpr double kMaxRadius = 1.4142135623730951;  // sqrt(2), the square's diagonal

// Union-find over node indices.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

bool is_connected(const std::vector<std::uint8_t>& adjacency, std::size_t n) {
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacency[i * n + j]) {
                sets.unite(i, j);
            }
        }
    }
    const std::size_t root = sets.find(0);
    for (std::size_t i = 1; i < n; ++i) {
        if (sets.find(i) != root) {
            return false;
        }
    }
    return true;
}

std::size_t degree(const std::vector<std::uint8_t>& adjacency, std::size_t n, std::size_t i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        d += adjacency[i * n + j] != 0;
    }
    return d;
}

}  // namespace

std::vector<double> stochasticize(const std::vector<std::uint8_t>& adjacency, std::size_t n,
                                  WeightRule rule) {
    if (n == 0 || adjacency.size() != n * n) {
        throw std::invalid_argument("stochasticize: adjacency must be n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i * n + i]) {
            throw std::invalid_argument("stochasticize: adjacency must not contain self-loops");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((adjacency[i * n + j] != 0) != (adjacency[j * n + i] != 0)) {
                throw std::invalid_argument("stochasticize: adjacency must be symmetric");
            }
        }
    }
    if (!is_connected(adjacency, n)) {
        throw std::invalid_argument("stochasticize: graph must be connected");
    }

    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = degree(adjacency, n, i);
    }

    std::vector<double> weights(n * n, 0.0);
    switch (rule) {
        case WeightRule::ClosedNeighborhood:
            for (std::size_t i = 0; i < n; ++i) {
                const double w = 1.0 / static_cast<double>(deg[i] + 1);
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || adjacency[i * n + j]) {
                        weights[i * n + j] = w;
                    }
                }
            }
            break;
        case WeightRule::Metropolis:
            for (std::size_t i = 0; i < n; ++i) {
                double off_diag = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != i && adjacency[i * n + j]) {
                        const double w = 1.0 / static_cast<double>(1 + std::max(deg[i], deg[j]));
                        weights[i * n + j] = w;
                        off_diag += w;
                    }
                }
                weights[i * n + i] = 1.0 - off_diag;
            }
            break;
    }
    return weights;
}

SocialNetwork network_from_adjacency(std::size_t n, std::vector<std::uint8_t> adjacency,
                                     WeightRule rule,
                                     std::vector<std::array<double, 2>> positions) {
    SocialNetwork net;
    net.n_agents = n;
    net.weights = stochasticize(adjacency, n, rule);
    net.adjacency = std::move(adjacency);
    if (positions.empty()) {
        net.positions.assign(n, {0.5, 0.5});
    } else {
        if (positions.size() != n) {
            throw std::invalid_argument("network_from_adjacency: need one position per node");
        }
        net.positions = std::move(positions);
    }
    return net;
}

SocialNetwork random_geometric_graph(std::size_t n, double radius, Rng& rng, WeightRule rule,
                                     int max_retries) {
    if (n < 2) {
        throw std::invalid_argument("random_geometric_graph: need n >= 2");
    }
    if (!(radius > 0.0 && radius <= kMaxRadius)) {
        throw std::invalid_argument("random_geometric_graph: radius must lie in (0, sqrt(2)]");
    }

    const double r2 = radius * radius;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::array<double, 2>> pts(n);
        for (auto& p : pts) {
            p[0] = rng.next_unit();
            p[1] = rng.next_unit();
        }
        std::vector<std::uint8_t> adjacency(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = pts[i][0] - pts[j][0];
                const double dy = pts[i][1] - pts[j][1];
                if (dx * dx + dy * dy <= r2) {
                    adjacency[i * n + j] = adjacency[j * n + i] = 1;
                }
            }
        }
        if (is_connected(adjacency, n)) {
            return network_from_adjacency(n, std::move(adjacency), rule, std::move(pts));
        }
    }
    throw std::runtime_error("random_geometric_graph: no connected graph after " +
                             std::to_string(max_retries) +
                             " attempts; radius likely too small");
}

StationaryDistribution stationary_distribution(const SocialNetwork& network) {
    const std::size_t n = network.n_agents;
    constexpr double kTol = 1e-12;
    constexpr std::size_t kMaxIter = 1000000;

    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < kMaxIter; ++iter) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                s += v[i] * network.weights[i * n + j];
            }
            next[j] = s;
        }
        double residual = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            residual = std::max(residual, std::abs(next[j] - v[j]));
        }
        if (residual <= kTol) {
            // v itself satisfies max|vA - v| <= tol; return it normalized.
            double sum = std::accumulate(v.begin(), v.end(), 0.0);
            for (double& x : v) {
                x /= sum;
            }
            return StationaryDistribution{std::move(v)};
        }
        const double sum = std::accumulate(next.begin(), next.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = next[j] / sum;
        }
    }
    throw std::runtime_error("stationary_distribution: power iteration did not converge");
}

double rate_bound(const StationaryDistribution& v, std::span<const double> epsilons) {
    if (v.v.size() != epsilons.size()) {
        throw std::invalid_argument("rate_bound: centrality and epsilon lengths differ");
    }
    double k = 0.0;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        k += v.v[i] * capacity(epsilons[i]);
    }
    return k;
}

std::vector<double> assign_errors_by_centrality(const SocialNetwork& network, double low_eps,
                                                double high_eps, std::size_t n_low) {
    const std::size_t n = network.n_agents;
    if (n_low > n) {
        throw std::invalid_argument("assign_errors_by_centrality: n_low exceeds agent count");
    }
    const StationaryDistribution sd = stationary_distribution(network);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sd.v[a] > sd.v[b];  // ties keep the lower index first
    });

    std::vector<double> epsilons(n, high_eps);
    for (std::size_t r = 0; r < n_low; ++r) {
        epsilons[order[r]] = low_eps;
    }
    return epsilons;
}

void write_edge_list(const SocialNetwork& network, std::ostream& out) {
    const std::size_t n = network.n_agents;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (network.edge(i, j)) {
                out << i << ' ' << j << '\n';
            }
        }
    }
}

void write_node_table(const SocialNetwork& network, std::span<const double> epsilons,
                      const StationaryDistribution& v, std::ostream& out) {
    const std::size_t n = network.n_agents;
    if (epsilons.size() != n || v.v.size() != n) {
        throw std::invalid_argument("write_node_table: field lengths differ");
    }
    out << "i,x,y,epsilon,v\n";
    char buf[128];
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", i,
                      network.positions[i][0], network.positions[i][1], epsilons[i], v.v[i]);
        out << buf;
    }
}

}  // namespace pba
