#include "pba/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pba {

namespace {

const char* kMseHeader = "variant,t,mse_avg_mean,mse_max_mean,stderr_avg,stderr_max\n";
const char* kConcentrationHeader = "variant,trial,agent,t,log2_p_at_target\n";
const char* kSummaryHeader = "variant,agent,epsilon,v,capacity,mean_slope,stderr_slope,K\n";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

// Index-sharded parallel map with deterministic result placement.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned n_threads, Fn&& fn) {
    if (count == 0) {
        return;
    }
    n_threads = std::min<std::size_t>(std::max(1u, n_threads), count);
    if (n_threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::vector<AlgorithmVariant> selected_variants(VariantSelection selection) {
    switch (selection) {
        case VariantSelection::SocialLearning:
            return {AlgorithmVariant::SocialLearning};
        case VariantSelection::NoCollaboration:
            return {AlgorithmVariant::NoCollaboration};
        case VariantSelection::LinearConsensus:
            return {AlgorithmVariant::LinearConsensus};
        case VariantSelection::All:
            return {AlgorithmVariant::SocialLearning, AlgorithmVariant::NoCollaboration,
                    AlgorithmVariant::LinearConsensus};
    }
    throw std::logic_error("selected_variants: unknown selection");
}

VariantSelection to_selection(AlgorithmVariant variant) {
    switch (variant) {
        case AlgorithmVariant::SocialLearning:
            return VariantSelection::SocialLearning;
        case AlgorithmVariant::NoCollaboration:
            return VariantSelection::NoCollaboration;
        case AlgorithmVariant::LinearConsensus:
            return VariantSelection::LinearConsensus;
    }
    throw std::logic_error("to_selection: unknown variant");
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("PBA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::min(hw == 0 ? 1u : hw, 8u);
}

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned n_threads) {
    const auto violations = validate(config);
    if (!violations.empty()) {
        std::string msg = "invalid config:";
        for (const auto& v : violations) {
            msg += "\n  " + v;
        }
        throw std::invalid_argument(msg);
    }
    const unsigned threads = resolve_thread_count(n_threads);

    ExperimentResult result;
    result.network = master_network(config);
    result.centrality = stationary_distribution(result.network);
    result.epsilons =
        assign_errors_by_centrality(result.network, config.low_eps, config.high_eps, config.n_low);
    result.rate_bound_value = rate_bound(result.centrality, result.epsilons);

    for (AlgorithmVariant variant : selected_variants(config.variant)) {
        ExperimentConfig per_variant = config;
        per_variant.variant = to_selection(variant);

        VariantResult vr;
        vr.variant = variant;
        vr.traces.resize(config.n_trials);
        parallel_for_index(config.n_trials, threads, [&](std::size_t trial) {
            vr.traces[trial] = run_trial(per_variant, trial_seed(config.master_seed, trial));
        });
        vr.summary = aggregate(vr.traces);
        result.variants.push_back(std::move(vr));
    }
    return result;
}

void write_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
    namespace fs = std::filesystem;
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);

    {
        auto out = open_output(dir / "network.edges");
        write_edge_list(result.network, out);
    }
    {
        auto out = open_output(dir / "nodes.csv");
        write_node_table(result.network, result.epsilons, result.centrality, out);
    }
    {
        auto out = open_output(dir / "mse.csv");
        out << kMseHeader;
        for (const auto& vr : result.variants) {
            const std::string name = to_string(vr.variant);
            for (std::size_t t = 0; t <= vr.summary.horizon; ++t) {
                out << name << ',' << t << ',' << fmt(vr.summary.mean_mse_avg[t]) << ','
                    << fmt(vr.summary.mean_mse_max[t]) << ',' << fmt(vr.summary.stderr_mse_avg[t])
                    << ',' << fmt(vr.summary.stderr_mse_max[t]) << '\n';
            }
        }
    }
    {
        auto out = open_output(dir / "concentration.csv");
        out << kConcentrationHeader;
        for (const auto& vr : result.variants) {
            const std::string name = to_string(vr.variant);
            for (std::size_t trial = 0; trial < vr.traces.size(); ++trial) {
                const TrialTrace& trace = vr.traces[trial];
                for (std::size_t agent = 0; agent < trace.n_agents; ++agent) {
                    for (std::size_t t = 0; t <= trace.horizon; ++t) {
                        out << name << ',' << trial << ',' << agent << ',' << t << ','
                            << fmt(trace.log_p(t, agent)) << '\n';
                    }
                }
            }
        }
    }
    {
        auto out = open_output(dir / "summary.csv");
        out << kSummaryHeader;
        const std::string k_str = fmt(result.rate_bound_value);
        for (const auto& vr : result.variants) {
            const std::string name = to_string(vr.variant);
            for (std::size_t agent = 0; agent < vr.summary.n_agents; ++agent) {
                out << name << ',' << agent << ',' << fmt(result.epsilons[agent]) << ','
                    << fmt(result.centrality.v[agent]) << ','
                    << fmt(capacity(result.epsilons[agent])) << ','
                    << fmt(vr.summary.mean_slope[agent]) << ','
                    << fmt(vr.summary.stderr_slope[agent]) << ',' << k_str << '\n';
            }
        }
    }
}

}  // namespace pba
