#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "pba/experiment.hpp"

namespace py = pybind11;
using namespace pba;

PYBIND11_MODULE(_pba, m) {
    m.doc() = "Distributed probabilistic bisection: grid beliefs, BSC responses, "
              "gossip-averaged learning and the experiment runner.";

    py::class_<BeliefDensity>(m, "BeliefDensity")
        .def(py::init<std::vector<double>>(), py::arg("log_density"))
        .def_static("uniform", &BeliefDensity::uniform, py::arg("grid_size"))
        .def_static("from_density", &BeliefDensity::from_density, py::arg("density"))
        .def_property_readonly("grid_size", &BeliefDensity::grid_size)
        .def_property_readonly("log_density",
                               [](const BeliefDensity& b) {
                                   return std::vector<double>(b.log_density().begin(),
                                                              b.log_density().end());
                               })
        .def_property_readonly("density",
                               [](const BeliefDensity& b) {
                                   return std::vector<double>(b.density().begin(),
                                                              b.density().end());
                               })
        .def("density_at", &BeliefDensity::density_at, py::arg("x"))
        .def("log_density_at", &BeliefDensity::log_density_at, py::arg("x"))
        .def("cdf_at", &BeliefDensity::cdf_at, py::arg("x"))
        .def("integral", &BeliefDensity::integral);

    m.def("bisect", [](const BeliefDensity& b) { return bisect(b).x_hat; },
          py::arg("belief"), "Posterior median F^{-1}(1/2).");

    m.def(
        "bayes_update",
        [](const BeliefDensity& b, double x_hat, int response, double epsilon) {
            auto r = bayes_update(b, QueryPoint{x_hat}, response, epsilon);
            return py::make_tuple(std::move(r.belief), r.prenorm_integral);
        },
        py::arg("belief"), py::arg("x_hat"), py::arg("response"), py::arg("epsilon"),
        "Returns (updated belief, pre-normalization integral).");

    m.def(
        "geometric_average",
        [](const std::vector<BeliefDensity>& beliefs, const std::vector<double>& weights) {
            auto r = geometric_average(beliefs, weights);
            return py::make_tuple(std::move(r.belief), r.log_integral);
        },
        py::arg("beliefs"), py::arg("weights"),
        "Returns (averaged belief, log2 pre-normalization integral).");

    m.def("capacity", &capacity, py::arg("epsilon"), "BSC capacity in bits per use.");

    py::class_<ResponseOracle>(m, "ResponseOracle")
        .def(py::init<double, std::vector<double>, std::uint64_t>(), py::arg("target"),
             py::arg("epsilons"), py::arg("seed"))
        .def_property_readonly("target", &ResponseOracle::target)
        .def_property_readonly("epsilons",
                               [](const ResponseOracle& o) {
                                   return std::vector<double>(o.epsilons().begin(),
                                                              o.epsilons().end());
                               })
        .def("true_bit",
             [](const ResponseOracle& o, double x_hat) { return o.true_bit(QueryPoint{x_hat}); },
             py::arg("x_hat"))
        .def("respond",
             [](ResponseOracle& o, std::size_t agent, double x_hat) {
                 return o.respond(agent, QueryPoint{x_hat});
             },
             py::arg("agent"), py::arg("x_hat"));

    py::enum_<WeightRule>(m, "WeightRule")
        .value("ClosedNeighborhood", WeightRule::ClosedNeighborhood)
        .value("Metropolis", WeightRule::Metropolis);

    py::class_<SocialNetwork>(m, "SocialNetwork")
        .def_readonly("n_agents", &SocialNetwork::n_agents)
        .def_readonly("positions", &SocialNetwork::positions)
        .def("edge", &SocialNetwork::edge, py::arg("i"), py::arg("j"))
        .def("weight", &SocialNetwork::weight, py::arg("i"), py::arg("j"))
        .def("row", [](const SocialNetwork& n, std::size_t i) {
            return std::vector<double>(n.row(i).begin(), n.row(i).end());
        });

    m.def(
        "random_geometric_graph",
        [](std::size_t n, double radius, std::uint64_t seed, WeightRule rule, int retries) {
            Rng rng(seed);
            return random_geometric_graph(n, radius, rng, rule, retries);
        },
        py::arg("n"), py::arg("radius"), py::arg("seed"),
        py::arg("rule") = WeightRule::ClosedNeighborhood, py::arg("max_retries") = 1000);

    m.def("stationary_distribution",
          [](const SocialNetwork& net) { return stationary_distribution(net).v; },
          py::arg("network"));

    m.def(
        "rate_bound",
        [](const std::vector<double>& v, const std::vector<double>& epsilons) {
            return rate_bound(StationaryDistribution{v}, epsilons);
        },
        py::arg("v"), py::arg("epsilons"));

    m.def("assign_errors_by_centrality", &assign_errors_by_centrality, py::arg("network"),
          py::arg("low_eps"), py::arg("high_eps"), py::arg("n_low"));

    py::enum_<AlgorithmVariant>(m, "AlgorithmVariant")
        .value("SocialLearning", AlgorithmVariant::SocialLearning)
        .value("NoCollaboration", AlgorithmVariant::NoCollaboration)
        .value("LinearConsensus", AlgorithmVariant::LinearConsensus);

    py::enum_<VariantSelection>(m, "VariantSelection")
        .value("SocialLearning", VariantSelection::SocialLearning)
        .value("NoCollaboration", VariantSelection::NoCollaboration)
        .value("LinearConsensus", VariantSelection::LinearConsensus)
        .value("All", VariantSelection::All);

    py::enum_<NetworkMode>(m, "NetworkMode")
        .value("Fixed", NetworkMode::Fixed)
        .value("PerTrial", NetworkMode::PerTrial);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("n_agents", &ExperimentConfig::n_agents)
        .def_readwrite("grid_size", &ExperimentConfig::grid_size)
        .def_readwrite("horizon", &ExperimentConfig::horizon)
        .def_readwrite("n_trials", &ExperimentConfig::n_trials)
        .def_readwrite("radius", &ExperimentConfig::radius)
        .def_readwrite("low_eps", &ExperimentConfig::low_eps)
        .def_readwrite("high_eps", &ExperimentConfig::high_eps)
        .def_readwrite("n_low", &ExperimentConfig::n_low)
        .def_readwrite("variant", &ExperimentConfig::variant)
        .def_readwrite("master_seed", &ExperimentConfig::master_seed)
        .def_readwrite("network_mode", &ExperimentConfig::network_mode)
        .def_readwrite("weight_rule", &ExperimentConfig::weight_rule)
        .def_readwrite("fixed_target", &ExperimentConfig::fixed_target)
        .def_readwrite("output_dir", &ExperimentConfig::output_dir);

    m.def("validate", &validate, py::arg("config"));
    m.def("load_config_file", &load_config_file, py::arg("path"));

    py::class_<TrialTrace>(m, "TrialTrace")
        .def_readonly("n_agents", &TrialTrace::n_agents)
        .def_readonly("horizon", &TrialTrace::horizon)
        .def_readonly("target", &TrialTrace::target)
        .def_readonly("query_points", &TrialTrace::query_points)
        .def_readonly("log_belief_at_target", &TrialTrace::log_belief_at_target)
        .def_readonly("d_terms", &TrialTrace::d_terms)
        .def("query", &TrialTrace::query, py::arg("t"), py::arg("agent"))
        .def("log_p", &TrialTrace::log_p, py::arg("t"), py::arg("agent"))
        .def("averaging_rounds", &TrialTrace::averaging_rounds);

    m.def("trial_seed", &trial_seed, py::arg("master_seed"), py::arg("trial_index"));
    m.def("run_trial", &run_trial, py::arg("config"), py::arg("seed"));
    m.def("master_network", &master_network, py::arg("config"));

    m.def("mse_avg", &mse_avg, py::arg("trace"), py::arg("t"));
    m.def("mse_max", &mse_max, py::arg("trace"), py::arg("t"));
    m.def(
        "slope",
        [](const TrialTrace& trace, std::size_t agent, std::size_t t0, std::size_t t1) {
            return slope(trace, agent, SlopeWindow{t0, t1});
        },
        py::arg("trace"), py::arg("agent"), py::arg("t0"), py::arg("t1"));
    m.def("default_slope_window", [](std::size_t horizon) {
        const auto w = default_slope_window(horizon);
        return py::make_tuple(w.t0, w.t1);
    });

    py::class_<AggregateSummary>(m, "AggregateSummary")
        .def_readonly("n_agents", &AggregateSummary::n_agents)
        .def_readonly("horizon", &AggregateSummary::horizon)
        .def_readonly("n_trials", &AggregateSummary::n_trials)
        .def_readonly("mean_mse_avg", &AggregateSummary::mean_mse_avg)
        .def_readonly("mean_mse_max", &AggregateSummary::mean_mse_max)
        .def_readonly("stderr_mse_avg", &AggregateSummary::stderr_mse_avg)
        .def_readonly("stderr_mse_max", &AggregateSummary::stderr_mse_max)
        .def_readonly("mean_slope", &AggregateSummary::mean_slope)
        .def_readonly("stderr_slope", &AggregateSummary::stderr_slope);

    m.def("aggregate",
          [](const std::vector<TrialTrace>& traces) { return aggregate(traces); },
          py::arg("traces"));

    py::class_<VariantResult>(m, "VariantResult")
        .def_readonly("variant", &VariantResult::variant)
        .def_readonly("traces", &VariantResult::traces)
        .def_readonly("summary", &VariantResult::summary);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("network", &ExperimentResult::network)
        .def_property_readonly("centrality",
                               [](const ExperimentResult& r) { return r.centrality.v; })
        .def_readonly("epsilons", &ExperimentResult::epsilons)
        .def_readonly("rate_bound_value", &ExperimentResult::rate_bound_value)
        .def_readonly("variants", &ExperimentResult::variants);

    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("write_outputs", &write_outputs, py::arg("config"), py::arg("result"));
}
