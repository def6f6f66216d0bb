#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anc/closed_forms.hpp"
#include "anc/network.hpp"
#include "anc/network_io.hpp"
#include "anc/optimizer.hpp"
#include "anc/paths.hpp"
#include "anc/propagation.hpp"
#include "anc/stationarity.hpp"

namespace py = pybind11;
using namespace anc;

PYBIND11_MODULE(_anc, m) {
    m.doc() = "Layered amplify-and-forward relay networks: exact SNR/rate "
              "evaluation and scaling-factor optimization";

    py::class_<NodeId>(m, "NodeId")
        .def(py::init<int, int>(), py::arg("layer"), py::arg("node"))
        .def_readonly("layer", &NodeId::layer)
        .def_readonly("node", &NodeId::node)
        .def("__repr__", [](const NodeId& id) { return to_string(id); })
        .def("__eq__", [](const NodeId& a, const NodeId& b) { return a == b; });

    py::class_<Edge>(m, "Edge")
        .def(py::init([](int layer, int from_node, int to_node, double gain) {
                 return Edge{layer, from_node, layer + 1, to_node, gain};
             }),
             py::arg("layer"), py::arg("from_node"), py::arg("to_node"),
             py::arg("gain"))
        .def_readwrite("from_layer", &Edge::from_layer)
        .def_readwrite("from_node", &Edge::from_node)
        .def_readwrite("to_layer", &Edge::to_layer)
        .def_readwrite("to_node", &Edge::to_node)
        .def_readwrite("gain", &Edge::gain);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("errors", &ValidationReport::errors)
        .def_readonly("warnings", &ValidationReport::warnings)
        .def_readonly("disconnected", &ValidationReport::disconnected)
        .def("valid", &ValidationReport::valid);

    py::class_<LayeredNetwork>(m, "LayeredNetwork")
        .def(py::init<std::vector<int>, std::vector<Edge>, double,
                      std::vector<std::vector<double>>, double>(),
             py::arg("layer_sizes"), py::arg("edges"), py::arg("source_power"),
             py::arg("relay_powers"), py::arg("noise_variance"))
        .def_property_readonly("num_relay_layers", &LayeredNetwork::num_relay_layers)
        .def_property_readonly("layer_sizes", &LayeredNetwork::layer_sizes)
        .def_property_readonly("total_relays", &LayeredNetwork::total_relays)
        .def_property_readonly("source_power", &LayeredNetwork::source_power)
        .def_property_readonly("noise_variance", &LayeredNetwork::noise_variance)
        .def("relay_power", &LayeredNetwork::relay_power)
        .def("gain", &LayeredNetwork::gain)
        .def("has_edge", &LayeredNetwork::has_edge);

    py::class_<ScalingVector>(m, "ScalingVector")
        .def(py::init<std::vector<std::vector<double>>>(), py::arg("values"))
        .def_static("zeros", &ScalingVector::zeros)
        .def_static("constant", &ScalingVector::constant)
        .def("at", py::overload_cast<int, int>(&ScalingVector::at, py::const_))
        .def_property_readonly(
            "values",
            [](const ScalingVector& v) { return v.values(); });

    m.def("validate", &validate);

    m.def("enumerate_paths", &enumerate_paths, py::arg("network"), py::arg("from_node"));
    m.def("modified_gains_by_paths",
          [](const LayeredNetwork& net, const ScalingVector& beta) {
              const ModifiedGains g = modified_gains_by_paths(net, beta);
              return py::make_tuple(g.source, g.relay_noise);
          });

    m.def("received_power", &received_power);
    m.def("beta_max_for_layer", &beta_max_for_layer);
    m.def("snr_destination", &snr_destination);
    m.def("anc_rate",
          [](const LayeredNetwork& net, const ScalingVector& beta, const std::string& base) {
              return anc_rate(net, beta, base == "e" ? LogBase::Natural : LogBase::Two);
          },
          py::arg("network"), py::arg("beta"), py::arg("log_base") = "2");

    py::class_<SnrReport>(m, "SnrReport")
        .def_readonly("received_power", &SnrReport::received_power)
        .def_readonly("beta_max", &SnrReport::beta_max)
        .def_readonly("transmit_power", &SnrReport::transmit_power)
        .def_readonly("snr_dest", &SnrReport::snr_dest)
        .def_readonly("rate_bits", &SnrReport::rate_bits)
        .def_readonly("feasible", &SnrReport::feasible)
        .def_readonly("violations", &SnrReport::violations);
    m.def("check_feasibility", &check_feasibility);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &SolverConfig::restarts)
        .def_readwrite("grid_points_per_dim", &SolverConfig::grid_points_per_dim)
        .def_readwrite("objective_tolerance", &SolverConfig::objective_tolerance)
        .def_readwrite("max_iterations", &SolverConfig::max_iterations)
        .def_readwrite("allow_negative_beta", &SolverConfig::allow_negative_beta)
        .def_readwrite("seed", &SolverConfig::seed);

    py::class_<LayerDiagnostics>(m, "LayerDiagnostics")
        .def_readonly("layer", &LayerDiagnostics::layer)
        .def_readonly("objective", &LayerDiagnostics::objective)
        .def_readonly("iterations", &LayerDiagnostics::iterations)
        .def_readonly("starts", &LayerDiagnostics::starts)
        .def_readonly("at_bound", &LayerDiagnostics::at_bound);

    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def_readonly("beta", &OptimizationResult::beta)
        .def_readonly("snr", &OptimizationResult::snr)
        .def_readonly("rate_bits", &OptimizationResult::rate_bits)
        .def_readonly("layers", &OptimizationResult::layers);

    m.def("layer_subproblem_objective",
          [](const LayeredNetwork& net, const ScalingVector& prefix, int layer,
             const std::vector<double>& candidate) {
              return layer_subproblem_objective(net, prefix, layer, candidate);
          });
    m.def("optimize_layer",
          [](const LayeredNetwork& net, const ScalingVector& prefix, int layer,
             const SolverConfig& config) {
              return optimize_layer(net, prefix, layer, config);
          },
          py::arg("network"), py::arg("prefix"), py::arg("layer"),
          py::arg("config") = SolverConfig{});
    m.def("optimize_network", &optimize_network, py::arg("network"),
          py::arg("config") = SolverConfig{});
    m.def("brute_force_optimize", &brute_force_optimize, py::arg("network"),
          py::arg("config") = SolverConfig{});

    py::enum_<StationaryKind>(m, "StationaryKind")
        .value("NOT_STATIONARY", StationaryKind::NotStationary)
        .value("MAXIMUM", StationaryKind::Maximum)
        .value("MINIMUM", StationaryKind::Minimum)
        .value("SADDLE", StationaryKind::Saddle)
        .value("DEGENERATE", StationaryKind::Degenerate);

    py::class_<StationarityReport>(m, "StationarityReport")
        .def_readonly("snr", &StationarityReport::snr)
        .def_readonly("gradient", &StationarityReport::gradient)
        .def_readonly("gradient_norm", &StationarityReport::gradient_norm)
        .def_readonly("hessian", &StationarityReport::hessian)
        .def_readonly("hessian_determinant", &StationarityReport::hessian_determinant)
        .def_readonly("eigenvalues", &StationarityReport::eigenvalues)
        .def_readonly("kind", &StationarityReport::kind);
    m.def("stationarity_check", &stationarity_check, py::arg("network"),
          py::arg("beta"), py::arg("gradient_tolerance") = 1e-6,
          py::arg("eigenvalue_tolerance") = 1e-6);
    m.def("is_diamond", &is_diamond);
    m.def("diamond_null_line_beta1", &diamond_null_line_beta1);

    py::class_<DiamondStationaryPoint>(m, "DiamondStationaryPoint")
        .def_readonly("beta1", &DiamondStationaryPoint::beta1)
        .def_readonly("beta2", &DiamondStationaryPoint::beta2)
        .def_readonly("residual", &DiamondStationaryPoint::residual)
        .def_readonly("inside_feasible_box",
                      &DiamondStationaryPoint::inside_feasible_box);
    m.def("diamond_interior_stationary_points", &diamond_interior_stationary_points,
          py::arg("network"), py::arg("box_width_factor") = 8.0);

    py::class_<LinearChainSpec>(m, "LinearChainSpec")
        .def(py::init<>())
        .def_readwrite("num_relays", &LinearChainSpec::num_relays)
        .def_readwrite("gains", &LinearChainSpec::gains)
        .def_readwrite("source_power", &LinearChainSpec::source_power)
        .def_readwrite("relay_powers", &LinearChainSpec::relay_powers)
        .def_readwrite("noise_variance", &LinearChainSpec::noise_variance);
    m.def("build_chain", &build_chain);
    m.def("chain_beta_max", &chain_beta_max);
    m.def("chain_node_snr", &chain_node_snr);
    m.def("equal_chain_opt_snr", &equal_chain_opt_snr);

    py::class_<EcgalSpec>(m, "EcgalSpec")
        .def(py::init<>())
        .def_readwrite("nodes_per_layer", &EcgalSpec::nodes_per_layer)
        .def_readwrite("num_layers", &EcgalSpec::num_layers)
        .def_readwrite("gain", &EcgalSpec::gain)
        .def_readwrite("relay_power", &EcgalSpec::relay_power)
        .def_readwrite("source_power", &EcgalSpec::source_power)
        .def_readwrite("noise_variance", &EcgalSpec::noise_variance)
        .def_property_readonly("snr_parameter", &EcgalSpec::snr_parameter);
    m.def("build_ecgal", &build_ecgal);
    m.def("ecgal_symmetric_beta_max", &ecgal_symmetric_beta_max);
    m.def("ecgal_opt_snr", &ecgal_opt_snr);
    m.def("mac_cutset_bound_bits", &mac_cutset_bound_bits);
    m.def("case1_leading_order", &case1_leading_order);
    m.def("case2_leading_order", &case2_leading_order);
    m.def("case1_relative_deviation", &case1_relative_deviation);
    m.def("case2_relative_deviation", &case2_relative_deviation);

    py::class_<GapSweepRow>(m, "GapSweepRow")
        .def_readonly("num_layers", &GapSweepRow::num_layers)
        .def_readonly("x", &GapSweepRow::x)
        .def_readonly("capacity_bits", &GapSweepRow::capacity_bits)
        .def_readonly("rate_bits", &GapSweepRow::rate_bits)
        .def_readonly("gap_bits", &GapSweepRow::gap_bits);
    m.def("gap_sweep", &gap_sweep);
    m.def("log_spaced", &log_spaced);

    py::register_exception<ParseError>(m, "ParseError");
    m.def("load_network",
          [](const std::string& path) {
              std::string comment;
              LayeredNetwork net = load_network(path, &comment);
              return py::make_tuple(std::move(net), comment);
          });
    m.def("network_from_json_text", [](const std::string& text) {
        std::string comment;
        LayeredNetwork net = network_from_json_text(text, &comment);
        return py::make_tuple(std::move(net), comment);
    });
    m.def("network_to_json_text", &network_to_json_text, py::arg("network"),
          py::arg("comment") = "");
    m.def("save_network", &save_network, py::arg("network"), py::arg("path"),
          py::arg("comment") = "");
    m.def("load_beta", &load_beta);
    m.def("beta_to_json_text", &beta_to_json_text);
    m.def("same_network", &same_network);
}
