// anc: evaluate, optimize and sweep layered amplify-and-forward relay
// networks from the command line. See README.md for the file formats.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anc/closed_forms.hpp"
#include "anc/network.hpp"
#include "anc/network_io.hpp"
#include "anc/optimizer.hpp"
#include "anc/propagation.hpp"
#include "anc/stationarity.hpp"

namespace {

using namespace anc;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CommonOptions {
    std::string input;
    std::string output;
    std::string log_base = "2";
    SolverConfig solver;
};

LogBase parse_log_base(const std::string& name) {
    return name == "e" ? LogBase::Natural : LogBase::Two;
}

void add_solver_flags(CLI::App* cmd, SolverConfig& config) {
    cmd->add_option("--restarts", config.restarts, "random multistarts per layer")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--grid", config.grid_points_per_dim,
                    "grid points per dimension (exhaustive search)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", config.objective_tolerance,
                    "relative objective convergence tolerance");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--allow-negative-beta", config.allow_negative_beta,
                    "search negative scaling factors on mixed-sign networks");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot write file: " + path);
    return file;
}

void write_beta_table(std::ostream& os, const LayeredNetwork& net,
                      const OptimizationResult& result) {
    os << "layer,node,beta,beta_max,at_bound\n";
    for (int l = 1; l <= net.num_relay_layers(); ++l) {
        const auto bounds = beta_max_for_layer(net, result.beta, l);
        for (int j = 1; j <= net.layer_size(l); ++j) {
            const double b = result.beta.at(l, j);
            const bool at_bound = std::abs(b) >= bounds[j - 1] * (1.0 - 1e-9);
            os << l << ',' << j << ',' << fmt(b) << ',' << fmt(bounds[j - 1]) << ','
               << (at_bound ? 1 : 0) << '\n';
        }
    }
}

void write_result_json(std::ostream& os, const OptimizationResult& result) {
    nlohmann::ordered_json j;
    j["beta"] = result.beta.values();
    j["snr"] = result.snr;
    j["rate_bits"] = result.rate_bits;
    j["layers"] = nlohmann::ordered_json::array();
    for (const auto& d : result.layers) {
        j["layers"].push_back({{"layer", d.layer},
                               {"objective", d.objective},
                               {"iterations", d.iterations},
                               {"starts", d.starts},
                               {"at_bound", d.at_bound}});
    }
    os << j.dump(2) << "\n";
}

void print_result(const LayeredNetwork& net, const OptimizationResult& result,
                  LogBase base, const std::string& output, bool as_json) {
    for (int l = 1; l <= net.num_relay_layers(); ++l) {
        std::string line = "layer " + std::to_string(l) + ": beta =";
        for (int j = 1; j <= net.layer_size(l); ++j) {
            line += " " + fmt(result.beta.at(l, j));
        }
        std::cout << line << "\n";
    }
    std::cout << "snr = " << fmt(result.snr) << "\n";
    if (base == LogBase::Two) {
        std::cout << "rate_bits = " << fmt(result.rate_bits) << "\n";
    } else {
        std::cout << "rate_nats = " << fmt(rate_from_snr(result.snr, base)) << "\n";
    }
    if (!output.empty()) {
        std::ofstream file;
        std::ostream& os = open_output(output, file);
        if (as_json) write_result_json(os, result);
        else write_beta_table(os, net, result);
    }
}

int run_validate(const CommonOptions& opts) {
    const LayeredNetwork net = load_network(opts.input);
    const ValidationReport report = validate(net);
    for (const auto& e : report.errors) std::cout << "error: " << e << "\n";
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    if (report.valid()) {
        std::cout << "valid: " << net.total_relays() << " relays in "
                  << net.num_relay_layers() << " layer(s)\n";
        return kExitOk;
    }
    return kExitValidation;
}

int run_rate(const CommonOptions& opts, const std::string& beta_path) {
    const LayeredNetwork net = load_network(opts.input);
    const ScalingVector beta = load_beta(beta_path, net);
    const SnrReport report = check_feasibility(net, beta);
    std::cout << "snr = " << fmt(report.snr_dest) << "\n";
    const LogBase base = parse_log_base(opts.log_base);
    if (base == LogBase::Two) {
        std::cout << "rate_bits = " << fmt(report.rate_bits) << "\n";
    } else {
        std::cout << "rate_nats = " << fmt(rate_from_snr(report.snr_dest, base)) << "\n";
    }
    std::cout << "feasible = " << (report.feasible ? "true" : "false") << "\n";
    for (const NodeId& v : report.violations) {
        std::cout << "violation: relay " << to_string(v) << " exceeds its bound\n";
    }
    if (!opts.output.empty()) {
        std::ofstream file;
        std::ostream& os = open_output(opts.output, file);
        os << "layer,node,beta,beta_max,received_power,transmit_power\n";
        for (int l = 1; l <= net.num_relay_layers(); ++l) {
            for (int j = 1; j <= net.layer_size(l); ++j) {
                os << l << ',' << j << ',' << fmt(beta.at(l, j)) << ','
                   << fmt(report.beta_max[l - 1][j - 1]) << ','
                   << fmt(report.received_power[l - 1][j - 1]) << ','
                   << fmt(report.transmit_power[l - 1][j - 1]) << '\n';
            }
        }
    }
    return kExitOk;  // an infeasible point is reported, not an error
}

int run_optimize(const CommonOptions& opts, bool brute, bool as_json) {
    const LayeredNetwork net = load_network(opts.input);
    const ValidationReport report = validate(net);
    if (!report.valid()) {
        for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
        return kExitValidation;
    }
    if (brute && net.total_relays() > kBruteForceMaxRelays) {
        std::cerr << "error: brute force search is limited to "
                  << kBruteForceMaxRelays << " relays\n";
        return kExitUsage;
    }
    const OptimizationResult result = brute
                                          ? brute_force_optimize(net, opts.solver)
                                          : optimize_network(net, opts.solver);
    print_result(net, result, parse_log_base(opts.log_base), opts.output, as_json);
    return kExitOk;
}

int run_stationarity(const CommonOptions& opts, const std::string& beta_path,
                     int samples) {
    const LayeredNetwork net = load_network(opts.input);
    if (!beta_path.empty()) {
        const ScalingVector beta = load_beta(beta_path, net);
        const StationarityReport report = stationarity_check(net, beta);
        std::cout << "snr = " << fmt(report.snr) << "\n";
        std::cout << "gradient_norm = " << fmt(report.gradient_norm) << "\n";
        std::cout << "hessian_det = " << fmt(report.hessian_determinant) << "\n";
        std::string eig = "eigenvalues =";
        for (double e : report.eigenvalues) eig += " " + fmt(e);
        std::cout << eig << "\n";
        std::cout << "classification = " << to_string(report.kind) << "\n";
        return kExitOk;
    }
    if (!is_diamond(net)) {
        std::cerr << "error: stationarity analysis without --beta needs a "
                     "2-relay diamond network\n";
        return kExitUsage;
    }
    const auto bounds = beta_max_for_layer(net, ScalingVector::zeros(net), 1);
    std::cout << "zero-signal line samples (beta_1 tied to beta_2):\n";
    for (int i = 1; i <= samples; ++i) {
        const double beta2 = bounds[1] * i / samples;
        const double beta1 = diamond_null_line_beta1(net, beta2);
        const StationarityReport report =
            stationarity_check(net, ScalingVector({{beta1, beta2}}));
        std::cout << "  beta = (" << fmt(beta1) << ", " << fmt(beta2)
                  << "): snr = " << fmt(report.snr)
                  << ", grad_norm = " << fmt(report.gradient_norm)
                  << ", det = " << fmt(report.hessian_determinant)
                  << ", d2/dbeta1^2 = " << fmt(report.hessian[0][0])
                  << ", " << to_string(report.kind) << "\n";
    }
    const auto roots = diamond_interior_stationary_points(net);
    if (roots.empty()) {
        std::cout << "interior stationary system: no real solution found\n";
    }
    for (const auto& r : roots) {
        std::cout << "interior stationary point: (" << fmt(r.beta1) << ", "
                  << fmt(r.beta2) << ") residual " << fmt(r.residual)
                  << (r.inside_feasible_box ? " inside" : " outside")
                  << " the feasible box\n";
    }
    return kExitOk;
}

int report_generated(const LayeredNetwork& net, const CommonOptions& opts,
                     double closed_snr, const std::string& label) {
    const OptimizationResult result = optimize_network(net, opts.solver);
    std::cout << label << " closed-form snr = " << fmt(closed_snr) << "\n";
    std::cout << "optimizer snr = " << fmt(result.snr) << "\n";
    const double rel = std::abs(result.snr - closed_snr) /
                       std::max({closed_snr, result.snr, 1e-300});
    std::cout << "relative difference = " << fmt(rel) << "\n";
    std::cout << "rate_bits = " << fmt(result.rate_bits) << "\n";
    if (!opts.output.empty()) {
        save_network(net, opts.output, "generated by anc " + label);
        std::cout << "wrote " << opts.output << "\n";
    }
    return kExitOk;
}

int run_linear(const CommonOptions& opts, int layers, double gain,
               const std::vector<double>& gains, double power,
               const std::vector<double>& powers, double source_power,
               double noise) {
    LinearChainSpec spec;
    spec.num_relays = layers;
    spec.gains = gains.empty() ? std::vector<double>(layers + 1, gain) : gains;
    spec.relay_powers = powers.empty() ? std::vector<double>(layers, power) : powers;
    spec.source_power = source_power;
    spec.noise_variance = noise;
    spec.require_consistent();

    const auto bounds = chain_beta_max(spec);
    std::string line = "beta_max =";
    for (double b : bounds) line += " " + fmt(b);
    std::cout << line << "\n";
    return report_generated(build_chain(spec), opts,
                            chain_node_snr(spec, bounds, layers + 1), "chain");
}

int run_ecgal(const CommonOptions& opts, int n, int layers, double gain,
              double power, double source_power, double noise) {
    EcgalSpec spec;
    spec.nodes_per_layer = n;
    spec.num_layers = layers;
    spec.gain = gain;
    spec.relay_power = power;
    spec.source_power = source_power;
    spec.noise_variance = noise;
    spec.require_consistent();

    const auto bounds = ecgal_symmetric_beta_max(spec);
    std::string line = "beta_max per layer =";
    for (double b : bounds) line += " " + fmt(b);
    std::cout << line << "\n";
    std::cout << "x = " << fmt(spec.snr_parameter()) << "\n";
    std::cout << "mac_cutset_bits = "
              << fmt(mac_cutset_bound_bits(n, spec.snr_parameter())) << "\n";
    return report_generated(build_ecgal(spec), opts, ecgal_opt_snr(spec), "ecgal");
}

int run_gap_sweep(const CommonOptions& opts, int n, const std::vector<int>& layers,
                  double x_min, double x_max, int x_points, double source_power) {
    const auto rows = gap_sweep(n, layers, log_spaced(x_min, x_max, x_points),
                                source_power);
    std::ofstream file;
    std::ostream& os = open_output(opts.output, file);
    os << "L,x,C_bits,R_bits,gap_bits\n";
    for (const auto& row : rows) {
        os << row.num_layers << ',' << fmt(row.x) << ',' << fmt(row.capacity_bits)
           << ',' << fmt(row.rate_bits) << ',' << fmt(row.gap_bits) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layered amplify-and-forward relay network rate tools"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string beta_path;
    int samples = 8;
    bool as_json = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a network file");
    validate_cmd->add_option("--input", opts.input, "network file")->required();

    auto* rate_cmd =
        app.add_subcommand("rate", "destination SNR and rate for a scaling vector");
    rate_cmd->add_option("--input", opts.input, "network file")->required();
    rate_cmd->add_option("--beta", beta_path, "scaling vector file")->required();
    rate_cmd->add_option("--log-base", opts.log_base, "rate units: 2 (bits) or e (nats)")
        ->check(CLI::IsMember({"2", "e"}));
    rate_cmd->add_option("--output", opts.output, "per-relay CSV report");

    auto* optimize_cmd =
        app.add_subcommand("optimize", "layer-by-layer rate optimization");
    optimize_cmd->add_option("--input", opts.input, "network file")->required();
    optimize_cmd->add_option("--log-base", opts.log_base, "rate units")
        ->check(CLI::IsMember({"2", "e"}));
    optimize_cmd->add_option("--output", opts.output, "per-relay CSV report");
    optimize_cmd->add_flag("--json", as_json, "write the report as JSON instead of CSV");
    add_solver_flags(optimize_cmd, opts.solver);

    auto* brute_cmd =
        app.add_subcommand("brute", "exhaustive nested-grid search (small networks)");
    brute_cmd->add_option("--input", opts.input, "network file")->required();
    brute_cmd->add_option("--log-base", opts.log_base, "rate units")
        ->check(CLI::IsMember({"2", "e"}));
    brute_cmd->add_option("--output", opts.output, "per-relay CSV report");
    brute_cmd->add_flag("--json", as_json, "write the report as JSON instead of CSV");
    add_solver_flags(brute_cmd, opts.solver);

    auto* stationarity_cmd =
        app.add_subcommand("stationarity", "first/second-order analysis of SNR_t");
    stationarity_cmd->add_option("--input", opts.input, "network file")->required();
    stationarity_cmd->add_option("--beta", beta_path, "analyze one point");
    stationarity_cmd->add_option("--samples", samples, "points along the null line");

    int gen_layers = 1, gen_n = 1;
    double gen_gain = 1.0, gen_power = 1.0, gen_source = 1.0, gen_noise = 1.0;
    std::vector<double> gen_gains, gen_powers;

    auto* linear_cmd = app.add_subcommand("linear", "build and analyze a relay chain");
    linear_cmd->add_option("--layers", gen_layers, "relay count")->required();
    linear_cmd->add_option("--gain", gen_gain, "common hop gain");
    linear_cmd->add_option("--gains", gen_gains, "per-hop gains (L+1 values)");
    linear_cmd->add_option("--power", gen_power, "common relay power");
    linear_cmd->add_option("--powers", gen_powers, "per-relay powers");
    linear_cmd->add_option("--source-power", gen_source, "source power");
    linear_cmd->add_option("--noise", gen_noise, "noise variance");
    linear_cmd->add_option("--output", opts.output, "write the network file");
    add_solver_flags(linear_cmd, opts.solver);

    auto* ecgal_cmd =
        app.add_subcommand("ecgal", "build and analyze an equal-gain layered network");
    ecgal_cmd->add_option("--n", gen_n, "nodes per layer")->required();
    ecgal_cmd->add_option("--layers", gen_layers, "relay layer count")->required();
    ecgal_cmd->add_option("--gain", gen_gain, "common link gain");
    ecgal_cmd->add_option("--power", gen_power, "common relay power");
    ecgal_cmd->add_option("--source-power", gen_source, "source power");
    ecgal_cmd->add_option("--noise", gen_noise, "noise variance");
    ecgal_cmd->add_option("--output", opts.output, "write the network file");
    add_solver_flags(ecgal_cmd, opts.solver);

    std::vector<int> sweep_layers = {1, 2, 5, 10};
    double x_min = 1.0, x_max = 1e4, sweep_source = 1e6;
    int x_points = 13, sweep_n = 5;
    auto* sweep_cmd = app.add_subcommand("gap-sweep", "cut-set gap table as CSV");
    sweep_cmd->add_option("--n", sweep_n, "nodes per layer");
    sweep_cmd->add_option("--layers", sweep_layers, "layer counts")->delimiter(',');
    sweep_cmd->add_option("--x-min", x_min, "smallest x");
    sweep_cmd->add_option("--x-max", x_max, "largest x");
    sweep_cmd->add_option("--x-points", x_points, "log-spaced grid size");
    sweep_cmd->add_option("--source-power", sweep_source, "source power");
    sweep_cmd->add_option("--output", opts.output, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(opts);
        if (rate_cmd->parsed()) return run_rate(opts, beta_path);
        if (optimize_cmd->parsed()) return run_optimize(opts, false, as_json);
        if (brute_cmd->parsed()) return run_optimize(opts, true, as_json);
        if (stationarity_cmd->parsed()) return run_stationarity(opts, beta_path, samples);
        if (linear_cmd->parsed()) {
            return run_linear(opts, gen_layers, gen_gain, gen_gains, gen_power,
                              gen_powers, gen_source, gen_noise);
        }
        if (ecgal_cmd->parsed()) {
            return run_ecgal(opts, gen_n, gen_layers, gen_gain, gen_power,
                             gen_source, gen_noise);
        }
        if (sweep_cmd->parsed()) {
            return run_gap_sweep(opts, sweep_n, sweep_layers, x_min, x_max, x_points,
                                 sweep_source);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
