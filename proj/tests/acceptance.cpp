// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line (details indented below it). Run with a criterion
// number 1..9 or with no argument for the full battery.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "anc/closed_forms.hpp"
#include "anc/network.hpp"
#include "anc/network_io.hpp"
#include "anc/optimizer.hpp"
#include "anc/paths.hpp"
#include "anc/propagation.hpp"
#include "anc/stationarity.hpp"

using namespace anc;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "[ok]   " : "[FAIL] ") + what);
    }
    void note(const std::string& what) { details.push_back("       " + what); }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

LayeredNetwork reference_diamond() {
    std::vector<Edge> edges = {{0, 1, 1, 1, 1.0},
                               {0, 1, 1, 2, 0.1},
                               {1, 1, 2, 1, 1.0},
                               {1, 2, 2, 1, 1.0}};
    return LayeredNetwork({2}, std::move(edges), 10.0, {{10.0, 10.0}}, 0.1);
}

LayeredNetwork random_two_by_two_positive(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> gain(0.1, 2.0);
    std::uniform_real_distribution<double> power(0.5, 20.0);
    std::uniform_real_distribution<double> noise(0.05, 1.0);
    std::vector<Edge> edges;
    for (int j = 1; j <= 2; ++j) edges.push_back({0, 1, 1, j, gain(rng)});
    for (int j = 1; j <= 2; ++j) {
        for (int k = 1; k <= 2; ++k) edges.push_back({1, j, 2, k, gain(rng)});
    }
    for (int j = 1; j <= 2; ++j) edges.push_back({2, j, 3, 1, gain(rng)});
    std::vector<std::vector<double>> powers = {{power(rng), power(rng)},
                                               {power(rng), power(rng)}};
    return LayeredNetwork({2, 2}, std::move(edges), power(rng), std::move(powers),
                          noise(rng));
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    Stopwatch timer;
    const LayeredNetwork net = reference_diamond();

    const OptimizationResult layered = optimize_network(net);
    SolverConfig grid_config;
    grid_config.grid_points_per_dim = 201;
    const OptimizationResult grid = brute_force_optimize(net, grid_config);
    const auto bounds = beta_max_for_layer(net, ScalingVector::zeros(net), 1);

    const double target1 = 0.995, target2 = 0.225;
    for (const auto& [name, result] : {std::pair<const char*, const OptimizationResult&>
                                           {"optimize", layered},
                                       {"brute", grid}}) {
        const double b1 = result.beta.at(1, 1), b2 = result.beta.at(1, 2);
        out.require(std::abs(b1 - target1) <= 1e-2,
                    std::string(name) + " beta_1 = " + fmt(b1) + " within 1e-2 of 0.995");
        out.require(std::abs(b2 - target2) <= 1e-2,
                    std::string(name) + " beta_2 = " + fmt(b2) + " within 1e-2 of 0.225");
        out.note(std::string(name) + " snr = " + fmt(result.snr));
    }
    out.require(std::abs(bounds[0] - 0.995) <= 1e-2,
                "beta_max_1 = " + fmt(bounds[0]) + " within 1e-2 of 0.995");
    out.require(std::abs(bounds[1] - 7.07) <= 1e-2,
                "beta_max_2 = " + fmt(bounds[1]) + " within 1e-2 of 7.07");
    out.note("both solvers agree: rel snr diff = " + fmt(rel_diff(layered.snr, grid.snr)));
    out.note("computed optimum is (" + fmt(layered.beta.at(1, 1)) + ", " +
             fmt(layered.beta.at(1, 2)) + "); the quoted beta_2 = 0.225 is not the "
             "argmax of this instance (see decisions ledger)");
    const double elapsed = timer.seconds();
    out.require(elapsed < 10.0, "runtime " + fmt(elapsed) + " s < 10 s");
    return out;
}

Outcome criterion2() {
    Outcome out;
    const LayeredNetwork net = reference_diamond();
    const OptimizationResult opt = optimize_network(net);
    const SnrReport report = check_feasibility(net, opt.beta);

    const double tx2 = report.transmit_power[0][1];
    out.require(tx2 < 0.01 * net.relay_power(1, 2),
                "relay-2 transmit power " + fmt(tx2) + " < 1% of its constraint");

    const auto bounds = beta_max_for_layer(net, ScalingVector::zeros(net), 1);
    const double corner_snr = snr_destination(net, ScalingVector({bounds}));
    out.require(opt.snr > corner_snr * 1.01,
                "optimal snr " + fmt(opt.snr) + " exceeds full-power snr " +
                    fmt(corner_snr) + " by more than 1%");
    return out;
}

Outcome criterion3() {
    Outcome out;
    Stopwatch timer;
    std::mt19937_64 rng(20250301);
    std::uniform_int_distribution<int> layers(1, 4), nodes(1, 3);
    std::uniform_real_distribution<double> gain(-2.0, 2.0), beta_value(-1.5, 1.5);
    std::uniform_real_distribution<double> power(0.5, 20.0), noise(0.05, 1.0);

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int L = layers(rng);
        std::vector<int> sizes(L);
        for (int& s : sizes) s = nodes(rng);
        std::vector<Edge> edges;
        std::vector<std::vector<double>> powers(L);
        const auto size_of = [&](int l) { return (l == 0 || l == L + 1) ? 1 : sizes[l - 1]; };
        for (int l = 0; l <= L; ++l) {
            for (int j = 1; j <= size_of(l); ++j) {
                for (int k = 1; k <= size_of(l + 1); ++k) {
                    edges.push_back({l, j, l + 1, k, gain(rng)});
                }
            }
        }
        for (int l = 0; l < L; ++l) {
            powers[l].resize(sizes[l]);
            for (double& p : powers[l]) p = power(rng);
        }
        const LayeredNetwork net(std::move(sizes), std::move(edges), power(rng),
                                 std::move(powers), noise(rng));
        ScalingVector beta = ScalingVector::zeros(net);
        for (auto& layer : beta.values()) {
            for (double& b : layer) b = beta_value(rng);
        }

        const ModifiedGains oracle = modified_gains_by_paths(net, beta);
        const PropagationState state = forward_propagate(net, beta);
        worst = std::max(worst, rel_diff(state.destination.signal, oracle.source));
        std::vector<double> dense(net.total_relays(), 0.0);
        for (const auto& [origin, c] : state.destination.noise) dense[origin] = c;
        for (int l = 1; l <= net.num_relay_layers(); ++l) {
            for (int j = 1; j <= net.layer_size(l); ++j) {
                const double a = dense[net.relay_index(l, j)];
                const double b = oracle.relay_noise[l - 1][j - 1];
                if (std::abs(a) < 1e-14 && std::abs(b) < 1e-14) continue;
                worst = std::max(worst, rel_diff(a, b));
            }
        }
    }
    out.require(worst < 1e-10,
                "100 random networks: worst relative disagreement " + fmt(worst) +
                    " < 1e-10");
    const double elapsed = timer.seconds();
    out.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " s < 5 s");
    return out;
}

Outcome criterion4() {
    Outcome out;
    Stopwatch timer;
    std::mt19937_64 rng(20250304);
    SolverConfig layered_config;
    layered_config.restarts = 24;
    SolverConfig grid_config;
    grid_config.grid_points_per_dim = 200;

    const std::filesystem::path artifact_dir = "acceptance_artifacts";
    std::filesystem::create_directories(artifact_dir);

    int violations = 0;
    double worst_gap = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const LayeredNetwork net = random_two_by_two_positive(rng);
        const OptimizationResult layered = optimize_network(net, layered_config);
        const OptimizationResult grid = brute_force_optimize(net, grid_config);
        const double gap = (grid.snr - layered.snr) / grid.snr;
        worst_gap = std::max(worst_gap, std::abs(gap));
        if (std::abs(gap) > 1e-3) {
            ++violations;
            nlohmann::ordered_json artifact;
            artifact["network"] = nlohmann::ordered_json::parse(network_to_json_text(net));
            artifact["layer_by_layer"] = {{"snr", layered.snr},
                                          {"beta", layered.beta.values()}};
            artifact["grid_search"] = {{"snr", grid.snr},
                                       {"beta", grid.beta.values()}};
            artifact["relative_gap"] = gap;
            const auto path =
                artifact_dir / ("lemma2_counterexample_" + std::to_string(trial) + ".json");
            std::ofstream(path) << artifact.dump(2) << "\n";
        }
    }
    out.require(violations == 0,
                "50 random 2x2 networks: " + std::to_string(violations) +
                    " instance(s) deviate beyond 1e-3 relative (worst " +
                    fmt(worst_gap) + ")");
    if (violations > 0) {
        out.note("layer-by-layer choice is measurably below the exhaustive grid on "
                 "these asymmetric instances; counterexample artifacts in " +
                 artifact_dir.string() + "/");
    }
    const double elapsed = timer.seconds();
    out.require(elapsed < 120.0, "runtime " + fmt(elapsed) + " s < 2 min");
    return out;
}

Outcome criterion5() {
    Outcome out;
    Stopwatch timer;
    std::mt19937_64 rng(20250305);
    std::uniform_int_distribution<int> depth(1, 6);
    std::uniform_real_distribution<double> gain(0.2, 2.0), power(0.5, 20.0);
    std::uniform_real_distribution<double> noise(0.05, 1.0);

    double worst_beta = 0.0, worst_snr = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        LinearChainSpec spec;
        spec.num_relays = depth(rng);
        for (int i = 0; i <= spec.num_relays; ++i) spec.gains.push_back(gain(rng));
        for (int i = 0; i < spec.num_relays; ++i) spec.relay_powers.push_back(power(rng));
        spec.source_power = power(rng);
        spec.noise_variance = noise(rng);

        const OptimizationResult result = optimize_network(build_chain(spec));
        const auto closed = chain_beta_max(spec);
        for (int l = 1; l <= spec.num_relays; ++l) {
            worst_beta = std::max(worst_beta, rel_diff(result.beta.at(l, 1), closed[l - 1]));
        }
        worst_snr = std::max(
            worst_snr,
            rel_diff(result.snr, chain_node_snr(spec, closed, spec.num_relays + 1)));
    }
    out.require(worst_beta < 1e-9,
                "20 random chains ride the bound (worst beta deviation " +
                    fmt(worst_beta) + ")");
    out.require(worst_snr < 1e-9,
                "optimizer SNR matches the chain closed form (worst " +
                    fmt(worst_snr) + ")");

    double worst_factor = 0.0;
    for (double g : {0.5, 1.0, 2.0, 4.0}) {
        for (int L = 20; L <= 60; ++L) {
            const double rate = rate_from_snr(equal_chain_opt_snr(L, 1.0, g, 1.0));
            worst_factor = std::max(worst_factor, rate * 2.0 * L * (1.0 + g) / (g * g));
        }
    }
    out.require(worst_factor <= 1.05,
                "equal-chain asymptotic factor <= 1.05 for L in [20,60] (worst " +
                    fmt(worst_factor) + ")");
    const double elapsed = timer.seconds();
    out.require(elapsed < 10.0, "runtime " + fmt(elapsed) + " s < 10 s");
    return out;
}

Outcome criterion6() {
    Outcome out;
    Stopwatch timer;
    double worst_closed = 0.0, worst_opt = 0.0, worst_point = 0.0;
    for (const auto& [P, Ps, h, s2] :
         std::vector<std::array<double, 4>>{{10.0, 10.0, 1.0, 1.0},
                                            {3.0, 12.0, 0.7, 0.5}}) {
        for (int N : {1, 2, 5}) {
            for (int L : {1, 2, 5}) {
                EcgalSpec spec;
                spec.nodes_per_layer = N;
                spec.num_layers = L;
                spec.gain = h;
                spec.relay_power = P;
                spec.source_power = Ps;
                spec.noise_variance = s2;

                const LayeredNetwork net = build_ecgal(spec);
                const auto bounds = ecgal_symmetric_beta_max(spec);
                ScalingVector beta = ScalingVector::zeros(net);
                for (int l = 1; l <= L; ++l) {
                    for (int j = 1; j <= N; ++j) beta.at(l, j) = bounds[l - 1];
                }
                const double closed = ecgal_opt_snr(spec);
                worst_closed = std::max(worst_closed,
                                        rel_diff(closed, snr_destination(net, beta)));

                const OptimizationResult result = optimize_network(net);
                worst_opt = std::max(worst_opt, rel_diff(result.snr, closed));
                for (int l = 1; l <= L; ++l) {
                    for (int j = 1; j <= N; ++j) {
                        worst_point = std::max(
                            worst_point,
                            rel_diff(result.beta.at(l, j), bounds[l - 1]));
                    }
                }
            }
        }
    }
    out.require(worst_closed < 1e-12,
                "closed form equals propagation at the symmetric bounds (worst " +
                    fmt(worst_closed) + ")");
    out.require(worst_opt < 1e-6,
                "layer-by-layer optimizer recovers the symmetric SNR (worst " +
                    fmt(worst_opt) + ")");
    out.require(worst_point < 1e-6,
                "and the symmetric point itself (worst beta deviation " +
                    fmt(worst_point) + ")");
    const double elapsed = timer.seconds();
    out.require(elapsed < 30.0, "runtime " + fmt(elapsed) + " s < 30 s");
    return out;
}

Outcome criterion7() {
    Outcome out;
    Stopwatch timer;
    const std::vector<int> layer_counts = {1, 2, 5, 10};
    const std::vector<double> xs = log_spaced(1.0, 1e4, 13);
    const auto rows = gap_sweep(5, layer_counts, xs, 1e6);

    bool nonnegative = true;
    for (const auto& row : rows) nonnegative = nonnegative && row.gap_bits >= 0.0;
    out.require(nonnegative, "gap >= 0 at every sweep point");

    const auto gap_at = [&](int L, double x) {
        for (const auto& row : rows) {
            if (row.num_layers == L && rel_diff(row.x, x) < 1e-9) return row.gap_bits;
        }
        return -1.0;
    };
    bool increasing = true;
    for (std::size_t i = 1; i < layer_counts.size(); ++i) {
        increasing = increasing &&
                     gap_at(layer_counts[i], 1e4) > gap_at(layer_counts[i - 1], 1e4);
    }
    out.require(increasing, "gap increases with depth at x = 1e4");

    double worst_drift = 0.0;
    for (int L : layer_counts) {
        worst_drift = std::max(worst_drift, std::abs(gap_at(L, 1e4) - gap_at(L, 1e3)));
    }
    out.require(worst_drift < 0.05,
                "|gap(1e4) - gap(1e3)| = " + fmt(worst_drift) + " < 0.05 bits per depth");
    const double elapsed = timer.seconds();
    out.require(elapsed < 10.0, "runtime " + fmt(elapsed) + " s < 10 s");
    return out;
}

Outcome criterion8() {
    Outcome out;
    Stopwatch timer;
    const LayeredNetwork net = reference_diamond();

    double worst_grad = 0.0, worst_snr = 0.0;
    for (double beta2 : {0.25, 0.5, 1.0, 2.0, 4.0, -0.25, -0.5, -1.0, -2.0, -4.0}) {
        const ScalingVector beta({{diamond_null_line_beta1(net, beta2), beta2}});
        const StationarityReport report = stationarity_check(net, beta);
        worst_grad = std::max(worst_grad, report.gradient_norm);
        worst_snr = std::max(worst_snr, report.snr);
    }
    out.require(worst_grad < 1e-6,
                "gradient norm on the zero-signal line (worst " + fmt(worst_grad) + ")");
    out.require(worst_snr <= 1e-18, "SNR vanishes on the line (worst " + fmt(worst_snr) + ")");

    const auto roots = diamond_interior_stationary_points(net);
    int inside = 0;
    for (const auto& r : roots) inside += r.inside_feasible_box ? 1 : 0;
    out.require(roots.empty(),
                "interior stationary system has no real solution (found " +
                    std::to_string(roots.size()) + ", " + std::to_string(inside) +
                    " inside the box)");
    const double elapsed = timer.seconds();
    out.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " s < 5 s");
    return out;
}

Outcome criterion9() {
    Outcome out;
    EcgalSpec low;
    low.nodes_per_layer = 50;
    low.num_layers = 5;
    low.gain = 1.0;
    low.relay_power = 1.0;
    low.noise_variance = 1.0;
    low.source_power = 1e-9;
    const double dev1 = case1_relative_deviation(low);
    out.require(dev1 <= 0.10,
                "low source power leading order within 10% (actual deviation " +
                    fmt(dev1) + ")");
    out.note("approx " + fmt(case1_leading_order(low)) + " vs exact " +
             fmt(ecgal_opt_snr(low)) +
             "; the printed formula omits the first layer's amplified noise, which "
             "dominates the destination denominator at any parameter choice");

    EcgalSpec high;
    high.nodes_per_layer = 5;
    high.num_layers = 1;
    high.gain = 1.0;
    high.relay_power = 20.0;  // x = 100
    high.noise_variance = 1.0;
    high.source_power = 1e9;
    const double dev2 = case2_relative_deviation(high);
    out.require(dev2 <= 0.25,
                "high source power leading order within 25% (actual deviation " +
                    fmt(dev2) + ")");
    return out;
}

const char* kNames[] = {
    "",
    "diamond reproduction",
    "full-power suboptimality at the diamond optimum",
    "oracle equivalence of the modified channel gains",
    "layer-by-layer vs exhaustive grid on random 2x2 networks",
    "linear chains: bound recursion, closed form, asymptotic factor",
    "equal-gain network consistency across all three routes",
    "cut-set gap sweep shape",
    "diamond stationarity analysis",
    "leading-order source-power regimes",
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > 9) {
            std::fprintf(stderr, "usage: %s [1..9]\n", argv[0]);
            return 2;
        }
        which.push_back(n);
    } else {
        for (int i = 1; i <= 9; ++i) which.push_back(i);
    }

    Outcome (*checks[])() = {nullptr,    criterion1, criterion2, criterion3,
                             criterion4, criterion5, criterion6, criterion7,
                             criterion8, criterion9};
    int failures = 0;
    for (int n : which) {
        const Outcome outcome = checks[n]();
        std::printf("%s criterion %d: %s\n", outcome.pass ? "PASS" : "FAIL", n,
                    kNames[n]);
        for (const auto& line : outcome.details) {
            std::printf("    %s\n", line.c_str());
        }
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
