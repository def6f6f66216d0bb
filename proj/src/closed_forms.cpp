#include "anc/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace anc {

void LinearChainSpec::require_consistent() const {
    if (num_relays < 1) throw std::invalid_argument("chain needs at least one relay");
    if (static_cast<int>(gains.size()) != num_relays + 1) {
        throw std::invalid_argument("chain needs L+1 hop gains");
    }
    if (static_cast<int>(relay_powers.size()) != num_relays) {
        throw std::invalid_argument("chain needs L relay powers");
    }
    if (!(source_power > 0.0) || !(noise_variance > 0.0)) {
        throw std::invalid_argument("powers and noise variance must be positive");
    }
    for (double p : relay_powers) {
        if (!(p > 0.0)) throw std::invalid_argument("relay powers must be positive");
    }
}

LayeredNetwork build_chain(const LinearChainSpec& spec) {
    spec.require_consistent();
    const int L = spec.num_relays;
    std::vector<Edge> edges;
    edges.reserve(L + 1);
    for (int l = 0; l <= L; ++l) edges.push_back({l, 1, l + 1, 1, spec.gains[l]});
    std::vector<std::vector<double>> powers;
    powers.reserve(L);
    for (int l = 0; l < L; ++l) powers.push_back({spec.relay_powers[l]});
    return LayeredNetwork(std::vector<int>(L, 1), std::move(edges),
                          spec.source_power, std::move(powers), spec.noise_variance);
}

std::vector<double> chain_beta_max(const LinearChainSpec& spec) {
    spec.require_consistent();
    std::vector<double> beta(spec.num_relays);
    double signal = spec.gains[0];          // h_0 * prod beta_i h_i
    std::vector<double> noise;              // prod_{j=i..l-1} beta_j h_j per origin i
    for (int l = 1; l <= spec.num_relays; ++l) {
        double noise_sq = 0.0;
        for (double t : noise) noise_sq += t * t;
        const double pr = spec.source_power * signal * signal +
                          spec.noise_variance * (1.0 + noise_sq);
        beta[l - 1] = std::sqrt(spec.relay_powers[l - 1] / pr);
        const double bh = beta[l - 1] * spec.gains[l];
        signal *= bh;
        for (double& t : noise) t *= bh;
        noise.push_back(bh);
    }
    return beta;
}

double chain_node_snr(const LinearChainSpec& spec, const std::vector<double>& beta,
                      int index) {
    spec.require_consistent();
    if (index < 1 || index > spec.num_relays + 1) {
        throw std::invalid_argument("chain node index out of range");
    }
    if (static_cast<int>(beta.size()) < index - 1) {
        throw std::invalid_argument("need scaling factors for every node before the index");
    }
    double signal = spec.gains[0];
    std::vector<double> noise;
    for (int i = 1; i < index; ++i) {
        const double bh = beta[i - 1] * spec.gains[i];
        signal *= bh;
        for (double& t : noise) t *= bh;
        noise.push_back(bh);
    }
    double noise_sq = 0.0;
    for (double t : noise) noise_sq += t * t;
    return spec.source_power * signal * signal /
           (spec.noise_variance * (1.0 + noise_sq));
}

double equal_chain_opt_snr(int num_relays, double gain, double power,
                           double noise_variance) {
    if (num_relays < 1) throw std::invalid_argument("need at least one relay");
    const double g = gain * gain * power / noise_variance;  // h^2 P / sigma^2
    if (!(g > 0.0)) throw std::invalid_argument("h^2 P / sigma^2 must be positive");
    // y = (beta h)^2 = g/(1+g); ratio = (1-y) y^L / (1 - y^{L+1})
    const double log_y = -std::log1p(1.0 / g);
    const double yl = std::exp(num_relays * log_y);
    double ratio;
    if (log_y == 0.0) {
        ratio = 1.0 / (num_relays + 1);  // (beta h)^2 -> 1 limit
    } else {
        const double one_minus_y = 1.0 / (1.0 + g);
        const double denom = -std::expm1((num_relays + 1) * log_y);
        ratio = one_minus_y * yl / denom;
    }
    // h^2 P / sigma^2 enters to the first power: the destination SNR is
    // (P h^2/s^2) y^L (1-y)/(1-y^{L+1}) with y = (beta h)^2, which is what the
    // per-node recursion evaluates to for the equal-parameter chain.
    return g * ratio;
}

double EcgalSpec::snr_parameter() const {
    return nodes_per_layer * gain * gain * relay_power / noise_variance;
}

void EcgalSpec::require_consistent() const {
    if (nodes_per_layer < 1 || num_layers < 1) {
        throw std::invalid_argument("need at least one node per layer and one layer");
    }
    if (!(relay_power > 0.0) || !(source_power > 0.0) || !(noise_variance > 0.0)) {
        throw std::invalid_argument("powers and noise variance must be positive");
    }
}

LayeredNetwork build_ecgal(const EcgalSpec& spec) {
    spec.require_consistent();
    const int N = spec.nodes_per_layer;
    const int L = spec.num_layers;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(N) * N * (L - 1) + 2 * N);
    for (int j = 1; j <= N; ++j) edges.push_back({0, 1, 1, j, spec.gain});
    for (int l = 1; l < L; ++l) {
        for (int j = 1; j <= N; ++j) {
            for (int k = 1; k <= N; ++k) edges.push_back({l, j, l + 1, k, spec.gain});
        }
    }
    for (int j = 1; j <= N; ++j) edges.push_back({L, j, L + 1, 1, spec.gain});
    return LayeredNetwork(std::vector<int>(L, N), std::move(edges), spec.source_power,
                          std::vector<std::vector<double>>(L, std::vector<double>(N, spec.relay_power)),
                          spec.noise_variance);
}

namespace {

struct SymmetricRecursion {
    std::vector<double> beta;   // per-layer bound
    double signal = 0.0;        // h * prod (N beta_i h)
    double noise_sq = 0.0;      // sum of t_i^2, t_i = beta_i h prod_{j>i}(N beta_j h)
};

SymmetricRecursion run_symmetric(const EcgalSpec& spec) {
    const double N = spec.nodes_per_layer;
    const double h = spec.gain;
    SymmetricRecursion r;
    r.signal = h;
    std::vector<double> t;
    for (int l = 1; l <= spec.num_layers; ++l) {
        double tsq = 0.0;
        for (double v : t) tsq += v * v;
        const double denom = r.signal * r.signal * spec.source_power / spec.noise_variance +
                             N * tsq + 1.0;
        const double b = std::sqrt(spec.relay_power / spec.noise_variance / denom);
        r.beta.push_back(b);
        const double scale = N * b * h;
        r.signal *= scale;
        for (double& v : t) v *= scale;
        t.push_back(b * h);
    }
    double tsq = 0.0;
    for (double v : t) tsq += v * v;
    r.noise_sq = tsq;
    return r;
}

}  // namespace

std::vector<double> ecgal_symmetric_beta_max(const EcgalSpec& spec) {
    spec.require_consistent();
    return run_symmetric(spec).beta;
}

double ecgal_opt_snr(const EcgalSpec& spec) {
    spec.require_consistent();
    const SymmetricRecursion r = run_symmetric(spec);
    const double num = r.signal * r.signal * spec.source_power / spec.noise_variance;
    return num / (1.0 + spec.nodes_per_layer * r.noise_sq);
}

double mac_cutset_bound_bits(int nodes_per_layer, double x) {
    if (nodes_per_layer < 1 || !(x > 0.0)) {
        throw std::invalid_argument("mac_cutset_bound needs N >= 1 and x > 0");
    }
    return 0.5 * std::log2(1.0 + nodes_per_layer * x);
}

double case1_leading_order(const EcgalSpec& spec) {
    spec.require_consistent();
    const double N = spec.nodes_per_layer;
    return (N * N * spec.source_power / spec.noise_variance) * spec.snr_parameter() /
           (1.0 + spec.num_layers / N);
}

double case2_leading_order(const EcgalSpec& spec) {
    spec.require_consistent();
    const double N = spec.nodes_per_layer;
    return N * spec.snr_parameter() / (1.0 + spec.num_layers / N);
}

double case1_relative_deviation(const EcgalSpec& spec) {
    const double exact = ecgal_opt_snr(spec);
    return std::abs(case1_leading_order(spec) - exact) / exact;
}

double case2_relative_deviation(const EcgalSpec& spec) {
    const double exact = ecgal_opt_snr(spec);
    return std::abs(case2_leading_order(spec) - exact) / exact;
}

std::vector<GapSweepRow> gap_sweep(int nodes_per_layer,
                                   const std::vector<int>& layer_counts,
                                   const std::vector<double>& x_grid,
                                   double source_power) {
    std::vector<GapSweepRow> rows;
    rows.reserve(layer_counts.size() * x_grid.size());
    for (int L : layer_counts) {
        for (double x : x_grid) {
            EcgalSpec spec;
            spec.nodes_per_layer = nodes_per_layer;
            spec.num_layers = L;
            spec.gain = 1.0;
            spec.relay_power = x / nodes_per_layer;
            spec.source_power = source_power;
            spec.noise_variance = 1.0;
            GapSweepRow row;
            row.num_layers = L;
            row.x = x;
            row.capacity_bits = mac_cutset_bound_bits(nodes_per_layer, x);
            row.rate_bits = 0.5 * std::log2(1.0 + ecgal_opt_snr(spec));
            row.gap_bits = row.capacity_bits - row.rate_bits;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
        throw std::invalid_argument("log_spaced needs 0 < lo <= hi and count >= 1");
    }
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    const double step = (std::log(hi) - std::log(lo)) / (count - 1);
    for (int i = 0; i < count; ++i) out.push_back(std::exp(std::log(lo) + i * step));
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace anc
