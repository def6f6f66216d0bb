#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "anc/optimizer.hpp"
#include "layer_context.hpp"

namespace anc {

namespace {

using detail::LayerContext;

struct GridAxis {
    double lo = 0.0;
    double step = 0.0;
    int count = 1;

    double value(int i) const { return count == 1 ? lo : lo + i * step; }
};

GridAxis make_axis(double lo, double hi, int points) {
    GridAxis axis;
    if (hi <= lo) {
        axis.lo = lo;
        return axis;
    }
    axis.lo = lo;
    axis.count = points;
    axis.step = (hi - lo) / (points - 1);
    return axis;
}

struct FlatIncumbent {
    double snr = -1.0;
    double norm2 = 0.0;
    std::vector<double> beta;

    void offer(double value, const std::vector<double>& candidate) {
        double n2 = 0.0;
        for (double v : candidate) n2 += v * v;
        if (beta.empty() ||
            detail::candidate_better(value, n2, candidate, snr, norm2, beta)) {
            snr = value;
            norm2 = n2;
            beta = candidate;
        }
    }
};

class BruteForceSearch {
  public:
    BruteForceSearch(const LayeredNetwork& net, const SolverConfig& config)
        : net_(net), config_(config) {
        signed_search_ = config.allow_negative_beta && !net.all_gains_positive();
        for (const NodeId& id : validate(net).disconnected) {
            pinned_.push_back(id);
        }
        scale_ = net.source_power() / net.noise_variance();
    }

    OptimizationResult run() {
        const LayerContext first =
            detail::make_layer_context(net_, ScalingVector::zeros(net_), 1);
        flat_.clear();
        descend(first);

        OptimizationResult result;
        result.beta = ScalingVector::zeros(net_);
        int pos = 0;
        for (auto& layer : result.beta.values()) {
            for (double& v : layer) v = best_.beta[pos++];
        }
        result.snr = snr_destination(net_, result.beta);
        result.rate_bits = rate_from_snr(result.snr, LogBase::Two);
        return result;
    }

  private:
    GridAxis axis_for(const LayerContext& ctx, int node) const {
        for (const NodeId& id : pinned_) {
            if (id.layer == ctx.layer && id.node == node + 1) {
                return make_axis(0.0, 0.0, 1);
            }
        }
        const double hi = ctx.bmax[node];
        return make_axis(signed_search_ ? -hi : 0.0, hi, config_.grid_points_per_dim);
    }

    void descend(const LayerContext& ctx) {
        if (ctx.last) {
            scan_last_layer(ctx);
            return;
        }
        std::vector<GridAxis> axes(ctx.n);
        for (int j = 0; j < ctx.n; ++j) axes[j] = axis_for(ctx, j);

        std::vector<int> idx(ctx.n, 0);
        std::vector<double> beta(ctx.n);
        const std::size_t base = flat_.size();
        flat_.resize(base + ctx.n);
        while (true) {
            for (int j = 0; j < ctx.n; ++j) {
                beta[j] = axes[j].value(idx[j]);
                flat_[base + j] = beta[j];
            }
            descend(detail::advance_layer_context(net_, ctx, beta));
            int d = ctx.n - 1;  // last node varies fastest: lexicographic scan
            while (d >= 0 && ++idx[d] == axes[d].count) idx[d--] = 0;
            if (d < 0) break;
        }
        flat_.resize(base);
    }

    /// Destination SNR over the last layer's grid, written as the ratio of
    /// two quadratics in the innermost coordinate. Each innermost row is
    /// piecewise monotone with a single nontrivial stationary point, so the
    /// row's grid maximum is attained at the endpoints or at grid neighbors
    /// of that point (or of the signal zero); evaluating those few indices
    /// reproduces the full row scan exactly.
    void scan_last_layer(const LayerContext& ctx) {
        const int n = ctx.n;
        // effective signal coefficients and noise quadratic in beta
        std::vector<double> sig(n);
        std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
        for (int k = 0; k < n; ++k) {
            const double wk = ctx.gain_at(k, 0);
            sig[k] = wk * ctx.a[k];
            for (int m = 0; m <= k; ++m) {
                const double wm = ctx.gain_at(m, 0);
                double dot = k == m ? 1.0 : 0.0;
                for (int o = 0; o < ctx.origins; ++o) {
                    dot += ctx.b_at(k, o) * ctx.b_at(m, o);
                }
                q[static_cast<std::size_t>(k) * n + m] = wk * wm * dot;
                q[static_cast<std::size_t>(m) * n + k] = wk * wm * dot;
            }
        }
        std::vector<GridAxis> axes(n);
        for (int j = 0; j < n; ++j) axes[j] = axis_for(ctx, j);

        const std::size_t base = flat_.size();
        flat_.resize(base + n);
        const int m = n - 1;  // innermost coordinate
        std::vector<int> idx(std::max(m, 1), 0);
        std::vector<double> beta(n, 0.0);
        while (true) {
            double s = 0.0, q0 = 1.0, q1 = 0.0;
            for (int j = 0; j < m; ++j) {
                beta[j] = axes[j].value(idx[j]);
                flat_[base + j] = beta[j];
                s += sig[j] * beta[j];
                q1 += 2.0 * q[static_cast<std::size_t>(m) * n + j] * beta[j];
                for (int k = 0; k <= j; ++k) {
                    const double term = q[static_cast<std::size_t>(j) * n + k] *
                                        beta[j] * beta[k];
                    q0 += k == j ? term : 2.0 * term;
                }
            }
            scan_row(axes[m], s, sig[m], q0, q1,
                     q[static_cast<std::size_t>(m) * n + m], base + m);

            if (m == 0) break;
            int d = m - 1;
            while (d >= 0 && ++idx[d] == axes[d].count) idx[d--] = 0;
            if (d < 0) break;
        }
        flat_.resize(base);
    }

    void scan_row(const GridAxis& axis, double s, double a, double q0, double q1,
                  double q2, std::size_t slot) {
        int candidates[16];  // 2 endpoints + 3 neighbors for each special value
        int count = 0;
        const auto add_index = [&](int i) {
            if (i < 0 || i >= axis.count) return;
            for (int c = 0; c < count; ++c) {
                if (candidates[c] == i) return;
            }
            candidates[count++] = i;
        };
        const auto add_value = [&](double v) {
            if (!std::isfinite(v) || axis.count == 1) return;
            const int i = static_cast<int>(std::floor((v - axis.lo) / axis.step));
            add_index(i - 1);
            add_index(i);
            add_index(i + 1);
        };
        add_index(0);
        add_index(axis.count - 1);
        const double denom = a * q1 - 2.0 * s * q2;
        if (denom != 0.0) add_value((s * q1 - 2.0 * a * q0) / denom);
        if (a != 0.0) add_value(-s / a);  // signal zero, needed for tie order
        add_value(0.0);

        for (int c = 0; c < count; ++c) {
            const double b = axis.value(candidates[c]);
            const double num = s + a * b;
            const double snr = scale_ * num * num / (q0 + b * (q1 + q2 * b));
            flat_[slot] = b;
            best_.offer(snr, flat_);
        }
    }

    const LayeredNetwork& net_;
    const SolverConfig& config_;
    bool signed_search_ = false;
    double scale_ = 1.0;
    std::vector<NodeId> pinned_;
    std::vector<double> flat_;
    FlatIncumbent best_;
};

}  // namespace

OptimizationResult brute_force_optimize(const LayeredNetwork& network,
                                        const SolverConfig& config) {
    if (network.total_relays() > kBruteForceMaxRelays) {
        throw std::invalid_argument("brute force search is limited to " +
                                    std::to_string(kBruteForceMaxRelays) + " relays");
    }
    config.require_valid();
    return BruteForceSearch(network, config).run();
}

}  // namespace anc
