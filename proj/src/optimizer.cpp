#include "anc/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "layer_context.hpp"

namespace anc {
namespace detail {

LayerContext make_layer_context(const LayeredNetwork& network,
                                const ScalingVector& prefix, int layer) {
    prefix.require_shape(network);
    const PropagationState state = propagate_through(network, prefix, layer);
    LayerContext ctx;
    ctx.layer = layer;
    ctx.n = network.layer_size(layer);
    ctx.n_next = network.layer_size(layer + 1);
    ctx.last = layer == network.num_relay_layers();
    ctx.origins = network.relay_index(layer, 1);
    ctx.source_power = network.source_power();
    ctx.noise_variance = network.noise_variance();
    ctx.a.resize(ctx.n);
    ctx.b.assign(static_cast<std::size_t>(ctx.n) * ctx.origins, 0.0);
    ctx.bmax.resize(ctx.n);
    ctx.gain.resize(static_cast<std::size_t>(ctx.n) * ctx.n_next);
    for (int j = 0; j < ctx.n; ++j) {
        const NodeCoeffs& c = state.relays[layer - 1][j];
        ctx.a[j] = c.signal;
        for (const auto& [origin, coeff] : c.noise) {
            ctx.b[static_cast<std::size_t>(j) * ctx.origins + origin] = coeff;
        }
        const double pr = node_received_power(c, ctx.source_power, ctx.noise_variance);
        ctx.bmax[j] = std::sqrt(network.relay_power(layer, j + 1) / pr);
        for (int k = 0; k < ctx.n_next; ++k) {
            ctx.gain[static_cast<std::size_t>(j) * ctx.n_next + k] =
                network.gain(layer, j + 1, k + 1);
        }
    }
    return ctx;
}

LayerContext advance_layer_context(const LayeredNetwork& network,
                                   const LayerContext& current,
                                   std::span<const double> beta) {
    LayerContext next;
    next.layer = current.layer + 1;
    next.n = current.n_next;
    next.n_next = network.layer_size(next.layer + 1);
    next.last = next.layer == network.num_relay_layers();
    next.origins = current.origins + current.n;
    next.source_power = current.source_power;
    next.noise_variance = current.noise_variance;
    next.a.assign(next.n, 0.0);
    next.b.assign(static_cast<std::size_t>(next.n) * next.origins, 0.0);
    next.bmax.resize(next.n);
    next.gain.resize(static_cast<std::size_t>(next.n) * next.n_next);
    for (int k = 0; k < next.n; ++k) {
        double* bk = next.b.data() + static_cast<std::size_t>(k) * next.origins;
        for (int j = 0; j < current.n; ++j) {
            const double w = current.gain_at(j, k) * beta[j];
            if (w == 0.0) continue;
            next.a[k] += w * current.a[j];
            const double* bj = current.b.data() +
                               static_cast<std::size_t>(j) * current.origins;
            for (int o = 0; o < current.origins; ++o) bk[o] += w * bj[o];
            bk[current.origins + j] += w;  // amplified own noise of node j
        }
        double noise_sq = 0.0;
        for (int o = 0; o < next.origins; ++o) noise_sq += bk[o] * bk[o];
        const double pr = next.a[k] * next.a[k] * next.source_power +
                          next.noise_variance * (1.0 + noise_sq);
        next.bmax[k] = std::sqrt(network.relay_power(next.layer, k + 1) / pr);
        for (int m = 0; m < next.n_next; ++m) {
            next.gain[static_cast<std::size_t>(k) * next.n_next + m] =
                network.gain(next.layer, k + 1, m + 1);
        }
    }
    return next;
}

double next_layer_objective(const LayerContext& ctx, std::span<const double> beta) {
    double objective = 1.0;
    for (int k = 0; k < ctx.n_next; ++k) {
        double signal = 0.0;
        double noise_sq = 0.0;
        for (int j = 0; j < ctx.n; ++j) {
            const double w = ctx.gain_at(j, k) * beta[j];
            signal += w * ctx.a[j];
            noise_sq += w * w;  // amplified own noise of node j
        }
        for (int o = 0; o < ctx.origins; ++o) {
            double c = 0.0;
            for (int j = 0; j < ctx.n; ++j) {
                c += ctx.gain_at(j, k) * beta[j] * ctx.b_at(j, o);
            }
            noise_sq += c * c;
        }
        const double snr = signal * signal * ctx.source_power /
                           (ctx.noise_variance * (1.0 + noise_sq));
        objective *= 1.0 + snr;
    }
    return objective;
}

bool candidate_better(double value, double norm2, std::span<const double> beta,
                      double inc_value, double inc_norm2,
                      std::span<const double> inc_beta) {
    constexpr double kTie = 1e-12;
    if (value > inc_value * (1.0 + kTie)) return true;
    if (value < inc_value * (1.0 - kTie)) return false;
    if (norm2 < inc_norm2) return true;
    if (norm2 > inc_norm2) return false;
    return std::lexicographical_compare(beta.begin(), beta.end(),
                                        inc_beta.begin(), inc_beta.end());
}

}  // namespace detail

using detail::LayerContext;

void SolverConfig::require_valid() const {
    if (restarts < 1 || grid_points_per_dim < 2 || max_iterations < 1 ||
        !(objective_tolerance > 0.0)) {
        throw std::invalid_argument(
            "solver config needs restarts >= 1, grid >= 2, max_iterations >= 1 "
            "and a positive tolerance");
    }
}

double layer_subproblem_objective(const LayeredNetwork& network,
                                  const ScalingVector& prefix, int layer,
                                  std::span<const double> candidate) {
    if (layer < 1 || layer > network.num_relay_layers()) {
        throw std::invalid_argument("layer out of range");
    }
    const LayerContext ctx = detail::make_layer_context(network, prefix, layer);
    if (static_cast<int>(candidate.size()) != ctx.n) {
        throw std::invalid_argument("candidate size does not match the layer");
    }
    for (int j = 0; j < ctx.n; ++j) {
        const double limit2 = ctx.bmax[j] * ctx.bmax[j] * (1.0 + kFeasibilityTolerance);
        if (candidate[j] * candidate[j] > limit2) {
            throw std::domain_error("candidate exceeds feasibility bound at node " +
                                    to_string({layer, j + 1}));
        }
    }
    return detail::next_layer_objective(ctx, candidate);
}

namespace {

struct Box {
    std::vector<double> lo, hi;
};

void clamp_into(const Box& box, std::vector<double>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
    }
}

double sum_sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

struct Incumbent {
    double value = -1.0;
    double norm2 = 0.0;
    std::vector<double> beta;

    void offer(double v, const std::vector<double>& candidate) {
        const double n2 = sum_sq(candidate);
        if (beta.empty() ||
            detail::candidate_better(v, n2, candidate, value, norm2, beta)) {
            value = v;
            norm2 = n2;
            beta = candidate;
        }
    }
};

/// Projected gradient ascent with central finite differences and a
/// backtracking step search. Returns iterations used; refines x in place.
template <typename F>
int ascend(F&& f, const Box& box, std::vector<double>& x, double& fx,
           double fd_step_scale, double tolerance, int max_iterations) {
    const std::size_t n = x.size();
    std::vector<double> step(n), grad(n), trial(n);
    double extent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        step[i] = fd_step_scale * std::max(1.0, std::abs(box.hi[i]));
        extent = std::max(extent, box.hi[i] - box.lo[i]);
    }
    if (extent == 0.0) return 0;

    int iterations = 0;
    for (; iterations < max_iterations; ++iterations) {
        double gnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = x[i];
            x[i] = xi + step[i];
            const double fp = f(x);
            x[i] = xi - step[i];
            const double fm = f(x);
            x[i] = xi;
            grad[i] = (fp - fm) / (2.0 * step[i]);
            gnorm += grad[i] * grad[i];
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm == 0.0) break;

        double t = 0.5 * extent / gnorm;
        bool improved = false;
        while (t * gnorm > 1e-18 * extent) {
            bool moved = false;
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = std::clamp(x[i] + t * grad[i], box.lo[i], box.hi[i]);
                moved = moved || trial[i] != x[i];
            }
            if (!moved) break;
            const double ft = f(trial);
            if (ft > fx) {
                const double gain = (ft - fx) / std::max(1.0, std::abs(fx));
                x = trial;
                fx = ft;
                improved = true;
                if (gain < tolerance) return iterations + 1;
                break;
            }
            t *= 0.5;
        }
        if (!improved) break;
    }
    return iterations;
}

}  // namespace

std::vector<double> optimize_layer(const LayeredNetwork& network,
                                   const ScalingVector& prefix, int layer,
                                   const SolverConfig& config,
                                   LayerDiagnostics* diagnostics) {
    if (layer < 1 || layer > network.num_relay_layers()) {
        throw std::invalid_argument("layer out of range");
    }
    config.require_valid();
    const LayerContext ctx = detail::make_layer_context(network, prefix, layer);
    const int n = ctx.n;

    Box box;
    box.hi = ctx.bmax;
    const bool signed_search = config.allow_negative_beta && !network.all_gains_positive();
    box.lo.resize(n);
    for (int j = 0; j < n; ++j) box.lo[j] = signed_search ? -ctx.bmax[j] : 0.0;
    // relays on no source->destination path cannot affect the SNR; pin to 0
    for (const NodeId& id : validate(network).disconnected) {
        if (id.layer == layer) box.lo[id.node - 1] = box.hi[id.node - 1] = 0.0;
    }

    const auto objective = [&](const std::vector<double>& beta) {
        return detail::next_layer_objective(ctx, beta);
    };

    Incumbent best;
    int starts = 0;
    int iterations = 0;
    std::vector<std::vector<double>> ascent_starts;

    // corners of the box
    if (n <= 14) {
        std::vector<double> corner(n);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int j = 0; j < n; ++j) {
                corner[j] = (mask >> j) & 1u ? box.hi[j] : box.lo[j];
            }
            best.offer(objective(corner), corner);
            if (mask == (1u << n) - 1u) ascent_starts.push_back(corner);
        }
    } else {
        ascent_starts.push_back(box.hi);
    }

    // coarse deterministic grid seeding for low dimensions
    const int seed_per_dim = n == 1 ? 33 : n == 2 ? 17 : n == 3 ? 9 : 0;
    if (seed_per_dim > 1) {
        Incumbent best_seed;
        std::vector<double> pt(n);
        std::vector<int> idx(n, 0);
        while (true) {
            for (int j = 0; j < n; ++j) {
                pt[j] = box.lo[j] +
                        (box.hi[j] - box.lo[j]) * idx[j] / (seed_per_dim - 1);
            }
            const double v = objective(pt);
            best.offer(v, pt);
            best_seed.offer(v, pt);
            int d = 0;
            while (d < n && ++idx[d] == seed_per_dim) idx[d++] = 0;
            if (d == n) break;
        }
        ascent_starts.push_back(best_seed.beta);
    }

    // random multistarts
    std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ull + layer);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int r = 0; r < config.restarts; ++r) {
        std::vector<double> pt(n);
        for (int j = 0; j < n; ++j) {
            pt[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * unit(rng);
        }
        ascent_starts.push_back(std::move(pt));
    }

    for (auto& start : ascent_starts) {
        clamp_into(box, start);
        double f = objective(start);
        iterations += ascend(objective, box, start, f, 1e-6,
                             config.objective_tolerance, config.max_iterations);
        best.offer(f, start);
        ++starts;
    }

    // refinement from the incumbent with a tighter difference step
    {
        std::vector<double> x = best.beta;
        double f = objective(x);
        iterations += ascend(objective, box, x, f, 1e-8,
                             config.objective_tolerance * 0.1,
                             config.max_iterations);
        best.offer(f, x);
    }

    if (diagnostics) {
        diagnostics->layer = layer;
        diagnostics->objective = best.value;
        diagnostics->iterations = iterations;
        diagnostics->starts = starts;
        diagnostics->at_bound.resize(n);
        for (int j = 0; j < n; ++j) {
            diagnostics->at_bound[j] =
                std::abs(best.beta[j]) >= ctx.bmax[j] * (1.0 - 1e-12);
        }
    }
    return best.beta;
}

OptimizationResult optimize_network(const LayeredNetwork& network,
                                    const SolverConfig& config) {
    OptimizationResult result;
    result.beta = ScalingVector::zeros(network);
    result.layers.reserve(network.num_relay_layers());
    for (int l = 1; l <= network.num_relay_layers(); ++l) {
        LayerDiagnostics diag;
        result.beta.values()[l - 1] = optimize_layer(network, result.beta, l,
                                                     config, &diag);
        result.layers.push_back(std::move(diag));
    }
    result.snr = snr_destination(network, result.beta);
    result.rate_bits = rate_from_snr(result.snr, LogBase::Two);
    return result;
}

}  // namespace anc
