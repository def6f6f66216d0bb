#pragma once

// Internal dense working set for per-layer solvers: signal/noise coefficients
// of one relay layer's nodes under a fixed prefix, feasibility bounds, and
// the gains into the following layer. Not part of the public API.

#include <span>
#include <vector>

#include "anc/network.hpp"
#include "anc/propagation.hpp"

namespace anc::detail {

struct LayerContext {
    int layer = 0;       // l (1-based)
    int n = 0;           // nodes in layer l
    int n_next = 0;      // nodes in layer l+1 (1 when next is the destination)
    int origins = 0;     // relays in layers < l
    bool last = false;   // next layer is the destination
    double source_power = 0.0;
    double noise_variance = 0.0;
    std::vector<double> a;      // [n] signal coefficients
    std::vector<double> b;      // [n * origins] noise coefficients, node-major
    std::vector<double> bmax;   // [n] feasibility bounds
    std::vector<double> gain;   // [n * n_next] gains into the next layer

    double b_at(int node, int origin) const {
        return b[static_cast<std::size_t>(node) * origins + origin];
    }
    double gain_at(int node, int next_node) const {
        return gain[static_cast<std::size_t>(node) * n_next + next_node];
    }
};

/// Context of `layer` with coefficients derived from the prefix.
LayerContext make_layer_context(const LayeredNetwork& network,
                                const ScalingVector& prefix, int layer);

/// Context of layer+1 given the chosen scaling of the current layer.
LayerContext advance_layer_context(const LayeredNetwork& network,
                                   const LayerContext& current,
                                   std::span<const double> beta);

/// prod over next-layer nodes of (1 + SNR). No feasibility checks.
double next_layer_objective(const LayerContext& ctx, std::span<const double> beta);

/// Preference order for equal-quality candidates: higher value wins, then
/// smaller sum of squared scaling factors, then lexicographically smaller.
/// Values within 1e-12 relative count as equal.
bool candidate_better(double value, double norm2, std::span<const double> beta,
                      double inc_value, double inc_norm2,
                      std::span<const double> inc_beta);

}  // namespace anc::detail
