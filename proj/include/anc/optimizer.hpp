#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anc/network.hpp"
#include "anc/propagation.hpp"

namespace anc {

struct SolverConfig {
    int restarts = 16;               // random multistarts per layer subproblem
    int grid_points_per_dim = 200;   // brute-force oracle resolution
    double objective_tolerance = 1e-10;
    int max_iterations = 500;
    /// Search [-beta_max, beta_max] instead of [0, beta_max]. On networks
    /// whose gains are all positive the search space is restricted to
    /// [0, beta_max] regardless (sign flips cannot increase the SNR there).
    bool allow_negative_beta = true;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when a knob is out of range.
    void require_valid() const;
};

struct LayerDiagnostics {
    int layer = 0;
    double objective = 0.0;          // prod_j (1 + SNR_{l+1,j}) at the solution
    int iterations = 0;              // total ascent iterations across starts
    int starts = 0;                  // corner + seeded + random starts taken
    std::vector<bool> at_bound;      // |beta| at its bound, per node
};

struct OptimizationResult {
    ScalingVector beta;
    double snr = 0.0;
    double rate_bits = 0.0;
    std::vector<LayerDiagnostics> layers;
};

/// Networks larger than this are rejected by the exhaustive oracle.
inline constexpr int kBruteForceMaxRelays = 6;

/// prod over next-layer nodes of (1 + SNR) for a candidate assignment of
/// layer `layer`, with earlier layers fixed to `prefix`. For the last layer
/// the product has the single destination term. Throws std::domain_error
/// naming the first node whose candidate exceeds its feasibility bound.
double layer_subproblem_objective(const LayeredNetwork& network,
                                  const ScalingVector& prefix, int layer,
                                  std::span<const double> candidate);

/// Best layer assignment found by corner enumeration, coarse grid seeding and
/// multistart projected gradient ascent over the per-node boxes.
std::vector<double> optimize_layer(const LayeredNetwork& network,
                                   const ScalingVector& prefix, int layer,
                                   const SolverConfig& config,
                                   LayerDiagnostics* diagnostics = nullptr);

/// Layer-by-layer pass: each layer's scaling factors are chosen to maximize
/// the product of (1 + SNR) over the next layer, bounds recomputed from the
/// already-fixed earlier layers. Relays on no source->destination path are
/// pinned to zero.
OptimizationResult optimize_network(const LayeredNetwork& network,
                                    const SolverConfig& config = {});

/// Exhaustive nested-grid search: the grid of a layer is laid over bounds
/// computed from the outer layers' current grid point. Guarded to at most
/// kBruteForceMaxRelays relays. Returns the grid-best point (ties resolved
/// toward smaller total transmit scaling, then lexicographic).
OptimizationResult brute_force_optimize(const LayeredNetwork& network,
                                        const SolverConfig& config = {});

}  // namespace anc
