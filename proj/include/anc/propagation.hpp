#pragma once

#include <utility>
#include <vector>

#include "anc/network.hpp"
#include "anc/paths.hpp"

namespace anc {

/// Linear coefficients of a node's received signal: `signal` multiplies the
/// source symbol, `noise` maps each upstream relay (by flat index) to the
/// coefficient of that relay's injected noise. A node's own noise always
/// enters with coefficient 1 and is not stored.
struct NodeCoeffs {
    double signal = 0.0;
    std::vector<std::pair<int, double>> noise;  // sorted by flat origin index

    double noise_power_sum() const;  // sum of squared coefficients
};

/// Received-signal coefficients for every relay (and, once fully propagated,
/// the destination). Computed layer by layer, so the cost is polynomial even
/// though the coefficients equal sums over exponentially many paths.
struct PropagationState {
    std::vector<std::vector<NodeCoeffs>> relays;  // [layer-1][node-1]
    NodeCoeffs destination;
    int layers_computed = 0;  // L+1 when the destination row is valid
};

/// Feasibility and rate summary for one scaling vector.
struct SnrReport {
    std::vector<std::vector<double>> received_power;
    std::vector<std::vector<double>> beta_max;
    std::vector<std::vector<double>> transmit_power;
    double snr_dest = 0.0;
    double rate_bits = 0.0;
    bool feasible = true;
    std::vector<NodeId> violations;
};

/// Relative slack allowed when comparing beta^2 against beta_max^2 (pure
/// floating-point tolerance, not a modeling choice).
inline constexpr double kFeasibilityTolerance = 1e-9;

/// Coefficients at every relay and the destination for the given scaling
/// vector. Destination coefficients match modified_gains_by_paths exactly
/// (up to floating point).
PropagationState forward_propagate(const LayeredNetwork& network,
                                   const ScalingVector& beta);

/// Same recursion stopped after `last_layer` (1..L): relay rows 1..last_layer
/// are filled, using beta only for layers < last_layer.
PropagationState propagate_through(const LayeredNetwork& network,
                                   const ScalingVector& beta, int last_layer);

double node_snr(const NodeCoeffs& coeffs, double source_power, double noise_variance);
double node_received_power(const NodeCoeffs& coeffs, double source_power,
                           double noise_variance);

/// P_R at relay (layer, node); beta matters for layers < layer only.
double received_power(const LayeredNetwork& network, const ScalingVector& beta,
                      int layer, int node);

/// Largest feasible |beta| for each node of `layer`, given the scaling
/// factors of the earlier layers.
std::vector<double> beta_max_for_layer(const LayeredNetwork& network,
                                       const ScalingVector& beta_prefix, int layer);

double snr_destination(const LayeredNetwork& network, const ScalingVector& beta);

enum class LogBase { Two, Natural };

double rate_from_snr(double snr, LogBase base = LogBase::Two);
/// 0.5 * log2(1 + SNR_t), bits per channel use.
double anc_rate(const LayeredNetwork& network, const ScalingVector& beta,
                LogBase base = LogBase::Two);

/// Layer-by-layer feasibility audit: received powers and bounds are computed
/// with the given beta as prefix; any node with beta^2 above its bound
/// (beyond kFeasibilityTolerance) is reported as a violation.
SnrReport check_feasibility(const LayeredNetwork& network, const ScalingVector& beta);

}  // namespace anc
