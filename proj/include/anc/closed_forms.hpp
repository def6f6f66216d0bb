#pragma once

#include <vector>

#include "anc/network.hpp"

namespace anc {

/// Linear amplify-and-forward chain: L relays in series, hop gains
/// h_0..h_L (source->relay1 .. relayL->destination).
struct LinearChainSpec {
    int num_relays = 1;                 // L
    std::vector<double> gains;          // size L+1
    double source_power = 1.0;
    std::vector<double> relay_powers;   // size L
    double noise_variance = 1.0;

    void require_consistent() const;    // throws std::invalid_argument
};

LayeredNetwork build_chain(const LinearChainSpec& spec);

/// Per-relay feasibility bounds evaluated left to right with every earlier
/// relay at its own bound.
std::vector<double> chain_beta_max(const LinearChainSpec& spec);

/// Received SNR at node `index` (1..L = relays, L+1 = destination) for the
/// given scaling factors, from the chain's closed form.
double chain_node_snr(const LinearChainSpec& spec, const std::vector<double>& beta,
                      int index);

/// Destination SNR of the equal-gain equal-power chain with every relay at
/// its bound. The (beta*h)^2 -> 1 limit is handled explicitly.
double equal_chain_opt_snr(int num_relays, double gain, double power,
                           double noise_variance);

/// Fully connected layered network with N relays per layer, a common gain on
/// every link and a common relay power.
struct EcgalSpec {
    int nodes_per_layer = 1;   // N
    int num_layers = 1;        // L
    double gain = 1.0;         // h
    double relay_power = 1.0;  // P
    double source_power = 1.0;
    double noise_variance = 1.0;

    /// x = N h^2 P / sigma^2, recomputed on demand.
    double snr_parameter() const;
    void require_consistent() const;
};

LayeredNetwork build_ecgal(const EcgalSpec& spec);

/// Per-layer bound shared by all nodes of a layer (network symmetry),
/// evaluated with earlier layers at their bounds.
std::vector<double> ecgal_symmetric_beta_max(const EcgalSpec& spec);

/// Destination SNR at the symmetric bound assignment (the optimal operating
/// point for this family).
double ecgal_opt_snr(const EcgalSpec& spec);

/// MAC cut-set bound 0.5*log2(1 + N*x), bits.
double mac_cutset_bound_bits(int nodes_per_layer, double x);

/// Leading-order (in N) destination SNR for vanishing source power.
double case1_leading_order(const EcgalSpec& spec);
/// Leading-order (in N) destination SNR for large source power.
double case2_leading_order(const EcgalSpec& spec);
/// |approx - exact| / exact against ecgal_opt_snr at the same parameters.
double case1_relative_deviation(const EcgalSpec& spec);
double case2_relative_deviation(const EcgalSpec& spec);

struct GapSweepRow {
    int num_layers = 0;
    double x = 0.0;
    double capacity_bits = 0.0;
    double rate_bits = 0.0;
    double gap_bits = 0.0;
};

/// Cut-set gap table over (L, x): h = sigma = 1, P = x/N, source power as
/// given (large values probe the high source power regime). Rows ordered L
/// outer, x inner.
std::vector<GapSweepRow> gap_sweep(int nodes_per_layer,
                                   const std::vector<int>& layer_counts,
                                   const std::vector<double>& x_grid,
                                   double source_power);

std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace anc
