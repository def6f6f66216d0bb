#pragma once

#include <vector>

#include "anc/network.hpp"

namespace anc {

enum class StationaryKind { NotStationary, Maximum, Minimum, Saddle, Degenerate };

const char* to_string(StationaryKind kind);

/// Finite-difference first- and second-order picture of SNR_t at one point.
struct StationarityReport {
    double snr = 0.0;
    std::vector<double> gradient;
    double gradient_norm = 0.0;
    std::vector<std::vector<double>> hessian;
    double hessian_determinant = 0.0;
    std::vector<double> eigenvalues;  // ascending
    StationaryKind kind = StationaryKind::NotStationary;
};

/// Classifies the point via central differences of SNR_t over the flattened
/// scaling vector. Limited to networks with at most 3 relays. A point is
/// stationary when the gradient norm is below gradient_tolerance; it is then
/// labelled by the Hessian eigenvalue signs, with eigenvalues within
/// eigenvalue_tolerance (relative to the largest magnitude) treated as zero.
StationarityReport stationarity_check(const LayeredNetwork& network,
                                      const ScalingVector& beta,
                                      double gradient_tolerance = 1e-6,
                                      double eigenvalue_tolerance = 1e-6);

/// Diamond topology: one layer of two relays, all four links present.
bool is_diamond(const LayeredNetwork& network);

/// beta_1 on the zero-signal line (the locus where the destination signal
/// coefficient vanishes and the SNR gradient is null) for a given beta_2.
double diamond_null_line_beta1(const LayeredNetwork& network, double beta2);

struct DiamondStationaryPoint {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double residual = 0.0;        // max |F_i| of the stationarity system
    bool inside_feasible_box = false;
};

/// Numeric root search for the diamond's interior stationary-point system
/// (the pair of first-order conditions away from the zero-signal line).
/// Scans beta_2 over [-width, width] scaled by the feasibility box, brackets
/// sign changes and bisects. The returned list is empty when no real root
/// exists, which is the case for every diamond.
std::vector<DiamondStationaryPoint> diamond_interior_stationary_points(
    const LayeredNetwork& network, double box_width_factor = 8.0);

}  // namespace anc
