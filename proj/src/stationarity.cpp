#include "anc/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anc/numdiff.hpp"
#include "anc/propagation.hpp"

namespace anc {

const char* to_string(StationaryKind kind) {
    switch (kind) {
        case StationaryKind::NotStationary: return "not-stationary";
        case StationaryKind::Maximum: return "maximum";
        case StationaryKind::Minimum: return "minimum";
        case StationaryKind::Saddle: return "saddle";
        case StationaryKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

StationarityReport stationarity_check(const LayeredNetwork& network,
                                      const ScalingVector& beta,
                                      double gradient_tolerance,
                                      double eigenvalue_tolerance) {
    beta.require_shape(network);
    if (network.total_relays() > 3) {
        throw std::invalid_argument(
            "stationarity_check is limited to networks with at most 3 relays");
    }
    const int n = network.total_relays();
    std::vector<double> x(n);
    {
        int pos = 0;
        for (const auto& layer : beta.values()) {
            for (double v : layer) x[pos++] = v;
        }
    }
    const auto snr_of = [&](const std::vector<double>& flat) {
        ScalingVector s = ScalingVector::zeros(network);
        int pos = 0;
        for (auto& layer : s.values()) {
            for (double& v : layer) v = flat[pos++];
        }
        return snr_destination(network, s);
    };

    std::vector<double> step(n);
    for (int i = 0; i < n; ++i) step[i] = 1e-5 * std::max(1.0, std::abs(x[i]));
    if (*std::min_element(step.begin(), step.end()) <= 0.0) {
        throw std::runtime_error("finite-difference step underflow");
    }

    StationarityReport report;
    report.snr = snr_of(x);
    report.gradient = central_gradient(snr_of, x, step);
    for (double g : report.gradient) report.gradient_norm += g * g;
    report.gradient_norm = std::sqrt(report.gradient_norm);
    report.hessian = central_hessian(snr_of, x, step);
    report.hessian_determinant = matrix_determinant(report.hessian);
    report.eigenvalues = symmetric_eigenvalues(report.hessian);

    if (report.gradient_norm > gradient_tolerance) {
        report.kind = StationaryKind::NotStationary;
        return report;
    }
    double largest = 0.0;
    for (double e : report.eigenvalues) largest = std::max(largest, std::abs(e));
    const double cutoff = eigenvalue_tolerance * std::max(1.0, largest);
    bool has_pos = false, has_neg = false, has_zero = false;
    for (double e : report.eigenvalues) {
        if (e > cutoff) has_pos = true;
        else if (e < -cutoff) has_neg = true;
        else has_zero = true;
    }
    if (has_zero) report.kind = StationaryKind::Degenerate;
    else if (has_pos && has_neg) report.kind = StationaryKind::Saddle;
    else if (has_pos) report.kind = StationaryKind::Minimum;
    else report.kind = StationaryKind::Maximum;
    return report;
}

bool is_diamond(const LayeredNetwork& network) {
    if (network.num_relay_layers() != 1 || network.layer_size(1) != 2) return false;
    return network.has_edge(0, 1, 1) && network.has_edge(0, 1, 2) &&
           network.has_edge(1, 1, 1) && network.has_edge(1, 2, 1);
}

namespace {

struct DiamondGains {
    double s1, s2, r1, r2;  // source->relay1, source->relay2, relay1->t, relay2->t
};

DiamondGains diamond_gains(const LayeredNetwork& network) {
    if (!is_diamond(network)) {
        throw std::invalid_argument("network is not a 2-relay diamond");
    }
    DiamondGains g{network.gain(0, 1, 1), network.gain(0, 1, 2),
                   network.gain(1, 1, 1), network.gain(1, 2, 1)};
    if (g.s1 == 0.0 || g.s2 == 0.0 || g.r1 == 0.0 || g.r2 == 0.0) {
        throw std::invalid_argument("diamond stationarity needs nonzero gains");
    }
    return g;
}

}  // namespace

double diamond_null_line_beta1(const LayeredNetwork& network, double beta2) {
    const DiamondGains g = diamond_gains(network);
    return -(g.s2 * g.r2 / (g.s1 * g.r1)) * beta2;
}

std::vector<DiamondStationaryPoint> diamond_interior_stationary_points(
    const LayeredNetwork& network, double box_width_factor) {
    const DiamondGains g = diamond_gains(network);
    const double ps = network.source_power();
    const double s2 = network.noise_variance();
    const double b1max = std::sqrt(network.relay_power(1, 1) / (g.s1 * g.s1 * ps + s2));
    const double b2max = std::sqrt(network.relay_power(1, 2) / (g.s2 * g.s2 * ps + s2));

    // first-order conditions off the zero-signal line, in polynomial form
    const auto f1 = [&](double b1, double b2) {
        return g.s2 * g.r1 * g.r2 * b1 * b2 - g.s1 * (1.0 + g.r2 * g.r2 * b2 * b2);
    };
    const auto f2 = [&](double b1, double b2) {
        return g.s1 * g.r1 * g.r2 * b1 * b2 - g.s2 * (1.0 + g.r1 * g.r1 * b1 * b1);
    };
    // f1 = 0 pins beta1 as a function of beta2; the remaining residual is f2
    const auto beta1_of = [&](double b2) {
        return g.s1 * (1.0 + g.r2 * g.r2 * b2 * b2) / (g.s2 * g.r1 * g.r2 * b2);
    };
    const auto residual = [&](double b2) { return f2(beta1_of(b2), b2); };

    const double width = box_width_factor * std::max({b1max, b2max, 1.0});
    constexpr int kSamples = 20000;
    std::vector<DiamondStationaryPoint> roots;
    for (int sign : {-1, 1}) {
        double prev_b2 = sign * width * 1e-9;
        double prev_r = residual(prev_b2);
        for (int i = 1; i <= kSamples; ++i) {
            const double b2 = sign * width * i / kSamples;
            const double r = residual(b2);
            if (std::isfinite(prev_r) && std::isfinite(r) && prev_r * r < 0.0) {
                double lo = prev_b2, hi = b2, rlo = prev_r;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double rm = residual(mid);
                    if (rlo * rm <= 0.0) hi = mid;
                    else lo = mid, rlo = rm;
                }
                DiamondStationaryPoint pt;
                pt.beta2 = 0.5 * (lo + hi);
                pt.beta1 = beta1_of(pt.beta2);
                pt.residual = std::max(std::abs(f1(pt.beta1, pt.beta2)),
                                       std::abs(f2(pt.beta1, pt.beta2)));
                pt.inside_feasible_box =
                    pt.beta1 * pt.beta1 <= b1max * b1max * (1.0 + kFeasibilityTolerance) &&
                    pt.beta2 * pt.beta2 <= b2max * b2max * (1.0 + kFeasibilityTolerance);
                roots.push_back(pt);
            }
            prev_b2 = b2;
            prev_r = r;
        }
    }
    return roots;
}

}  // namespace anc
