#include "anc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anc {

double NodeCoeffs::noise_power_sum() const {
    double s = 0.0;
    for (const auto& [origin, c] : noise) s += c * c;
    return s;
}

namespace {

/// One hop: coefficients of layer `l`'s nodes -> coefficients of the nodes
/// of layer l+1 (or the destination when l == L).
std::vector<NodeCoeffs> step_layer(const LayeredNetwork& net,
                                   const std::vector<NodeCoeffs>& current,
                                   const std::vector<double>& beta_l, int l) {
    const int n_out = net.layer_size(l + 1);
    const int n_in = net.layer_size(l);
    std::vector<NodeCoeffs> next(n_out);
    std::vector<double> scratch(static_cast<std::size_t>(net.total_relays()), 0.0);
    std::vector<int> touched;
    for (int k = 1; k <= n_out; ++k) {
        NodeCoeffs& out = next[k - 1];
        touched.clear();
        for (int j = 1; j <= n_in; ++j) {
            if (!net.has_edge(l, j, k)) continue;
            const double w = net.gain(l, j, k) * beta_l[j - 1];
            const NodeCoeffs& in = current[j - 1];
            out.signal += w * in.signal;
            for (const auto& [origin, c] : in.noise) {
                if (scratch[origin] == 0.0) touched.push_back(origin);
                scratch[origin] += w * c;
            }
            const int own = net.relay_index(l, j);  // predecessor's own noise
            if (scratch[own] == 0.0) touched.push_back(own);
            scratch[own] += w;
        }
        std::sort(touched.begin(), touched.end());
        out.noise.reserve(touched.size());
        for (int origin : touched) {
            out.noise.emplace_back(origin, scratch[origin]);
            scratch[origin] = 0.0;
        }
    }
    return next;
}

PropagationState propagate(const LayeredNetwork& net, const ScalingVector& beta,
                           int last_layer, bool include_destination) {
    const int L = net.num_relay_layers();
    PropagationState state;
    state.relays.resize(L);

    // layer 1 receives the source directly: a = h_{s,j}, own noise only
    std::vector<NodeCoeffs> current(net.layer_size(1));
    for (int j = 1; j <= net.layer_size(1); ++j) {
        current[j - 1].signal = net.has_edge(0, 1, j) ? net.gain(0, 1, j) : 0.0;
    }
    state.relays[0] = current;
    state.layers_computed = 1;

    const int stop = include_destination ? L : last_layer;
    for (int l = 1; l < stop; ++l) {
        current = step_layer(net, current, beta.values()[l - 1], l);
        state.relays[l] = current;
        state.layers_computed = l + 1;
    }
    if (include_destination) {
        state.destination = step_layer(net, current, beta.values()[L - 1], L)[0];
        state.layers_computed = L + 1;
    }
    return state;
}

}  // namespace

PropagationState forward_propagate(const LayeredNetwork& network,
                                   const ScalingVector& beta) {
    beta.require_shape(network);
    return propagate(network, beta, network.num_relay_layers(), true);
}

PropagationState propagate_through(const LayeredNetwork& network,
                                   const ScalingVector& beta, int last_layer) {
    beta.require_shape(network);
    if (last_layer < 1 || last_layer > network.num_relay_layers()) {
        throw std::invalid_argument("propagate_through: layer out of range");
    }
    return propagate(network, beta, last_layer, false);
}

double node_received_power(const NodeCoeffs& coeffs, double source_power,
                           double noise_variance) {
    return coeffs.signal * coeffs.signal * source_power +
           noise_variance * (coeffs.noise_power_sum() + 1.0);
}

double node_snr(const NodeCoeffs& coeffs, double source_power, double noise_variance) {
    return coeffs.signal * coeffs.signal * source_power /
           (noise_variance * (1.0 + coeffs.noise_power_sum()));
}

double received_power(const LayeredNetwork& network, const ScalingVector& beta,
                      int layer, int node) {
    const PropagationState state = propagate_through(network, beta, layer);
    return node_received_power(state.relays[layer - 1][node - 1],
                               network.source_power(), network.noise_variance());
}

std::vector<double> beta_max_for_layer(const LayeredNetwork& network,
                                       const ScalingVector& beta_prefix, int layer) {
    const PropagationState state = propagate_through(network, beta_prefix, layer);
    std::vector<double> out(network.layer_size(layer));
    for (int j = 1; j <= network.layer_size(layer); ++j) {
        const double pr = node_received_power(state.relays[layer - 1][j - 1],
                                              network.source_power(),
                                              network.noise_variance());
        out[j - 1] = std::sqrt(network.relay_power(layer, j) / pr);
    }
    return out;
}

double snr_destination(const LayeredNetwork& network, const ScalingVector& beta) {
    const PropagationState state = forward_propagate(network, beta);
    return node_snr(state.destination, network.source_power(),
                    network.noise_variance());
}

double rate_from_snr(double snr, LogBase base) {
    return base == LogBase::Two ? 0.5 * std::log2(1.0 + snr)
                                : 0.5 * std::log1p(snr);
}

double anc_rate(const LayeredNetwork& network, const ScalingVector& beta, LogBase base) {
    return rate_from_snr(snr_destination(network, beta), base);
}

SnrReport check_feasibility(const LayeredNetwork& network, const ScalingVector& beta) {
    beta.require_shape(network);
    const int L = network.num_relay_layers();
    SnrReport report;
    report.received_power.resize(L);
    report.beta_max.resize(L);
    report.transmit_power.resize(L);

    const PropagationState state = forward_propagate(network, beta);
    for (int l = 1; l <= L; ++l) {
        const int n = network.layer_size(l);
        report.received_power[l - 1].resize(n);
        report.beta_max[l - 1].resize(n);
        report.transmit_power[l - 1].resize(n);
        for (int j = 1; j <= n; ++j) {
            const double pr = node_received_power(state.relays[l - 1][j - 1],
                                                  network.source_power(),
                                                  network.noise_variance());
            const double b = beta.at(l, j);
            const double bmax2 = network.relay_power(l, j) / pr;
            report.received_power[l - 1][j - 1] = pr;
            report.beta_max[l - 1][j - 1] = std::sqrt(bmax2);
            report.transmit_power[l - 1][j - 1] = b * b * pr;
            if (b * b > bmax2 * (1.0 + kFeasibilityTolerance)) {
                report.feasible = false;
                report.violations.push_back({l, j});
            }
        }
    }
    report.snr_dest = node_snr(state.destination, network.source_power(),
                               network.noise_variance());
    report.rate_bits = rate_from_snr(report.snr_dest, LogBase::Two);
    return report;
}

}  // namespace anc
