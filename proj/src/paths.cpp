#include "anc/paths.hpp"

#include <stdexcept>

namespace anc {

namespace {

void walk(const LayeredNetwork& net, int layer, int node,
          std::vector<NodeId>& prefix, std::vector<std::vector<NodeId>>& out) {
    const int L = net.num_relay_layers();
    if (layer == L + 1) {
        out.push_back(prefix);
        return;
    }
    for (int k = 1; k <= net.layer_size(layer + 1); ++k) {
        if (!net.has_edge(layer, node, k)) continue;
        if (layer + 1 <= L) prefix.push_back({layer + 1, k});
        walk(net, layer + 1, k, prefix, out);
        if (layer + 1 <= L) prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<NodeId>> enumerate_paths(const LayeredNetwork& network,
                                                 NodeId from) {
    const int L = network.num_relay_layers();
    if (from.layer < 0 || from.layer > L) {
        throw std::invalid_argument("enumerate_paths: origin layer out of range");
    }
    if (from.node < 1 || from.node > network.layer_size(from.layer)) {
        throw std::invalid_argument("enumerate_paths: origin node out of range");
    }
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> prefix;
    if (from.layer >= 1) prefix.push_back(from);  // K_lj tuples include the relay itself
    walk(network, from.layer, from.node, prefix, out);
    return out;
}

ModifiedGains modified_gains_by_paths(const LayeredNetwork& network,
                                      const ScalingVector& beta) {
    beta.require_shape(network);
    const int L = network.num_relay_layers();
    ModifiedGains gains;
    gains.relay_noise.reserve(network.layer_sizes().size());
    for (int n : network.layer_sizes()) gains.relay_noise.emplace_back(n, 0.0);

    // source: gain into the first relay, then (beta * gain) down to t
    for (const auto& path : enumerate_paths(network, {0, 1})) {
        double product = network.gain(0, 1, path.front().node);
        for (std::size_t i = 0; i < path.size(); ++i) {
            const NodeId& hop = path[i];
            const int next = (i + 1 < path.size()) ? path[i + 1].node : 1;
            product *= beta.at(hop.layer, hop.node) * network.gain(hop.layer, hop.node, next);
        }
        gains.source += product;
    }

    // relay (l,j): its own beta first, no incoming gain (noise enters with unit gain)
    for (int l = 1; l <= L; ++l) {
        for (int j = 1; j <= network.layer_size(l); ++j) {
            double sum = 0.0;
            for (const auto& path : enumerate_paths(network, {l, j})) {
                double product = 1.0;
                for (std::size_t i = 0; i < path.size(); ++i) {
                    const NodeId& hop = path[i];
                    const int next = (i + 1 < path.size()) ? path[i + 1].node : 1;
                    product *= beta.at(hop.layer, hop.node) *
                               network.gain(hop.layer, hop.node, next);
                }
                sum += product;
            }
            gains.relay_noise[l - 1][j - 1] = sum;
        }
    }
    return gains;
}

}  // namespace anc
