#include "anc/network.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace anc {

std::string to_string(const NodeId& id) {
    return "(" + std::to_string(id.layer) + "," + std::to_string(id.node) + ")";
}

LayeredNetwork::LayeredNetwork(std::vector<int> layer_sizes,
                               std::vector<Edge> edges,
                               double source_power,
                               std::vector<std::vector<double>> relay_powers,
                               double noise_variance)
    : layer_sizes_(std::move(layer_sizes)),
      edges_(std::move(edges)),
      source_power_(source_power),
      relay_powers_(std::move(relay_powers)),
      noise_variance_(noise_variance) {
    if (layer_sizes_.empty()) {
        throw std::invalid_argument("network needs at least one relay layer");
    }
    for (std::size_t l = 0; l < layer_sizes_.size(); ++l) {
        if (layer_sizes_[l] < 1) {
            throw std::invalid_argument("layer " + std::to_string(l + 1) +
                                        " has non-positive size");
        }
    }
    const int L = num_relay_layers();
    if (static_cast<int>(relay_powers_.size()) != L) {
        throw std::invalid_argument("relay_powers has wrong number of layers");
    }
    for (int l = 0; l < L; ++l) {
        if (static_cast<int>(relay_powers_[l].size()) != layer_sizes_[l]) {
            throw std::invalid_argument("relay_powers layer " + std::to_string(l + 1) +
                                        " has wrong size");
        }
    }

    layer_offsets_.resize(L + 1, 0);
    for (int l = 0; l < L; ++l) layer_offsets_[l + 1] = layer_offsets_[l] + layer_sizes_[l];
    total_relays_ = layer_offsets_[L];

    gain_table_.resize(L + 1);
    present_table_.resize(L + 1);
    for (int l = 0; l <= L; ++l) {
        const std::size_t n = static_cast<std::size_t>(layer_size(l)) *
                              static_cast<std::size_t>(layer_size(l + 1));
        gain_table_[l].assign(n, 0.0);
        present_table_[l].assign(n, 0);
    }

    for (const Edge& e : edges_) {
        if (e.from_layer < 0 || e.from_layer > L || e.to_layer < 0 || e.to_layer > L + 1) {
            throw std::invalid_argument("edge references a layer outside 0..L+1");
        }
        check_node(e.from_layer, e.from_node, "edge source");
        check_node(e.to_layer, e.to_node, "edge target");
        if (e.to_layer != e.from_layer + 1) continue;  // kept for validate() to flag
        const int cols = layer_size(e.from_layer + 1);
        auto& present = present_table_[e.from_layer];
        const std::size_t idx = static_cast<std::size_t>(e.from_node - 1) * cols +
                                (e.to_node - 1);
        if (present[idx]) {
            throw std::invalid_argument("duplicate edge from " +
                                        to_string({e.from_layer, e.from_node}) + " to " +
                                        to_string({e.to_layer, e.to_node}));
        }
        present[idx] = 1;
        gain_table_[e.from_layer][idx] = e.gain;
    }
}

int LayeredNetwork::layer_size(int layer) const {
    const int L = num_relay_layers();
    if (layer < 0 || layer > L + 1) {
        throw std::out_of_range("layer index " + std::to_string(layer));
    }
    if (layer == 0 || layer == L + 1) return 1;
    return layer_sizes_[layer - 1];
}

void LayeredNetwork::check_node(int layer, int node, const char* what) const {
    if (node < 1 || node > layer_size(layer)) {
        throw std::invalid_argument(std::string(what) + " node index " +
                                    to_string({layer, node}) + " out of range");
    }
}

double LayeredNetwork::relay_power(int layer, int node) const {
    check_node(layer, node, "relay_power");
    if (layer < 1 || layer > num_relay_layers()) {
        throw std::out_of_range("relay_power layer out of range");
    }
    return relay_powers_[layer - 1][node - 1];
}

double LayeredNetwork::gain(int from_layer, int from_node, int to_node) const {
    if (from_layer < 0 || from_layer > num_relay_layers()) {
        throw std::out_of_range("gain(): layer out of range");
    }
    const int cols = layer_size(from_layer + 1);
    return gain_table_[from_layer][static_cast<std::size_t>(from_node - 1) * cols +
                                   (to_node - 1)];
}

bool LayeredNetwork::has_edge(int from_layer, int from_node, int to_node) const {
    if (from_layer < 0 || from_layer > num_relay_layers()) {
        throw std::out_of_range("has_edge(): layer out of range");
    }
    const int cols = layer_size(from_layer + 1);
    return present_table_[from_layer][static_cast<std::size_t>(from_node - 1) * cols +
                                      (to_node - 1)] != 0;
}

bool LayeredNetwork::all_gains_positive() const {
    for (int l = 0; l <= num_relay_layers(); ++l) {
        for (std::size_t i = 0; i < present_table_[l].size(); ++i) {
            if (present_table_[l][i] && gain_table_[l][i] <= 0.0) return false;
        }
    }
    return true;
}

int LayeredNetwork::relay_index(int layer, int node) const {
    check_node(layer, node, "relay_index");
    if (layer < 1 || layer > num_relay_layers()) {
        throw std::out_of_range("relay_index layer out of range");
    }
    return layer_offsets_[layer - 1] + node - 1;
}

NodeId LayeredNetwork::relay_at(int flat_index) const {
    if (flat_index < 0 || flat_index >= total_relays_) {
        throw std::out_of_range("relay_at index out of range");
    }
    int layer = 1;
    while (flat_index >= layer_offsets_[layer]) ++layer;
    return {layer, flat_index - layer_offsets_[layer - 1] + 1};
}

ValidationReport validate(const LayeredNetwork& network) {
    ValidationReport report;
    const int L = network.num_relay_layers();

    for (const Edge& e : network.edges()) {
        if (e.to_layer != e.from_layer + 1) {
            report.errors.push_back("edge " + to_string({e.from_layer, e.from_node}) +
                                    " -> " + to_string({e.to_layer, e.to_node}) +
                                    " does not connect adjacent layers");
        }
        if (!std::isfinite(e.gain)) {
            report.errors.push_back("edge " + to_string({e.from_layer, e.from_node}) +
                                    " -> " + to_string({e.to_layer, e.to_node}) +
                                    " has non-finite gain");
        }
    }
    if (!(network.source_power() > 0.0)) {
        report.errors.push_back("source_power must be strictly positive");
    }
    if (!(network.noise_variance() > 0.0)) {
        report.errors.push_back("noise_variance must be strictly positive");
    }
    for (int l = 1; l <= L; ++l) {
        for (int j = 1; j <= network.layer_size(l); ++j) {
            if (!(network.relay_power(l, j) > 0.0)) {
                report.errors.push_back("relay_power" + to_string({l, j}) +
                                        " must be strictly positive");
            }
        }
    }

    // forward reachability from the source
    std::vector<std::vector<bool>> fwd(L + 1);
    fwd[0] = {true};
    for (int l = 0; l < L; ++l) {
        fwd[l + 1].assign(network.layer_size(l + 1), false);
        for (int j = 1; j <= network.layer_size(l); ++j) {
            if (!fwd[l][j - 1]) continue;
            for (int k = 1; k <= network.layer_size(l + 1); ++k) {
                if (network.has_edge(l, j, k)) fwd[l + 1][k - 1] = true;
            }
        }
    }
    // backward reachability from the destination
    std::vector<std::vector<bool>> bwd(L + 2);
    bwd[L + 1] = {true};
    for (int l = L; l >= 1; --l) {
        bwd[l].assign(network.layer_size(l), false);
        for (int j = 1; j <= network.layer_size(l); ++j) {
            for (int k = 1; k <= network.layer_size(l + 1); ++k) {
                if (network.has_edge(l, j, k) && bwd[l + 1][k - 1]) {
                    bwd[l][j - 1] = true;
                    break;
                }
            }
        }
    }
    for (int l = 1; l <= L; ++l) {
        for (int j = 1; j <= network.layer_size(l); ++j) {
            if (!fwd[l][j - 1] || !bwd[l][j - 1]) {
                report.disconnected.push_back({l, j});
                report.warnings.push_back("disconnected" + to_string({l, j}));
            }
        }
    }
    return report;
}

ScalingVector ScalingVector::zeros(const LayeredNetwork& network) {
    std::vector<std::vector<double>> v;
    v.reserve(network.layer_sizes().size());
    for (int n : network.layer_sizes()) v.emplace_back(n, 0.0);
    return ScalingVector(std::move(v));
}

ScalingVector ScalingVector::constant(const LayeredNetwork& network, double value) {
    ScalingVector v = zeros(network);
    for (auto& layer : v.values_) {
        for (double& b : layer) b = value;
    }
    return v;
}

double ScalingVector::at(int layer, int node) const {
    return values_.at(layer - 1).at(node - 1);
}

double& ScalingVector::at(int layer, int node) {
    return values_.at(layer - 1).at(node - 1);
}

bool ScalingVector::shape_matches(const LayeredNetwork& network) const {
    if (values_.size() != network.layer_sizes().size()) return false;
    for (std::size_t l = 0; l < values_.size(); ++l) {
        if (static_cast<int>(values_[l].size()) != network.layer_sizes()[l]) return false;
    }
    return true;
}

void ScalingVector::require_shape(const LayeredNetwork& network) const {
    if (!shape_matches(network)) {
        throw std::invalid_argument("scaling vector shape does not match the network");
    }
}

}  // namespace anc
