#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace anc {

/// Address of a node. Relay layers are 1..L and node indices 1..n_l;
/// layer 0 is the source, layer L+1 the destination (one node each).
struct NodeId {
    int layer = 0;
    int node = 0;

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(const NodeId& id);

/// Directed edge between nodes of adjacent layers. Edges whose to_layer is
/// not from_layer + 1 can be constructed (so that malformed inputs are
/// representable) but are rejected by validate().
struct Edge {
    int from_layer = 0;
    int from_node = 1;
    int to_layer = 1;
    int to_node = 1;
    double gain = 0.0;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    std::vector<NodeId> disconnected;

    bool valid() const { return errors.empty(); }
};

/// Layered relay network: L layers of relay nodes between a single source
/// and a single destination, edges only between adjacent layers, per-node
/// transmit power constraints and a common noise variance at every node.
///
/// Gains are kept sparsely per edge; a missing edge means "no link" and is
/// distinct from an explicit zero-gain edge (only the latter takes part in
/// path enumeration). The object is immutable after construction.
class LayeredNetwork {
  public:
    LayeredNetwork(std::vector<int> layer_sizes,
                   std::vector<Edge> edges,
                   double source_power,
                   std::vector<std::vector<double>> relay_powers,
                   double noise_variance);

    int num_relay_layers() const { return static_cast<int>(layer_sizes_.size()); }
    /// Size of any layer in 0..L+1 (source and destination count as 1).
    int layer_size(int layer) const;
    int total_relays() const { return total_relays_; }

    double source_power() const { return source_power_; }
    double noise_variance() const { return noise_variance_; }
    double relay_power(int layer, int node) const;
    const std::vector<std::vector<double>>& relay_powers() const { return relay_powers_; }
    const std::vector<int>& layer_sizes() const { return layer_sizes_; }

    /// Gain of edge (layer, from) -> (layer+1, to); 0.0 when absent.
    double gain(int from_layer, int from_node, int to_node) const;
    bool has_edge(int from_layer, int from_node, int to_node) const;

    /// All edges as given at construction (including malformed ones).
    const std::vector<Edge>& edges() const { return edges_; }

    /// True when every present edge has a strictly positive gain.
    bool all_gains_positive() const;

    /// Flat index of a relay in layer-major order, 0-based.
    int relay_index(int layer, int node) const;
    NodeId relay_at(int flat_index) const;

  private:
    void check_node(int layer, int node, const char* what) const;

    std::vector<int> layer_sizes_;
    std::vector<Edge> edges_;
    double source_power_ = 0.0;
    std::vector<std::vector<double>> relay_powers_;
    double noise_variance_ = 0.0;
    int total_relays_ = 0;
    std::vector<int> layer_offsets_;
    // dense adjacency per layer pair l in 0..L: n_l x n_{l+1}
    std::vector<std::vector<double>> gain_table_;
    std::vector<std::vector<std::uint8_t>> present_table_;
};

/// Structural soundness checks that do not throw: layering violations and
/// non-positive powers are reported as errors, relays that lie on no
/// source->destination path as `disconnected(l,j)` warnings.
ValidationReport validate(const LayeredNetwork& network);

/// Per-relay scaling (amplification) factors, shaped like the network's
/// relay layers. Plain value type; feasibility is checked, not enforced.
class ScalingVector {
  public:
    ScalingVector() = default;
    explicit ScalingVector(std::vector<std::vector<double>> values)
        : values_(std::move(values)) {}

    static ScalingVector zeros(const LayeredNetwork& network);
    static ScalingVector constant(const LayeredNetwork& network, double value);

    double at(int layer, int node) const;
    double& at(int layer, int node);

    const std::vector<std::vector<double>>& values() const { return values_; }
    std::vector<std::vector<double>>& values() { return values_; }

    bool shape_matches(const LayeredNetwork& network) const;
    /// Throws std::invalid_argument when the shape disagrees with the network.
    void require_shape(const LayeredNetwork& network) const;

    friend bool operator==(const ScalingVector&, const ScalingVector&) = default;

  private:
    std::vector<std::vector<double>> values_;
};

}  // namespace anc
