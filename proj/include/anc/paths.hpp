#pragma once

#include <vector>

#include "anc/network.hpp"

namespace anc {

/// All directed paths from `from` to the destination, each given as the
/// ordered tuple of relay nodes it traverses. For the source ({0,1}) the
/// tuples contain L relays; for a relay, the tuple starts with that relay
/// itself. Only explicitly present edges are walked, so the list is empty
/// when no path exists. Exponential in depth; meant for small networks and
/// as a reference oracle.
std::vector<std::vector<NodeId>> enumerate_paths(const LayeredNetwork& network,
                                                 NodeId from);

/// End-to-end coefficients at the destination: the source coefficient is the
/// sum over source->destination paths of the products gain*beta along the
/// path; the per-relay noise coefficient is the analogous sum over paths
/// from that relay, starting with its own beta.
struct ModifiedGains {
    double source = 0.0;
    std::vector<std::vector<double>> relay_noise;  // [layer-1][node-1]
};

/// Reference (path enumeration) evaluation of the modified channel gains.
/// Exponential in the layer count; the layer-recursive forward_propagate
/// computes the same values in polynomial time.
ModifiedGains modified_gains_by_paths(const LayeredNetwork& network,
                                      const ScalingVector& beta);

}  // namespace anc
