#pragma once

#include <stdexcept>
#include <string>

#include "anc/network.hpp"

namespace anc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Network description files are JSON objects with exactly the fields
/// `layers` (relay layer sizes), `edges` (rows [l, j, k, gain] meaning layer
/// l node j -> layer l+1 node k; l = 0 rows leave the source, l = L rows
/// enter the destination with k = 1), `source_power`, `relay_powers` (per
/// layer, per node) and `noise_variance`, plus an optional free-text
/// `comment`. Unknown fields are rejected.
LayeredNetwork network_from_json_text(const std::string& text,
                                      std::string* comment = nullptr);
LayeredNetwork load_network(const std::string& path, std::string* comment = nullptr);

std::string network_to_json_text(const LayeredNetwork& network,
                                 const std::string& comment = "");
void save_network(const LayeredNetwork& network, const std::string& path,
                  const std::string& comment = "");

/// Scaling vector files: {"beta": [[layer-1 values], [layer-2 values], ...]}.
ScalingVector beta_from_json_text(const std::string& text,
                                  const LayeredNetwork& network);
ScalingVector load_beta(const std::string& path, const LayeredNetwork& network);
std::string beta_to_json_text(const ScalingVector& beta);

/// Equality of the described channel: same shape, powers, noise and edge
/// gains (edge order is irrelevant).
bool same_network(const LayeredNetwork& a, const LayeredNetwork& b);

}  // namespace anc
