#pragma once

// Shared fixtures for the test suites: canonical small networks and seeded
// random instances.

#include <random>
#include <vector>

#include "anc/network.hpp"

namespace anc::testing {

/// Two relay layers of two nodes each, fully connected stage by stage.
/// gains[0] = {s->11, s->12}, gains[1] = {11->21, 11->22, 12->21, 12->22},
/// gains[2] = {21->t, 22->t}.
inline LayeredNetwork make_two_by_two(const std::vector<std::vector<double>>& gains,
                                      double source_power = 10.0,
                                      double relay_power = 10.0,
                                      double noise_variance = 1.0) {
    std::vector<Edge> edges;
    edges.push_back({0, 1, 1, 1, gains[0][0]});
    edges.push_back({0, 1, 1, 2, gains[0][1]});
    edges.push_back({1, 1, 2, 1, gains[1][0]});
    edges.push_back({1, 1, 2, 2, gains[1][1]});
    edges.push_back({1, 2, 2, 1, gains[1][2]});
    edges.push_back({1, 2, 2, 2, gains[1][3]});
    edges.push_back({2, 1, 3, 1, gains[2][0]});
    edges.push_back({2, 2, 3, 1, gains[2][1]});
    return LayeredNetwork({2, 2}, std::move(edges), source_power,
                          {{relay_power, relay_power}, {relay_power, relay_power}},
                          noise_variance);
}

/// The 2x2 network with unit gains everywhere.
inline LayeredNetwork make_unit_two_by_two() {
    return make_two_by_two({{1, 1}, {1, 1, 1, 1}, {1, 1}});
}

inline LayeredNetwork make_diamond(double hs1, double hs2, double h1t, double h2t,
                                   double source_power, double p1, double p2,
                                   double noise_variance) {
    std::vector<Edge> edges = {{0, 1, 1, 1, hs1},
                               {0, 1, 1, 2, hs2},
                               {1, 1, 2, 1, h1t},
                               {1, 2, 2, 1, h2t}};
    return LayeredNetwork({2}, std::move(edges), source_power, {{p1, p2}},
                          noise_variance);
}

/// Diamond with the reference parameters (noise variance 0.1 reproduces the
/// quoted feasibility bounds 0.995 and 7.07 exactly).
inline LayeredNetwork make_reference_diamond() {
    return make_diamond(1.0, 0.1, 1.0, 1.0, 10.0, 10.0, 10.0, 0.1);
}

/// Fully connected random layered network with every edge present.
inline LayeredNetwork random_network(std::mt19937_64& rng, int max_layers,
                                     int max_nodes, double gain_lo, double gain_hi) {
    std::uniform_int_distribution<int> layer_count(1, max_layers);
    std::uniform_int_distribution<int> node_count(1, max_nodes);
    std::uniform_real_distribution<double> gain(gain_lo, gain_hi);
    std::uniform_real_distribution<double> power(0.5, 20.0);
    std::uniform_real_distribution<double> noise(0.05, 1.0);

    const int L = layer_count(rng);
    std::vector<int> sizes(L);
    for (int& s : sizes) s = node_count(rng);

    std::vector<Edge> edges;
    std::vector<std::vector<double>> powers(L);
    const auto size_of = [&](int layer) {
        return (layer == 0 || layer == L + 1) ? 1 : sizes[layer - 1];
    };
    for (int l = 0; l <= L; ++l) {
        for (int j = 1; j <= size_of(l); ++j) {
            for (int k = 1; k <= size_of(l + 1); ++k) {
                edges.push_back({l, j, l + 1, k, gain(rng)});
            }
        }
    }
    for (int l = 0; l < L; ++l) {
        powers[l].resize(sizes[l]);
        for (double& p : powers[l]) p = power(rng);
    }
    return LayeredNetwork(std::move(sizes), std::move(edges), power(rng),
                          std::move(powers), noise(rng));
}

inline ScalingVector random_beta(std::mt19937_64& rng, const LayeredNetwork& net,
                                 double lo, double hi) {
    std::uniform_real_distribution<double> value(lo, hi);
    ScalingVector beta = ScalingVector::zeros(net);
    for (auto& layer : beta.values()) {
        for (double& b : layer) b = value(rng);
    }
    return beta;
}

}  // namespace anc::testing
