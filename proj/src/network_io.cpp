#include "anc/network_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anc {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json parse_object(const std::string& text, const char* what) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    return j;
}

double as_number(const ordered_json& j, const std::string& what) {
    if (!j.is_number()) throw ParseError(what + " must be a number");
    return j.get<double>();
}

int as_int(const ordered_json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<int>();
}

}  // namespace

LayeredNetwork network_from_json_text(const std::string& text, std::string* comment) {
    const ordered_json j = parse_object(text, "network file");
    static const char* known[] = {"layers", "edges", "source_power",
                                  "relay_powers", "noise_variance", "comment"};
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                return key == k;
            }) == std::end(known)) {
            throw ParseError("network file: unknown field '" + key + "'");
        }
    }
    for (const char* required : {"layers", "edges", "source_power", "relay_powers",
                                 "noise_variance"}) {
        if (!j.contains(required)) {
            throw ParseError("network file: missing field '" + std::string(required) + "'");
        }
    }

    if (!j["layers"].is_array() || j["layers"].empty()) {
        throw ParseError("network file: 'layers' must be a non-empty array");
    }
    std::vector<int> sizes;
    for (const auto& s : j["layers"]) sizes.push_back(as_int(s, "layer size"));
    const int L = static_cast<int>(sizes.size());

    if (!j["edges"].is_array()) throw ParseError("network file: 'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 4) {
            throw ParseError("network file: each edge row must be [l, j, k, gain]");
        }
        Edge e;
        e.from_layer = as_int(row[0], "edge layer");
        e.from_node = as_int(row[1], "edge source node");
        e.to_layer = e.from_layer + 1;
        e.to_node = as_int(row[2], "edge target node");
        e.gain = as_number(row[3], "edge gain");
        if (e.from_layer < 0 || e.from_layer > L) {
            throw ParseError("network file: edge layer " +
                             std::to_string(e.from_layer) + " out of range 0.." +
                             std::to_string(L));
        }
        edges.push_back(e);
    }

    if (!j["relay_powers"].is_array() ||
        static_cast<int>(j["relay_powers"].size()) != L) {
        throw ParseError("network file: 'relay_powers' must have one row per layer");
    }
    std::vector<std::vector<double>> powers;
    for (int l = 0; l < L; ++l) {
        const auto& row = j["relay_powers"][l];
        if (!row.is_array() || static_cast<int>(row.size()) != sizes[l]) {
            throw ParseError("network file: relay_powers row " + std::to_string(l + 1) +
                             " must have " + std::to_string(sizes[l]) + " entries");
        }
        std::vector<double> p;
        for (const auto& v : row) p.push_back(as_number(v, "relay power"));
        powers.push_back(std::move(p));
    }

    if (j.contains("comment") && !j["comment"].is_string()) {
        throw ParseError("network file: 'comment' must be a string");
    }
    if (comment) {
        *comment = j.contains("comment") ? j["comment"].get<std::string>() : "";
    }

    try {
        return LayeredNetwork(std::move(sizes), std::move(edges),
                              as_number(j["source_power"], "source_power"),
                              std::move(powers),
                              as_number(j["noise_variance"], "noise_variance"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("network file: ") + e.what());
    }
}

LayeredNetwork load_network(const std::string& path, std::string* comment) {
    return network_from_json_text(read_file(path), comment);
}

std::string network_to_json_text(const LayeredNetwork& network,
                                 const std::string& comment) {
    ordered_json j;
    j["layers"] = network.layer_sizes();
    ordered_json edges = ordered_json::array();
    const int L = network.num_relay_layers();
    for (int l = 0; l <= L; ++l) {
        for (int a = 1; a <= network.layer_size(l); ++a) {
            for (int b = 1; b <= network.layer_size(l + 1); ++b) {
                if (network.has_edge(l, a, b)) {
                    edges.push_back({l, a, b, network.gain(l, a, b)});
                }
            }
        }
    }
    j["edges"] = std::move(edges);
    j["source_power"] = network.source_power();
    j["relay_powers"] = network.relay_powers();
    j["noise_variance"] = network.noise_variance();
    if (!comment.empty()) j["comment"] = comment;
    return j.dump(2) + "\n";
}

void save_network(const LayeredNetwork& network, const std::string& path,
                  const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << network_to_json_text(network, comment);
}

ScalingVector beta_from_json_text(const std::string& text,
                                  const LayeredNetwork& network) {
    const ordered_json j = parse_object(text, "beta file");
    for (const auto& [key, value] : j.items()) {
        if (key != "beta") throw ParseError("beta file: unknown field '" + key + "'");
    }
    if (!j.contains("beta") || !j["beta"].is_array()) {
        throw ParseError("beta file: missing 'beta' array");
    }
    std::vector<std::vector<double>> values;
    for (const auto& row : j["beta"]) {
        if (!row.is_array()) throw ParseError("beta file: each layer must be an array");
        std::vector<double> layer;
        for (const auto& v : row) layer.push_back(as_number(v, "beta value"));
        values.push_back(std::move(layer));
    }
    ScalingVector beta(std::move(values));
    if (!beta.shape_matches(network)) {
        throw ParseError("beta file: shape does not match the network's layers");
    }
    return beta;
}

ScalingVector load_beta(const std::string& path, const LayeredNetwork& network) {
    return beta_from_json_text(read_file(path), network);
}

std::string beta_to_json_text(const ScalingVector& beta) {
    ordered_json j;
    j["beta"] = beta.values();
    return j.dump(2) + "\n";
}

bool same_network(const LayeredNetwork& a, const LayeredNetwork& b) {
    if (a.layer_sizes() != b.layer_sizes()) return false;
    if (a.source_power() != b.source_power()) return false;
    if (a.noise_variance() != b.noise_variance()) return false;
    if (a.relay_powers() != b.relay_powers()) return false;
    for (int l = 0; l <= a.num_relay_layers(); ++l) {
        for (int j = 1; j <= a.layer_size(l); ++j) {
            for (int k = 1; k <= a.layer_size(l + 1); ++k) {
                if (a.has_edge(l, j, k) != b.has_edge(l, j, k)) return false;
                if (a.gain(l, j, k) != b.gain(l, j, k)) return false;
            }
        }
    }
    return true;
}

}  // namespace anc
