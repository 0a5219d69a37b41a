#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grassnet/calibration.hpp"
#include "grassnet/grassmann.hpp"
#include "grassnet/matrix.hpp"
#include "grassnet/network.hpp"
#include "grassnet/rational.hpp"
#include "grassnet/vertex.hpp"

namespace grassnet {

// Shared wire formats. Scalars travel as "p/q" strings in lowest terms
// ("p" when q = 1); matrices as arrays of arrays of such strings. Keys of
// resistance maps are "i,j" with i < j.

using Json = nlohmann::json;

inline Json to_json(const Rational& x) {
    return to_string(x);
}

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) {
        throw ValidationError("rational must be a \"p/q\" string");
    }
    return parse_rational(j.get<std::string>());
}

inline Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ValidationError("matrix must be an array of arrays");
    }
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) {
            throw ValidationError("ragged matrix rows");
        }
        for (int c = 0; c < cols; ++c) {
            m(i, c) = rational_from_json(j.at(i).at(c));
        }
    }
    return m;
}

inline std::string pair_key(const std::pair<int, int>& p) {
    return std::to_string(p.first) + "," + std::to_string(p.second);
}

inline std::pair<int, int> pair_from_key(const std::string& key) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) {
        throw ValidationError("pair key must look like \"i,j\": " + key);
    }
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ValidationError("pair key must look like \"i,j\": " + key);
    }
}

inline Json to_json(const ResistanceMap& r) {
    Json out = Json::object();
    for (const auto& [pair, value] : r) {
        out[pair_key(pair)] = to_string(value);
    }
    return out;
}

inline ResistanceMap resistances_from_json(const Json& j) {
    ResistanceMap r;
    for (const auto& [key, value] : j.items()) {
        r[pair_from_key(key)] = rational_from_json(value);
    }
    return r;
}

inline Json to_json(const StandardNetwork& sn) {
    return Json{{"n", sn.n()}, {"r", to_json(sn.resistances())}};
}

inline StandardNetwork standard_network_from_json(const Json& j) {
    return standard_network(j.at("n").get<int>(), resistances_from_json(j.at("r")));
}

inline Json to_json(const ElectricalNetwork& net) {
    Json edges = Json::array();
    for (const Edge& e : net.edges()) {
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"c", to_string(e.conductivity)}});
    }
    return Json{{"n_boundary", net.n_boundary()}, {"n_total", net.n_total()}, {"edges", edges}};
}

inline ElectricalNetwork network_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
        edges.push_back(
            {e.at("u").get<int>(), e.at("v").get<int>(), rational_from_json(e.at("c"))});
    }
    return ElectricalNetwork(j.at("n_boundary").get<int>(), j.at("n_total").get<int>(),
                             std::move(edges));
}

inline Json to_json(const GeneratorProductSpec& spec) {
    Json ordering = Json::array();
    for (const auto& [i, j] : spec.ordering) {
        ordering.push_back(Json::array({i, j}));
    }
    return Json{{"n", spec.n}, {"ordering", ordering}};
}

inline GeneratorProductSpec product_spec_from_json(const Json& j) {
    GeneratorProductSpec spec;
    spec.n = j.at("n").get<int>();
    for (const Json& p : j.at("ordering")) {
        spec.ordering.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    }
    spec.validate();
    return spec;
}

inline Json to_json(const PluckerVector& coords) {
    Json out = Json::array();
    for (const PluckerCoord& c : coords) {
        out.push_back(Json{{"cols", c.cols}, {"value", to_string(c.value)}});
    }
    return out;
}

inline Json to_json(const CalibrationConfig& config) {
    Json slots = Json::array();
    for (const auto& [i, j] : config.slot_for_edge) {
        slots.push_back(Json::array({i, j}));
    }
    return Json{{"ordering", to_json(config.spec)["ordering"]}, {"slot_for_edge", slots}};
}

inline Json to_json(const CalibrationResult& result) {
    Json passing = Json::array();
    for (const CalibrationConfig& c : result.passing) {
        passing.push_back(to_json(c));
    }
    Json shape_edges = Json::array();
    for (const auto& [u, v] : standard_graph_shape(result.n).edge_ends) {
        shape_edges.push_back(Json::array({u, v}));
    }
    return Json{{"n", result.n},
                {"seed", result.seed},
                {"draws", result.draws},
                {"graph_edges", shape_edges},
                {"frozen", to_json(result.frozen)},
                {"passing", passing}};
}

} // namespace grassnet
