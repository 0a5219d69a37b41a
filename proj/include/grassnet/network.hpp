#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassnet/linalg.hpp"
#include "grassnet/matrix.hpp"

namespace grassnet {

struct Edge {
    int u;
    int v;
    Rational conductivity;
};

// A connected weighted graph without loops. Vertices are labeled 1..n_total
// with the boundary vertices first (1..n_boundary). Parallel edges are
// allowed and merged by summing conductivities when matrices are built.
class ElectricalNetwork {
public:
    ElectricalNetwork(int n_boundary, int n_total, std::vector<Edge> edges)
        : n_boundary_(n_boundary), n_total_(n_total), edges_(std::move(edges)) {
        validate();
    }

    int n_boundary() const { return n_boundary_; }
    int n_total() const { return n_total_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    void validate() const {
        if (n_boundary_ < 1 || n_total_ < n_boundary_) {
            throw ValidationError("need 1 <= n_boundary <= n_total");
        }
        for (const Edge& e : edges_) {
            if (e.u < 1 || e.u > n_total_ || e.v < 1 || e.v > n_total_) {
                throw ValidationError("edge endpoint outside 1.." + std::to_string(n_total_));
            }
            if (e.u == e.v) {
                throw ValidationError("loop edge at vertex " + std::to_string(e.u));
            }
            if (e.conductivity <= 0) {
                throw ValidationError("conductivity must be positive on edge (" +
                                      std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            }
        }
        // connectivity by union-find
        std::vector<int> parent(static_cast<std::size_t>(n_total_) + 1);
        for (int v = 1; v <= n_total_; ++v) {
            parent[static_cast<std::size_t>(v)] = v;
        }
        auto find = [&parent](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                v = parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            }
            return v;
        };
        for (const Edge& e : edges_) {
            parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
        }
        for (int v = 2; v <= n_total_; ++v) {
            if (find(v) != find(1)) {
                throw ValidationError("network is not connected (vertex " + std::to_string(v) + ")");
            }
        }
    }

    int n_boundary_;
    int n_total_;
    std::vector<Edge> edges_;
};

/// Weighted graph Laplacian: diagonal holds incident conductivity sums,
/// off-diagonal entries are negated pairwise conductivity totals.
inline RatMatrix kirchhoff_matrix(const ElectricalNetwork& net) {
    const int n = net.n_total();
    RatMatrix m(n, n);
    for (const Edge& e : net.edges()) {
        const int a = e.u - 1;
        const int b = e.v - 1;
        m(a, b) -= e.conductivity;
        m(b, a) -= e.conductivity;
        m(a, a) += e.conductivity;
        m(b, b) += e.conductivity;
    }
    return m;
}

/// Response matrix: the Schur complement of the interior block of the
/// Kirchhoff matrix. Equals the Kirchhoff matrix itself when the network
/// has no interior vertices.
inline RatMatrix response_matrix(const ElectricalNetwork& net) {
    return schur_complement(kirchhoff_matrix(net), net.n_boundary());
}

/// Resistance parameters r_{ij} indexed by ordered boundary pairs i < j.
using ResistanceMap = std::map<std::pair<int, int>, Rational>;

/// All pairs (i, j), 1 <= i < j <= n, in lexicographic order.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

inline void validate_resistances(int n, const ResistanceMap& r) {
    if (n < 2) {
        throw ValidationError("need at least 2 boundary vertices");
    }
    for (const auto& [pair, value] : r) {
        const auto [i, j] = pair;
        if (i < 1 || j <= i || j > n) {
            throw ValidationError("resistance key (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is not an ordered pair in 1.." +
                                  std::to_string(n));
        }
        if (value <= 0) {
            throw ValidationError("resistance r_" + std::to_string(i) + std::to_string(j) +
                                  " must be positive");
        }
    }
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (r.size() != expected) {
        throw ValidationError("expected " + std::to_string(expected) + " resistances, got " +
                              std::to_string(r.size()));
    }
}

// The generic-position network family on n boundary vertices, with one
// positive resistance per boundary pair: n(n-1)/2 parameters in all.
// For n = 2, 3, 4 a concrete graph realization is attached (see
// standard_realization in calibration.hpp); for larger n the family is
// purely parametric, which is all the identity checks need.
class StandardNetwork {
public:
    StandardNetwork(int n, ResistanceMap resistances,
                    std::optional<ElectricalNetwork> realization = std::nullopt)
        : n_(n), resistances_(std::move(resistances)), realization_(std::move(realization)) {
        validate_resistances(n_, resistances_);
        if (realization_ && realization_->n_boundary() != n_) {
            throw ValidationError("realization boundary count differs from n");
        }
    }

    int n() const { return n_; }
    const ResistanceMap& resistances() const { return resistances_; }
    const std::optional<ElectricalNetwork>& realization() const { return realization_; }

private:
    int n_;
    ResistanceMap resistances_;
    std::optional<ElectricalNetwork> realization_;
};

} // namespace grassnet
