#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "grassnet/constants.hpp"
#include "grassnet/generators.hpp"
#include "grassnet/network.hpp"

namespace grassnet {

// The boundary measurement matrices. The defining product runs over all
// boundary pairs (i, j), i < j, one generator factor per pair, but the
// factors do not commute, so the factor order is an explicit input here
// rather than a baked-in convention. calibration.hpp discovers and
// freezes the default order.

struct GeneratorProductSpec {
    int n = 0;
    std::vector<std::pair<int, int>> ordering;

    void validate() const {
        auto expected = all_pairs(n);
        auto sorted = ordering;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected) {
            throw ValidationError("ordering is not a permutation of the pairs (i<j) of 1.." +
                                  std::to_string(n));
        }
    }
};

/// The argument fed to the generator for pair (i, j): the resistance for
/// even i+j, minus the conductance for odd i+j.
inline Rational pair_argument(int i, int j, const Rational& r) {
    if ((i + j) % 2 == 0) {
        return r;
    }
    if (r == 0) {
        throw ValidationError("zero resistance with exponent -1 at pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    }
    return -1 / r;
}

/// Ordered product of phi_{j-i,j-i+1} factors, one per boundary pair,
/// following spec.ordering left to right. Determinant 1; fixes the
/// alternating vector on the right and the all-ones vector on the left.
inline RatMatrix modified_boundary_matrix(const GeneratorProductSpec& spec,
                                          const ResistanceMap& r) {
    spec.validate();
    validate_resistances(spec.n, r);
    RatMatrix product = RatMatrix::identity(spec.n);
    for (const auto& [i, j] : spec.ordering) {
        product = product * phi_generator(spec.n, j - i, pair_argument(i, j, r.at({i, j})));
    }
    return product;
}

/// omega0 times the modified matrix.
inline RatMatrix boundary_matrix(const GeneratorProductSpec& spec, const ResistanceMap& r) {
    return omega0(spec.n) * modified_boundary_matrix(spec, r);
}

/// W1 = (S_n | M_R): the response-matrix side of the row-space lemma.
inline RatMatrix w1(const ElectricalNetwork& net) {
    const int n = net.n_boundary();
    return hcat(s_matrix(n), response_matrix(net));
}

/// W2 = (M_B | Id_n) S_{2n} T_{2n}: the vertex-model side.
inline RatMatrix w2(const GeneratorProductSpec& spec, const ResistanceMap& r) {
    const int n = spec.n;
    const RatMatrix w0 = hcat(boundary_matrix(spec, r), RatMatrix::identity(n));
    return w0 * s_matrix(2 * n) * t_matrix(2 * n);
}

} // namespace grassnet
