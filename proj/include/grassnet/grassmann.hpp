#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassnet/constants.hpp"
#include "grassnet/linalg.hpp"
#include "grassnet/subsets.hpp"

namespace grassnet {

// Points of the Grassmannian are row spaces of full-row-rank matrices.
// Equality is a rank test; coordinates are the maximal minors up to a
// common scale.

struct GrassmannPoint {
    RatMatrix representative;
    int ambient_dim = 0;
    int subspace_dim = 0;
};

/// Wrap a representative matrix, reducing it to a row basis.
inline GrassmannPoint grassmann_point(const RatMatrix& representative) {
    RatMatrix basis = row_basis(representative);
    return GrassmannPoint{basis, representative.cols(), basis.rows()};
}

/// True iff both matrices span the same row space.
inline bool row_space_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("row spaces live in different ambient dimensions: " + a.shape() +
                             " vs " + b.shape());
    }
    const int ra = rank(a);
    const int rb = rank(b);
    return ra == rb && rank(vcat(a, b)) == ra;
}

/// One Plucker coordinate: 1-based column set and value.
struct PluckerCoord {
    std::vector<int> cols;
    Rational value;
};

using PluckerVector = std::vector<PluckerCoord>;

/// Plucker coordinates: all maximal minors of a row basis in lexicographic
/// column-set order. Defined up to one common nonzero scale.
inline PluckerVector plucker(const GrassmannPoint& point) {
    if (point.subspace_dim == 0) {
        throw DegeneratePointError("plucker coordinates of the zero subspace");
    }
    RatMatrix basis = point.representative;
    if (rank(basis) != basis.rows()) {
        basis = row_basis(basis);
    }
    PluckerVector out;
    for (const auto& mm : maximal_minors(basis)) {
        out.push_back({mm.cols, mm.value});
    }
    return out;
}

/// True iff the two coordinate vectors agree up to one common scale.
inline bool plucker_proportional(const PluckerVector& a, const PluckerVector& b) {
    if (a.size() != b.size()) {
        return false;
    }
    Rational scale_num(0);
    Rational scale_den(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].cols != b[i].cols) {
            return false;
        }
        if ((a[i].value == 0) != (b[i].value == 0)) {
            return false;
        }
        if (a[i].value != 0 && scale_den == 0) {
            scale_num = a[i].value;
            scale_den = b[i].value;
        }
    }
    if (scale_den == 0) {
        return true; // both identically zero
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value * scale_den != b[i].value * scale_num) {
            return false;
        }
    }
    return true;
}

struct BilinearForm {
    RatMatrix matrix;

    explicit BilinearForm(RatMatrix m) : matrix(std::move(m)) {
        if (!matrix.is_skew_symmetric()) {
            throw ValidationError("bilinear form must be skew-symmetric");
        }
    }
};

/// True iff R * form * R^t = 0 for the representative R. Invariant under
/// change of representative.
inline bool is_isotropic(const GrassmannPoint& point, const BilinearForm& form) {
    if (form.matrix.rows() != point.ambient_dim) {
        throw DimensionError("form size " + form.matrix.shape() + " does not match ambient " +
                             std::to_string(point.ambient_dim));
    }
    return gram(form.matrix, point.representative).is_zero();
}

/// A failing minor: 1-based row set, column set, and the negative value.
struct MinorWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    Rational value;
};

struct TnnResult {
    bool nonnegative = false;
    std::optional<MinorWitness> witness;
    std::uint64_t minors_checked = 0;
};

/// Total nonnegativity: every minor of every size is >= 0. On failure the
/// witness is the first negative minor in (size, row set, column set)
/// lexicographic order, which keeps regressions deterministic.
inline TnnResult is_tnn_matrix(const RatMatrix& m) {
    TnnResult result;
    const int max_size = std::min(m.rows(), m.cols());
    for (int k = 1; k <= max_size; ++k) {
        for (const auto& rows : SubsetRange(m.rows(), k)) {
            for (const auto& cols : SubsetRange(m.cols(), k)) {
                const Rational value = det(m.submatrix(rows, cols));
                ++result.minors_checked;
                if (value < 0) {
                    result.witness = MinorWitness{rows, cols, value};
                    return result;
                }
            }
        }
    }
    result.nonnegative = true;
    return result;
}

/// True iff all Plucker coordinates share one sign (zeros allowed).
inline bool is_tnn_point(const GrassmannPoint& point) {
    int seen = 0;
    for (const auto& coord : plucker(point)) {
        const int s = sign(coord.value);
        if (s == 0) {
            continue;
        }
        if (seen == 0) {
            seen = s;
        } else if (seen != s) {
            return false;
        }
    }
    return true;
}

/// psi(A) = (Id_n | omega0 D_n A): the right block is A with the row order
/// reversed and alternating row signs.
inline RatMatrix psi(const RatMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("psi takes a square matrix, got " + a.shape());
    }
    const int n = a.rows();
    return hcat(RatMatrix::identity(n), omega0(n) * d_matrix(n) * a);
}

/// Inv(I) = {n - i + 1 : i in I}, ascending.
inline std::vector<int> reversed_subset(const std::vector<int>& subset, int n) {
    std::vector<int> out(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        out[out.size() - 1 - k] = n - subset[k] + 1;
    }
    return out;
}

struct MinorIdentityResult {
    bool holds = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> failing_pair;
    std::uint64_t pairs_checked = 0;
};

// The minor identity behind the psi embedding: for every pair of subsets
// I, J of [n] with |I| = |J|, the maximal minor of psi(A) on the columns
// ([n] \ I) u (J + n) equals the minor of A on rows Inv(I) and columns J.
// Brute-forces both sides; sign-combinatorial, so it holds for arbitrary
// rational A, not only nonnegative ones. Capped at n = 6 to keep the
// subset blowup in check.
inline MinorIdentityResult psi_minor_identity_check(const RatMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("minor identity takes a square matrix, got " + a.shape());
    }
    const int n = a.rows();
    if (n > 6) {
        throw SizeGuardError("minor identity brute force capped at n = 6, got n = " +
                             std::to_string(n));
    }
    const RatMatrix embedded = psi(a);
    MinorIdentityResult result;
    for (int k = 1; k <= n; ++k) {
        for (const auto& row_subset : SubsetRange(n, k)) {
            for (const auto& col_subset : SubsetRange(n, k)) {
                std::vector<int> psi_cols = subset_complement(row_subset, n);
                for (int j : col_subset) {
                    psi_cols.push_back(j + n);
                }
                const Rational lhs = det(embedded.select_columns(psi_cols));
                const Rational rhs = minor(a, reversed_subset(row_subset, n), col_subset);
                ++result.pairs_checked;
                if (lhs != rhs) {
                    result.failing_pair = {row_subset, col_subset};
                    return result;
                }
            }
        }
    }
    result.holds = true;
    return result;
}

} // namespace grassnet
