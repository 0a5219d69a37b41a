#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grassnet/constants.hpp"
#include "grassnet/generators.hpp"
#include "grassnet/grassmann.hpp"
#include "grassnet/vertex.hpp"

namespace grassnet {

// Restriction of the left row action to the hyperplane orthogonal to the
// alternating vector mu, written in the basis f_i = e_i + e_{i+1}, and the
// sign conjugation that turns the restricted boundary matrix into a
// totally nonnegative product.

struct RestrictedOperator {
    int n = 0;          // ambient dimension
    RatMatrix matrix;   // (n-1)x(n-1) coefficients C with f_i m = sum_j C_ij f_j
};

/// Matrix whose rows are the basis f_i = e_i + e_{i+1}, i = 1..n-1, of the
/// hyperplane orthogonal to mu = (1,-1,...).
inline RatMatrix f_basis_mu(int n) {
    return f_basis(n);
}

/// Restrict the left row action of m to mu-orthogonal coordinates. The
/// operator must preserve the hyperplane (f_i m orthogonal to mu for all
/// i); this is checked before solving, and the solved coefficients are
/// verified to reproduce the action exactly.
inline RestrictedOperator restrict_left_action(const RatMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("restriction takes a square matrix, got " + m.shape());
    }
    const int n = m.rows();
    if (n < 2) {
        throw DimensionError("restriction needs ambient dimension >= 2");
    }
    const RatMatrix basis = f_basis_mu(n);
    const RatMatrix acted = basis * m; // rows f_i m
    if (!(acted * mu_vector(n)).is_zero()) {
        throw InvarianceError("operator does not preserve the mu-orthogonal hyperplane");
    }
    // The first n-1 columns of the basis matrix form a unit upper
    // bidiagonal block, so C = acted[:, 1..n-1] * inverse(that block).
    std::vector<int> head(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) {
        head[static_cast<std::size_t>(i)] = i + 1;
    }
    const RatMatrix basis_head = basis.select_columns(head);
    const RatMatrix acted_head = acted.select_columns(head);
    // C * basis_head = acted_head, solved through the transposed system.
    const RatMatrix coeffs = solve(basis_head.transpose(), acted_head.transpose()).transpose();
    if (coeffs * basis != acted) {
        throw BasisError("restricted action is not expressible in the f-basis");
    }
    return RestrictedOperator{n, coeffs};
}

/// Delta m Delta with Delta = Diag(1,-1,-1,1,1,-1,...); an involution.
inline RatMatrix delta_conjugate(const RatMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("delta conjugation takes a square matrix, got " + m.shape());
    }
    const RatMatrix d = delta_matrix(m.rows());
    return d * m * d;
}

/// The factorized route to the reduced boundary matrix: the product of
/// u_{j-i,j-i+1}(r_ij^((-1)^(i+j))) in the order given by the spec. The
/// sign prefactor of the ambient product cancels against the sign picked
/// up by the Delta conjugation, so every argument here is positive.
inline RatMatrix u_product(const GeneratorProductSpec& spec, const ResistanceMap& r) {
    spec.validate();
    validate_resistances(spec.n, r);
    const int size = spec.n - 1;
    RatMatrix product = RatMatrix::identity(size);
    for (const auto& [i, j] : spec.ordering) {
        const Rational& rij = r.at({i, j});
        const Rational argument = ((i + j) % 2 == 0) ? rij : 1 / rij;
        product = product * u_generator(size, j - i, argument);
    }
    return product;
}

/// Reduced boundary matrix: Delta (M_check restricted) Delta. Computed by
/// definition through the restriction and cross-checked against the
/// factorized u-product route; the two must agree entry for entry.
inline RatMatrix reduced_boundary_matrix(const GeneratorProductSpec& spec,
                                         const ResistanceMap& r) {
    const RatMatrix restricted = restrict_left_action(modified_boundary_matrix(spec, r)).matrix;
    const RatMatrix reduced = delta_conjugate(restricted);
    if (reduced != u_product(spec, r)) {
        throw BasisError("reduced boundary matrix disagrees with its factorized form");
    }
    return reduced;
}

/// Skew Gram matrix of the g form on the f-basis of the mu-orthogonal
/// hyperplane: tridiagonal with -1 above the diagonal. The restricted
/// operators preserve it.
inline RatMatrix restricted_g_form(int n) {
    return gram(g_form(n), f_basis_mu(n));
}

/// The same form after the Delta sign change; the reduced boundary matrix
/// preserves this one. Nondegenerate exactly when n is odd.
inline RatMatrix reduced_g_form(int n) {
    return delta_conjugate(restricted_g_form(n));
}

/// Right basis-change matrix of the embedding step: block antidiagonal
/// [[0, Id], [D omega0, 0]]. Its lower left block is the inverse of
/// omega0 D, so omega0 D (M | Id) times this is exactly (Id | omega0 D M).
inline RatMatrix embed_basis_change(int size) {
    const RatMatrix id = RatMatrix::identity(size);
    const RatMatrix zero = RatMatrix::zero(size, size);
    return block2x2(zero, id, d_matrix(size) * omega0(size), zero);
}

/// The embedded point psi(reduced boundary matrix) for odd n, a point of
/// Gr(n-1, 2n-2). The construction verifies the embedding identity
/// omega0 D (M | Id) B = (Id | omega0 D M) exactly before returning.
inline GrassmannPoint embed_odd(const GeneratorProductSpec& spec, const ResistanceMap& r) {
    if (spec.n % 2 == 0) {
        throw ParityError("embedding defined for odd n only, got n = " + std::to_string(spec.n));
    }
    const int size = spec.n - 1;
    const RatMatrix reduced = reduced_boundary_matrix(spec, r);
    const RatMatrix rot = omega0(size) * d_matrix(size);
    const RatMatrix lhs = rot * hcat(reduced, RatMatrix::identity(size)) * embed_basis_change(size);
    const RatMatrix image = psi(reduced);
    if (lhs != image) {
        throw BasisError("embedding identity failed");
    }
    return grassmann_point(image);
}

} // namespace grassnet
