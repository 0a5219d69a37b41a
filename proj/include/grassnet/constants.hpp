#pragma once

#include <string>

#include "grassnet/linalg.hpp"
#include "grassnet/matrix.hpp"

namespace grassnet {

// The constant matrices and distinguished vectors of the vertex model.
// All are exact and parameter-free; sizes are validated, nothing else.

/// Order-reversing permutation (antidiagonal of ones).
inline RatMatrix omega0(int n) {
    if (n < 1) {
        throw DimensionError("omega0 size must be >= 1");
    }
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, n - 1 - i) = Rational(1);
    }
    return m;
}

/// Difference-cycle matrix: identity minus the cyclic shift. Rows and
/// columns both sum to zero, so the rank is n - 1 and (1,...,1) spans
/// the left kernel.
inline RatMatrix s_matrix(int n) {
    if (n < 1) {
        throw DimensionError("s_matrix size must be >= 1");
    }
    RatMatrix m = RatMatrix::identity(n);
    m(0, n - 1) -= Rational(1);
    for (int i = 1; i < n; ++i) {
        m(i, i - 1) -= Rational(1);
    }
    return m;
}

/// Perfect-shuffle permutation of size 2n: row 2k-1 picks column n+k and
/// row 2k picks column k. Right multiplication by it gathers the
/// even-indexed columns of a matrix in front of the odd-indexed ones.
/// Of the two shuffle phases, this is the one under which the calibrated
/// row-space identity between the network and vertex sides holds.
inline RatMatrix t_matrix(int size) {
    if (size < 2 || size % 2 != 0) {
        throw DimensionError("t_matrix size must be even and >= 2");
    }
    const int n = size / 2;
    RatMatrix m(size, size);
    for (int k = 1; k <= n; ++k) {
        m(2 * k - 2, n + k - 1) = Rational(1);
        m(2 * k - 1, k - 1) = Rational(1);
    }
    return m;
}

/// Skew form with entries (-1)^(j-i) above the diagonal.
inline RatMatrix g_form(int n) {
    if (n < 1) {
        throw DimensionError("g_form size must be >= 1");
    }
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Rational v = ((j - i) % 2 == 0) ? Rational(1) : Rational(-1);
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}

/// Block diagonal form diag(g, g) of even size 2n.
inline RatMatrix eta_form(int size) {
    if (size < 2 || size % 2 != 0) {
        throw DimensionError("eta_form size must be even and >= 2");
    }
    const int n = size / 2;
    const RatMatrix g = g_form(n);
    return block2x2(g, RatMatrix::zero(n, n), RatMatrix::zero(n, n), g);
}

/// Diag(1,-1,-1,1,1,-1,...): sign (-1)^floor(i/2) at 1-based position i.
inline RatMatrix delta_matrix(int size) {
    if (size < 1) {
        throw DimensionError("delta_matrix size must be >= 1");
    }
    RatMatrix m(size, size);
    for (int i = 1; i <= size; ++i) {
        m(i - 1, i - 1) = ((i / 2) % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return m;
}

/// Plain alternating diagonal Diag(1,-1,1,-1,...).
inline RatMatrix d_matrix(int n) {
    if (n < 1) {
        throw DimensionError("d_matrix size must be >= 1");
    }
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = (i % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return m;
}

/// Alternating column vector (1,-1,1,...,(-1)^{n+1}).
inline RatMatrix mu_vector(int n) {
    RatMatrix v(n, 1);
    for (int i = 0; i < n; ++i) {
        v(i, 0) = (i % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return v;
}

/// All-ones row vector of length n.
inline RatMatrix ones_row(int n) {
    RatMatrix v(1, n);
    for (int j = 0; j < n; ++j) {
        v(0, j) = Rational(1);
    }
    return v;
}

/// Alternating row vector (1,-1,...,1,-1) of even length.
inline RatMatrix w_vector(int size) {
    if (size % 2 != 0) {
        throw DimensionError("w_vector needs even length");
    }
    RatMatrix v(1, size);
    for (int j = 0; j < size; ++j) {
        v(0, j) = (j % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return v;
}

/// Rows f_i = e_i + e_{i+1}, i = 1..dim-1: a basis of the hyperplane
/// orthogonal to the alternating vector of length dim.
inline RatMatrix f_basis(int dim) {
    if (dim < 2) {
        throw DimensionError("f_basis needs dimension >= 2");
    }
    RatMatrix m(dim - 1, dim);
    for (int i = 0; i < dim - 1; ++i) {
        m(i, i) = Rational(1);
        m(i, i + 1) = Rational(1);
    }
    return m;
}

/// The constant-matrix families, for the dispatch used by reports.
enum class ConstantKind { Omega0, S, T, G, Eta, Delta, D };

struct ConstantMatrixKind {
    ConstantKind kind;
    int size; // the matrix size itself; must be even for T and Eta
};

inline RatMatrix constant_matrix(const ConstantMatrixKind& spec) {
    switch (spec.kind) {
        case ConstantKind::Omega0:
            return omega0(spec.size);
        case ConstantKind::S:
            return s_matrix(spec.size);
        case ConstantKind::T:
            return t_matrix(spec.size);
        case ConstantKind::G:
            return g_form(spec.size);
        case ConstantKind::Eta:
            return eta_form(spec.size);
        case ConstantKind::Delta:
            return delta_matrix(spec.size);
        case ConstantKind::D:
            return d_matrix(spec.size);
    }
    throw ValidationError("unknown constant matrix kind");
}

} // namespace grassnet
