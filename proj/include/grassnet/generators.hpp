#pragma once

#include <string>

#include "grassnet/constants.hpp"
#include "grassnet/matrix.hpp"

namespace grassnet {

// The three generator families. phi acts on the ambient n coordinates;
// chi is its restriction to the hyperplane orthogonal to the alternating
// vector, written in the basis f_i = e_i + e_{i+1}; u is the sign-
// conjugated image Delta chi Delta, which is totally nonnegative for
// nonnegative argument.

/// phi_{i,i+1}(s) = Id - s(E_ii + E_{i,i+1} - E_{i+1,i} - E_{i+1,i+1}).
/// Determinant is 1 for every s: the perturbation is nilpotent.
inline RatMatrix phi_generator(int n, int i, const Rational& s) {
    if (i < 1 || i > n - 1) {
        throw IndexError("phi index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    }
    RatMatrix m = RatMatrix::identity(n);
    m(i - 1, i - 1) -= s;
    m(i - 1, i) -= s;
    m(i, i - 1) += s;
    m(i, i) += s;
    return m;
}

/// chi_{i,i+1}(t) = Id + t(E_{i+1,i} - E_{i-1,i}) on (n-1)x(n-1), with the
/// out-of-range term dropped at i = 1 and i = n-1. Equals the restriction
/// of phi_generator(n, i, t) to the invariant hyperplane (checked by the
/// tests through restrict_left_action).
inline RatMatrix chi_generator(int n, int i, const Rational& t) {
    if (i < 1 || i > n - 1) {
        throw IndexError("chi index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    }
    const int size = n - 1;
    RatMatrix m = RatMatrix::identity(size);
    if (i + 1 <= size) {
        m(i, i - 1) += t;
    }
    if (i - 1 >= 1) {
        m(i - 2, i - 1) -= t;
    }
    return m;
}

/// u_{i,i+1}(t) = Id + t(E_{i-1,i} + E_{i+1,i}), out-of-range terms dropped.
/// Both bumps sit in column i, matching Delta chi_{i,i+1}(t) Delta =
/// u_{i,i+1}((-1)^i t) exactly. A single nonnegative off-diagonal bump is
/// totally nonnegative, and so are products of them.
inline RatMatrix u_generator(int size, int i, const Rational& t) {
    if (i < 1 || i > size) {
        throw IndexError("u index " + std::to_string(i) + " outside 1.." + std::to_string(size));
    }
    RatMatrix m = RatMatrix::identity(size);
    if (i - 1 >= 1) {
        m(i - 2, i - 1) += t;
    }
    if (i + 1 <= size) {
        m(i, i - 1) += t;
    }
    return m;
}

} // namespace grassnet
