#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grassnet/matrix.hpp"
#include "grassnet/subsets.hpp"

namespace grassnet {

// Exact dense kernels. Determinants run fraction-free (Bareiss) so the
// intermediate entries stay the size of actual minors instead of piling
// up unreduced products; everything else is plain exact elimination.

/// Exact determinant of a square matrix.
inline Rational det(const RatMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("det of non-square " + m.shape());
    }
    const int n = m.rows();
    if (n == 0) {
        return Rational(1);
    }
    RatMatrix work = m;
    Rational prev_pivot(1);
    int sign_flips = 0;
    for (int k = 0; k + 1 < n; ++k) {
        if (work(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (work(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return Rational(0);
            }
            for (int j = 0; j < n; ++j) {
                std::swap(work(k, j), work(swap_row, j));
            }
            ++sign_flips;
        }
        const Rational pivot = work(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                work(i, j) = (work(i, j) * pivot - work(i, k) * work(k, j)) / prev_pivot;
            }
            work(i, k) = Rational(0);
        }
        prev_pivot = pivot;
    }
    Rational result = work(n - 1, n - 1);
    return (sign_flips % 2 == 0) ? result : -result;
}

/// Minor on 1-based row set I and column set J (|I| = |J|), both ascending.
inline Rational minor(const RatMatrix& m, const std::vector<int>& row_set,
                      const std::vector<int>& col_set) {
    if (row_set.size() != col_set.size()) {
        throw DimensionError("minor needs |I| = |J|, got " + std::to_string(row_set.size()) +
                             " and " + std::to_string(col_set.size()));
    }
    return det(m.submatrix(row_set, col_set));
}

/// Exact rank by elimination.
inline int rank(const RatMatrix& m) {
    RatMatrix work = m;
    const int rows = work.rows();
    const int cols = work.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (work(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            continue;
        }
        if (pivot_row != r) {
            for (int j = 0; j < cols; ++j) {
                std::swap(work(r, j), work(pivot_row, j));
            }
        }
        const Rational pivot = work(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (work(i, c) == 0) {
                continue;
            }
            const Rational factor = work(i, c) / pivot;
            for (int j = c; j < cols; ++j) {
                work(i, j) -= factor * work(r, j);
            }
        }
        ++r;
    }
    return r;
}

/// Exact solution X of m * X = rhs for invertible m.
inline RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs) {
    if (!m.is_square()) {
        throw DimensionError("solve with non-square " + m.shape());
    }
    if (m.rows() != rhs.rows()) {
        throw DimensionError("solve shape mismatch: " + m.shape() + " vs rhs " + rhs.shape());
    }
    const int n = m.rows();
    RatMatrix a = m;
    RatMatrix x = rhs;
    for (int c = 0; c < n; ++c) {
        int pivot_row = -1;
        for (int i = c; i < n; ++i) {
            if (a(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            throw SingularMatrixError("singular system: pivot vanishes in column " +
                                      std::to_string(c + 1));
        }
        if (pivot_row != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(c, j), a(pivot_row, j));
            }
            for (int j = 0; j < x.cols(); ++j) {
                std::swap(x(c, j), x(pivot_row, j));
            }
        }
        const Rational pivot = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= pivot;
        }
        for (int j = 0; j < x.cols(); ++j) {
            x(c, j) /= pivot;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) {
                continue;
            }
            const Rational factor = a(i, c);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= factor * a(c, j);
            }
            for (int j = 0; j < x.cols(); ++j) {
                x(i, j) -= factor * x(c, j);
            }
        }
    }
    return x;
}

/// Inverse of a square invertible matrix.
inline RatMatrix inverse(const RatMatrix& m) {
    return solve(m, RatMatrix::identity(m.rows()));
}

/// A - B C^{-1} B^t for the symmetric block matrix [[A, B], [B^t, C]],
/// with A of size block_size. block_size = full size returns m itself.
inline RatMatrix schur_complement(const RatMatrix& m, int block_size) {
    if (!m.is_square()) {
        throw DimensionError("schur complement of non-square " + m.shape());
    }
    if (!m.is_symmetric()) {
        throw ValidationError("schur complement expects a symmetric matrix");
    }
    const int total = m.rows();
    if (block_size < 0 || block_size > total) {
        throw DimensionError("block size " + std::to_string(block_size) + " outside 0.." +
                             std::to_string(total));
    }
    if (block_size == total) {
        return m;
    }
    std::vector<int> head(static_cast<std::size_t>(block_size));
    for (int i = 0; i < block_size; ++i) {
        head[static_cast<std::size_t>(i)] = i + 1;
    }
    std::vector<int> tail(static_cast<std::size_t>(total - block_size));
    for (int i = block_size; i < total; ++i) {
        tail[static_cast<std::size_t>(i - block_size)] = i + 1;
    }
    const RatMatrix a = m.submatrix(head, head);
    const RatMatrix b = m.submatrix(head, tail);
    const RatMatrix c = m.submatrix(tail, tail);
    return a - b * solve(c, b.transpose());
}

/// One maximal minor: the 1-based column set and its value.
struct MaximalMinor {
    std::vector<int> cols;
    Rational value;
};

/// All C(cols, rows) maximal minors in lexicographic column-set order.
inline std::vector<MaximalMinor> maximal_minors(const RatMatrix& m) {
    if (m.rows() > m.cols()) {
        throw DimensionError("maximal minors need rows <= cols, got " + m.shape());
    }
    std::vector<MaximalMinor> out;
    out.reserve(binomial(m.cols(), m.rows()));
    for (const auto& cols : SubsetRange(m.cols(), m.rows())) {
        out.push_back({cols, det(m.select_columns(cols))});
    }
    return out;
}

/// Gram matrix B * form * B^t of a bilinear form on the rows of B.
inline RatMatrix gram(const RatMatrix& form, const RatMatrix& basis_rows) {
    if (form.rows() != basis_rows.cols() || !form.is_square()) {
        throw DimensionError("gram shape mismatch: form " + form.shape() + ", basis " +
                             basis_rows.shape());
    }
    return basis_rows * form * basis_rows.transpose();
}

/// Reduce to a full-row-rank matrix with the same row space.
inline RatMatrix row_basis(const RatMatrix& m) {
    RatMatrix work = m;
    const int rows = work.rows();
    const int cols = work.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (work(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            continue;
        }
        if (pivot_row != r) {
            for (int j = 0; j < cols; ++j) {
                std::swap(work(r, j), work(pivot_row, j));
            }
        }
        const Rational pivot = work(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (work(i, c) == 0) {
                continue;
            }
            const Rational factor = work(i, c) / pivot;
            for (int j = c; j < cols; ++j) {
                work(i, j) -= factor * work(r, j);
            }
        }
        ++r;
    }
    RatMatrix out(r, cols);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < cols; ++j) {
            out(i, j) = work(i, j);
        }
    }
    return out;
}

} // namespace grassnet
