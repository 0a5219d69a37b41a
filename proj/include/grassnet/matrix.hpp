#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "grassnet/error.hpp"
#include "grassnet/rational.hpp"

namespace grassnet {

// Dense row-major matrix over an exact scalar type. Values are immutable
// in spirit: every operation returns a fresh matrix, nothing is cached.
//
// Element access via operator()(r, c) is 0-based like the rest of C++;
// all set-valued arguments in the library (row/column index sets, subset
// witnesses, vertex labels) are 1-based to match the usual combinatorial
// notation [n].
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) {
            throw DimensionError("negative matrix dimension");
        }
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) {
                throw DimensionError("ragged initializer");
            }
            for (const auto& value : row) {
                data_.push_back(value);
            }
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int r, int c) {
        check_element(r, c);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const T& operator()(int r, int c) const {
        check_element(r, c);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator+(const Matrix& other) const {
        check_same_shape(other, "+");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] + other.data_[i];
        }
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        check_same_shape(other, "-");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] - other.data_[i];
        }
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = -data_[i];
        }
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) {
            throw DimensionError("matrix product shape mismatch: " + shape() + " * " + other.shape());
        }
        Matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) {
                    continue;
                }
                for (int j = 0; j < other.cols_; ++j) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
        return out;
    }

    Matrix operator*(const T& scalar) const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] = data_[i] * scalar;
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }

    bool is_symmetric() const {
        if (!is_square()) {
            return false;
        }
        for (int i = 0; i < rows_; ++i) {
            for (int j = i + 1; j < cols_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_skew_symmetric() const {
        if (!is_square()) {
            return false;
        }
        for (int i = 0; i < rows_; ++i) {
            for (int j = i; j < cols_; ++j) {
                if ((*this)(i, j) != -(*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Submatrix on 1-based row and column index sets, taken in increasing order.
    Matrix submatrix(const std::vector<int>& row_set, const std::vector<int>& col_set) const {
        std::vector<int> rs = checked_set(row_set, rows_, "row");
        std::vector<int> cs = checked_set(col_set, cols_, "column");
        Matrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (std::size_t i = 0; i < rs.size(); ++i) {
            for (std::size_t j = 0; j < cs.size(); ++j) {
                out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i] - 1, cs[j] - 1);
            }
        }
        return out;
    }

    /// Columns selected by a 1-based index set, all rows kept.
    Matrix select_columns(const std::vector<int>& col_set) const {
        std::vector<int> all(rows_);
        for (int i = 0; i < rows_; ++i) {
            all[i] = i + 1;
        }
        return submatrix(all, col_set);
    }

    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string str() const {
        std::ostringstream out;
        for (int i = 0; i < rows_; ++i) {
            out << (i == 0 ? "[" : " ");
            for (int j = 0; j < cols_; ++j) {
                out << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
            }
            out << (i + 1 < rows_ ? "\n" : "]");
        }
        return out.str();
    }

private:
    void check_element(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
            throw IndexError("element (" + std::to_string(r) + "," + std::to_string(c) +
                             ") outside " + shape());
        }
    }

    void check_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionError(std::string("shape mismatch for ") + op + ": " + shape() +
                                 " vs " + other.shape());
        }
    }

    static std::vector<int> checked_set(std::vector<int> set, int limit, const char* what) {
        std::sort(set.begin(), set.end());
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 1 || set[i] > limit) {
                throw IndexError(std::string(what) + " index " + std::to_string(set[i]) +
                                 " outside 1.." + std::to_string(limit));
            }
            if (i > 0 && set[i] == set[i - 1]) {
                throw IndexError(std::string(what) + " index set has a repeat: " +
                                 std::to_string(set[i]));
            }
        }
        return set;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

/// Horizontal concatenation (a | b).
template <typename T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("hcat row mismatch: " + a.shape() + " vs " + b.shape());
    }
    Matrix<T> out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
        for (int j = 0; j < b.cols(); ++j) {
            out(i, a.cols() + j) = b(i, j);
        }
    }
    return out;
}

/// Vertical stack of a over b.
template <typename T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("vcat column mismatch: " + a.shape() + " vs " + b.shape());
    }
    Matrix<T> out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
    }
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            out(a.rows() + i, j) = b(i, j);
        }
    }
    return out;
}

/// 2x2 block matrix [[a, b], [c, d]].
template <typename T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
    return vcat(hcat(a, b), hcat(c, d));
}

} // namespace grassnet
