#pragma once

#include <cstdint>
#include <vector>

#include "grassnet/error.hpp"

namespace grassnet {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// First k-subset of {1..n} in lexicographic order: {1, 2, ..., k}.
inline std::vector<int> first_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) {
        s[i] = i + 1;
    }
    return s;
}

/// Advance a 1-based k-subset of {1..n} to its lexicographic successor.
/// Returns false (leaving the subset at the first one) after the last.
inline bool next_subset(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) {
        --i;
    }
    if (i < 0) {
        subset = first_subset(k);
        return false;
    }
    ++subset[i];
    for (int j = i + 1; j < k; ++j) {
        subset[j] = subset[j - 1] + 1;
    }
    return true;
}

// Restartable lexicographic enumeration of the k-subsets of {1..n}.
// The iterator can be constructed at any subset, so a long enumeration
// can be partitioned or resumed.
class SubsetRange {
public:
    SubsetRange(int n, int k) : n_(n), k_(k) {
        if (k < 0 || n < 0 || k > n) {
            throw DimensionError("subset range with k outside 0..n");
        }
    }

    class iterator {
    public:
        iterator() = default;
        iterator(int n, std::vector<int> subset, bool done)
            : n_(n), subset_(std::move(subset)), done_(done) {}

        const std::vector<int>& operator*() const { return subset_; }
        const std::vector<int>* operator->() const { return &subset_; }

        iterator& operator++() {
            if (!next_subset(subset_, n_)) {
                done_ = true;
            }
            return *this;
        }

        bool operator==(const iterator& other) const {
            return done_ == other.done_ && (done_ || subset_ == other.subset_);
        }

        bool operator!=(const iterator& other) const { return !(*this == other); }

    private:
        int n_ = 0;
        std::vector<int> subset_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, first_subset(k_), false); }
    iterator end() const { return iterator(n_, {}, true); }

    /// Restart the enumeration at a given subset.
    iterator at(const std::vector<int>& subset) const { return iterator(n_, subset, false); }

private:
    int n_;
    int k_;
};

/// Complement of a 1-based subset inside {1..n}, ascending.
inline std::vector<int> subset_complement(const std::vector<int>& subset, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int v : subset) {
        in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - subset.size());
    for (int v = 1; v <= n; ++v) {
        if (!in[static_cast<std::size_t>(v)]) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace grassnet
