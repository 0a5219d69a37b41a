#pragma once

#include <cstdint>
#include <random>

#include "grassnet/matrix.hpp"
#include "grassnet/network.hpp"

namespace grassnet {

// Seeded randomness for the verification batteries. mt19937_64 is fully
// specified by the standard and the draw helpers below avoid
// std::uniform_int_distribution (whose output is implementation-defined),
// so a (seed, draw sequence) pair produces identical values everywhere.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection sampling.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw ValidationError("empty integer range");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Positive rational with numerator and denominator in [1, bound].
    Rational positive_rational(int bound = 100) {
        const auto num = uniform_int(1, bound);
        const auto den = uniform_int(1, bound);
        return make_rational(Integer(num), Integer(den));
    }

    /// Rational with numerator in [-bound, bound], denominator in [1, bound].
    Rational signed_rational(int bound = 9) {
        const auto num = uniform_int(-bound, bound);
        const auto den = uniform_int(1, bound);
        return make_rational(Integer(num), Integer(den));
    }

    /// Random resistances for all boundary pairs, drawn in pair order.
    ResistanceMap resistances(int n, int bound = 100) {
        ResistanceMap r;
        for (const auto& pair : all_pairs(n)) {
            r[pair] = positive_rational(bound);
        }
        return r;
    }

    /// Fisher-Yates shuffle driven by uniform_int, stable across platforms.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(values[i - 1], values[j]);
        }
    }

    RatMatrix matrix(int rows, int cols, int bound = 9) {
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                m(i, j) = signed_rational(bound);
            }
        }
        return m;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace grassnet
