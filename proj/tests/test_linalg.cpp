#include <catch2/catch_amalgamated.hpp>

#include "grassnet/linalg.hpp"
#include "grassnet/rng.hpp"

using namespace grassnet;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
// Deliberately naive so it shares nothing with the Bareiss path.
Rational det_by_cofactors(const RatMatrix& m) {
    const int n = m.rows();
    if (n == 0) {
        return Rational(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    Rational total(0);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) {
            continue;
        }
        RatMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) {
                    continue;
                }
                sub(r - 1, cc++) = m(r, c);
            }
        }
        const Rational term = m(0, j) * det_by_cofactors(sub);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

TEST_CASE("rational scalar basics") {
    CHECK(make_rational(6, 8) == Rational(3, 4));
    CHECK(make_rational(-4, -6) == Rational(2, 3));
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("+5/10") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("determinant examples") {
    CHECK(det(RatMatrix::identity(2)) == 1);
    CHECK(det(RatMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}) == -3);
    CHECK(det(RatMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), DimensionError);

    // zero pivot forces a row swap
    RatMatrix swapped{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(det(swapped) == -1);
}

TEST_CASE("determinant agrees with cofactor oracle on random matrices") {
    SeededRng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        const RatMatrix m = rng.matrix(n, n);
        CHECK(det(m) == det_by_cofactors(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    SeededRng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const RatMatrix a = rng.matrix(n, n);
        const RatMatrix b = rng.matrix(n, n);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("minor basics") {
    CHECK(minor(RatMatrix::identity(3), {1, 2}, {1, 2}) == 1);
    CHECK(minor(RatMatrix{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}, {1}, {2}) == 2);
    CHECK_THROWS_AS(minor(RatMatrix::identity(3), {1, 2}, {1}), DimensionError);
    CHECK_THROWS_AS(minor(RatMatrix::identity(3), {1, 4}, {1, 2}), IndexError);
    CHECK_THROWS_AS(minor(RatMatrix::identity(3), {1, 1}, {1, 2}), IndexError);
}

TEST_CASE("minor on all rows and columns is the determinant") {
    SeededRng rng(55);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        const RatMatrix m = rng.matrix(n, n);
        CHECK(minor(m, first_subset(n), first_subset(n)) == det(m));
    }
}

TEST_CASE("rank examples and transpose property") {
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(RatMatrix(3, 3)) == 0);
    SeededRng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(1, 5));
        const int c = static_cast<int>(rng.uniform_int(1, 5));
        const RatMatrix m = rng.matrix(r, c);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(m.transpose().transpose() == m);
    }
}

TEST_CASE("solve examples and errors") {
    const RatMatrix v{{Rational(3)}, {Rational(-5)}};
    CHECK(solve(RatMatrix::identity(2), v) == v);
    CHECK(solve(RatMatrix{{Rational(2)}}, RatMatrix{{Rational(1)}}) ==
          RatMatrix{{Rational(1, 2)}});

    RatMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve(singular, RatMatrix::identity(2)), SingularMatrixError);
    CHECK_THROWS_MATCHES(solve(singular, RatMatrix::identity(2)), SingularMatrixError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("column 2")));

    SeededRng rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        RatMatrix a = rng.matrix(n, n);
        while (det(a) == 0) {
            a = rng.matrix(n, n);
        }
        const RatMatrix rhs = rng.matrix(n, 2);
        CHECK(a * solve(a, rhs) == rhs);
    }
}

TEST_CASE("schur complement of the star laplacian") {
    // 3 boundary + 1 interior vertex, unit conductivities
    RatMatrix star{{Rational(1), Rational(0), Rational(0), Rational(-1)},
                   {Rational(0), Rational(1), Rational(0), Rational(-1)},
                   {Rational(0), Rational(0), Rational(1), Rational(-1)},
                   {Rational(-1), Rational(-1), Rational(-1), Rational(3)}};
    RatMatrix expected{{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)},
                       {Rational(-1, 3), Rational(2, 3), Rational(-1, 3)},
                       {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)}};
    CHECK(schur_complement(star, 3) == expected);
    CHECK(schur_complement(star, 4) == star);

    CHECK_THROWS_AS(schur_complement(RatMatrix{{Rational(0), Rational(1)},
                                               {Rational(2), Rational(0)}},
                                     1),
                    ValidationError);
    // singular interior block
    RatMatrix degenerate{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    CHECK_THROWS_AS(schur_complement(degenerate, 1), SingularMatrixError);
}

TEST_CASE("schur complement of a symmetric matrix is symmetric") {
    SeededRng rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 6));
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                m(i, j) = rng.signed_rational();
                m(j, i) = m(i, j);
            }
        }
        const int block = static_cast<int>(rng.uniform_int(1, n - 1));
        std::vector<int> tail;
        for (int v = block + 1; v <= n; ++v) {
            tail.push_back(v);
        }
        if (det(m.submatrix(tail, tail)) == 0) {
            continue;
        }
        CHECK(schur_complement(m, block).is_symmetric());
    }
}

TEST_CASE("maximal minors in lexicographic order") {
    RatMatrix padded{{Rational(1), Rational(0), Rational(0)},
                     {Rational(0), Rational(1), Rational(0)}};
    const auto minors = maximal_minors(padded);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0].cols == std::vector<int>{1, 2});
    CHECK(minors[0].value == 1);
    CHECK(minors[1].cols == std::vector<int>{1, 3});
    CHECK(minors[1].value == 0);
    CHECK(minors[2].cols == std::vector<int>{2, 3});
    CHECK(minors[2].value == 0);

    RatMatrix ones{{Rational(1), Rational(0), Rational(-1)},
                   {Rational(0), Rational(1), Rational(1)}};
    for (const auto& mm : maximal_minors(ones)) {
        CHECK(mm.value == 1);
    }

    RatMatrix mixed{{Rational(1), Rational(0), Rational(1)},
                    {Rational(0), Rational(1), Rational(1)}};
    const auto mixed_minors = maximal_minors(mixed);
    CHECK(mixed_minors[0].value == 1);
    CHECK(mixed_minors[1].value == 1);
    CHECK(mixed_minors[2].value == -1);

    CHECK_THROWS_AS(maximal_minors(RatMatrix(3, 2)), DimensionError);
}

TEST_CASE("subset enumeration is lexicographic and restartable") {
    SubsetRange range(4, 2);
    std::vector<std::vector<int>> seen;
    for (const auto& s : range) {
        seen.push_back(s);
    }
    const std::vector<std::vector<int>> expected = {{1, 2}, {1, 3}, {1, 4},
                                                    {2, 3}, {2, 4}, {3, 4}};
    CHECK(seen == expected);
    CHECK(binomial(4, 2) == seen.size());

    // restart mid-stream
    auto it = range.at({1, 4});
    std::vector<std::vector<int>> rest;
    for (; it != range.end(); ++it) {
        rest.push_back(*it);
    }
    CHECK(rest == std::vector<std::vector<int>>{{1, 4}, {2, 3}, {2, 4}, {3, 4}});

    CHECK(subset_complement({2, 4}, 5) == std::vector<int>{1, 3, 5});
    CHECK(binomial(12, 6) == 924);
}

TEST_CASE("row basis preserves the row space") {
    SeededRng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(1, 5));
        const int c = static_cast<int>(rng.uniform_int(1, 6));
        RatMatrix m = rng.matrix(r, c);
        const RatMatrix basis = row_basis(m);
        CHECK(rank(basis) == basis.rows());
        CHECK(rank(basis) == rank(m));
        CHECK(rank(vcat(m, basis)) == rank(m));
    }
}
