#include <catch2/catch_amalgamated.hpp>

#include "grassnet/constants.hpp"
#include "grassnet/linalg.hpp"

using namespace grassnet;

TEST_CASE("omega0 is the order-reversing permutation") {
    RatMatrix expected{{Rational(0), Rational(0), Rational(1)},
                       {Rational(0), Rational(1), Rational(0)},
                       {Rational(1), Rational(0), Rational(0)}};
    CHECK(omega0(3) == expected);
    CHECK(omega0(4) * omega0(4) == RatMatrix::identity(4));
}

TEST_CASE("s_matrix display and kernel facts") {
    RatMatrix expected{{Rational(1), Rational(0), Rational(-1)},
                       {Rational(-1), Rational(1), Rational(0)},
                       {Rational(0), Rational(-1), Rational(1)}};
    CHECK(s_matrix(3) == expected);
    CHECK(rank(s_matrix(3)) == 2);

    for (int n = 2; n <= 8; ++n) {
        const RatMatrix s = s_matrix(n);
        CHECK(rank(s) == n - 1);
        // both row sums and column sums vanish
        CHECK((s * ones_row(n).transpose()).is_zero());
        CHECK((ones_row(n) * s).is_zero());
    }
}

TEST_CASE("t_matrix gathers even columns before odd columns") {
    // size 4: rows pick columns 3, 1, 4, 2
    RatMatrix expected{{Rational(0), Rational(0), Rational(1), Rational(0)},
                       {Rational(1), Rational(0), Rational(0), Rational(0)},
                       {Rational(0), Rational(0), Rational(0), Rational(1)},
                       {Rational(0), Rational(1), Rational(0), Rational(0)}};
    CHECK(t_matrix(4) == expected);
    CHECK_THROWS_AS(t_matrix(5), DimensionError);

    RatMatrix m(1, 6);
    for (int j = 0; j < 6; ++j) {
        m(0, j) = Rational(j + 1);
    }
    const RatMatrix shuffled = m * t_matrix(6);
    RatMatrix want{{Rational(2), Rational(4), Rational(6), Rational(1), Rational(3), Rational(5)}};
    CHECK(shuffled == want);
}

TEST_CASE("g form display and skewness") {
    RatMatrix expected{{Rational(0), Rational(-1), Rational(1)},
                       {Rational(1), Rational(0), Rational(-1)},
                       {Rational(-1), Rational(1), Rational(0)}};
    CHECK(g_form(3) == expected);
    for (int n = 2; n <= 7; ++n) {
        CHECK(g_form(n).is_skew_symmetric());
        CHECK(eta_form(2 * n).is_skew_symmetric());
    }
    // eta is block diagonal with two copies of g
    const RatMatrix eta = eta_form(6);
    CHECK(eta.submatrix({1, 2, 3}, {1, 2, 3}) == g_form(3));
    CHECK(eta.submatrix({4, 5, 6}, {4, 5, 6}) == g_form(3));
    CHECK(eta.submatrix({1, 2, 3}, {4, 5, 6}).is_zero());
}

TEST_CASE("delta and d sign patterns") {
    const RatMatrix delta = delta_matrix(6);
    const std::vector<int> want = {1, -1, -1, 1, 1, -1};
    for (int i = 0; i < 6; ++i) {
        CHECK(delta(i, i) == want[static_cast<std::size_t>(i)]);
    }
    CHECK(delta_matrix(5) * delta_matrix(5) == RatMatrix::identity(5));

    const RatMatrix d = d_matrix(4);
    CHECK(d(0, 0) == 1);
    CHECK(d(1, 1) == -1);
    CHECK(d(2, 2) == 1);
    CHECK(d(3, 3) == -1);
}

TEST_CASE("distinguished vectors") {
    const RatMatrix mu = mu_vector(4);
    CHECK(mu(0, 0) == 1);
    CHECK(mu(3, 0) == -1);

    // reversal fixes mu for odd n and negates it for even n
    CHECK(omega0(5) * mu_vector(5) == mu_vector(5));
    CHECK(omega0(4) * mu_vector(4) == -mu_vector(4));

    for (int n = 2; n <= 8; ++n) {
        // all-ones spans the left kernel of the size-2n difference cycle
        CHECK((ones_row(2 * n) * s_matrix(2 * n)).is_zero());

        // xi^t eta is w^t for even n and zero for odd n
        const RatMatrix pairing = ones_row(2 * n) * eta_form(2 * n);
        if (n % 2 == 0) {
            CHECK(pairing == w_vector(2 * n));
        } else {
            CHECK(pairing.is_zero());
        }

        // xi is the sum of the odd-index f basis rows
        const RatMatrix f = f_basis(2 * n);
        RatMatrix sum(1, 2 * n);
        for (int i = 1; i <= 2 * n - 1; i += 2) {
            sum = sum + f.submatrix({i}, first_subset(2 * n));
        }
        CHECK(sum == ones_row(2 * n));

        // f rows form a basis of the hyperplane orthogonal to w
        CHECK(rank(f) == 2 * n - 1);
        CHECK((f * w_vector(2 * n).transpose()).is_zero());
    }
}

TEST_CASE("constant matrix dispatch") {
    CHECK(constant_matrix({ConstantKind::Omega0, 3}) == omega0(3));
    CHECK(constant_matrix({ConstantKind::S, 4}) == s_matrix(4));
    CHECK(constant_matrix({ConstantKind::T, 8}) == t_matrix(8));
    CHECK(constant_matrix({ConstantKind::G, 5}) == g_form(5));
    CHECK(constant_matrix({ConstantKind::Eta, 6}) == eta_form(6));
    CHECK(constant_matrix({ConstantKind::Delta, 4}) == delta_matrix(4));
    CHECK(constant_matrix({ConstantKind::D, 4}) == d_matrix(4));
    CHECK_THROWS_AS(constant_matrix({ConstantKind::Eta, 5}), DimensionError);
}
