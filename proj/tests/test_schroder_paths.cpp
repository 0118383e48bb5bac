#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aztec/lattice.hpp"
#include "aztec/schroder.hpp"

using namespace aztec;

TEST_CASE("small path partition values") {
    Rational a = make_rational(2), b = make_rational(3);
    CHECK(path_Z(0, 0, a, b) == 1);
    CHECK(path_Z(1, 1, a, b) == b);
    CHECK(path_Z(1, -1, a, b) == a);
    CHECK(path_Z(2, 0, a, b) == a * a + 2 * b * b);  // down-up, up-down, flat
    CHECK(path_Z(1, 0, a, b) == 0);                  // parity mismatch
    CHECK(path_Z(2, 4, a, b) == 0);                  // unreachable
}

TEST_CASE("generating function coefficients equal the DP values") {
    Rational a = make_rational(2), b = make_rational(3);
    auto gf = path_gf(8, a, b);
    PathTable tab(8, a, b);
    for (int i = 0; i <= 8; ++i)
        for (int j = -i; j <= i; ++j) CHECK(gf[i].coeff(j) == tab.value(i, j));
    // at (a,b) = (1,2): a^2 + 2b^2 = 1 + 8 = 9
    CHECK(path_gf_coeff(2, 0, Rational(1), make_rational(2)) == 9);
}

TEST_CASE("rational determinant basics") {
    CHECK(rational_determinant({{make_rational(1), make_rational(2)},
                                {make_rational(3), make_rational(4)}}) == -2);
    CHECK(rational_determinant({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 0);
}

TEST_CASE("LGV determinant reconstructs the conventional partition function") {
    for (auto [a, b] : {std::pair{make_rational(2), make_rational(3)},
                        std::pair{make_rational(1), make_rational(1)},
                        std::pair{make_rational(5, 2), make_rational(1, 3)}}) {
        for (int n = 1; n <= 6; ++n) CHECK(lgv_determinant(n, a, b) == Z_closed(n, a, b));
    }
    Rational a = make_rational(2), b = make_rational(3);
    CHECK(lgv_determinant(3, a, b) ==
          Rational(16) * pow_rational(a, 4) * pow_rational(b, 4) *
              pow_rational(a * a + b * b, 2));
}

TEST_CASE("t(p) is monotone on the physical branch") {
    for (double beta : {0.25, 1.0, 4.0}) {
        double alpha = (1 + beta) / std::sqrt(beta);
        CHECK(t_of_p_monotone(alpha));
        CHECK(t_of_p(1.0, alpha) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("single-path free energy endpoints and uniform value") {
    double a = 2, b = 3;
    CHECK(L_of_t(1, a, b) == doctest::Approx(0.5 * std::log(a * b)).epsilon(1e-14));
    CHECK(L_of_t(-1, a, b) == doctest::Approx(0.5 * std::log(a * b)).epsilon(1e-14));
    // uniform weights: L(0) = log(1 + sqrt 2), the large Schroder growth rate
    CHECK(L_of_t(0, 1, 1) == doctest::Approx(std::log(1 + std::sqrt(2.0))).epsilon(1e-8));
}

TEST_CASE("free energy matches the float DP at large order") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
        for (auto [i, j] : {std::pair{300, 0}, std::pair{300, 100}, std::pair{300, -150}}) {
            double t = static_cast<double>(j) / i;
            double dp = path_log_Z_float(i, j, a, b) / i;
            CHECK(std::abs(dp - L_of_t(t, a, b)) < 2e-2);
        }
    }
}

TEST_CASE("L' agrees with finite differences") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
        for (double t : {-0.7, -0.3, 0.0, 0.4, 0.8}) {
            double h = 1e-5;
            double fd = (L_of_t(t + h, a, b) - L_of_t(t - h, a, b)) / (2 * h);
            CHECK(L_prime_of_t(t, a, b) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("float DP validates its arguments") {
    CHECK_THROWS_AS(path_log_Z_float(3, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(path_log_Z_float(2, 4, 1, 1), std::invalid_argument);
}
