#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aztec/matchings.hpp"
#include "aztec/refined.hpp"

using namespace aztec;

TEST_CASE("one-refined rows: degeneration and explicit order 3") {
    auto t = one_refined(30);
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(t.S[n][k].eval(1) == Rational(binomial(n, k)));
            // the companion table is the beta -> 1/beta involution
            CHECK(t.S_inv[n][k] == t.S[n][k].substitute_power(-1));
        }
    // S_3 = {1, 1+2 beta, 1+2 beta, 1}
    CHECK(t.S[3][0] == LaurentPoly(1));
    CHECK(t.S[3][1] == LaurentPoly(1) + LaurentPoly::monomial(2, 1));
    CHECK(t.S[3][2] == t.S[3][1]);
    CHECK(t.S[3][3] == LaurentPoly(1));
}

TEST_CASE("one-refined values against brute-force marginals") {
    Rational a = make_rational(2), b = make_rational(3);
    auto t = one_refined(4);
    for (int n = 1; n <= 4; ++n) {
        AztecGraph g = make_aztec_graph(n);
        FaceWeightGrid grid = two_periodic_grid(n, a, b);
        auto table = refined_counts(g, grid, Measure::Octahedral);
        Rational total = 0;
        for (int k = 0; k <= n; ++k) {
            Rational marg = 0;
            for (int l = 0; l <= n; ++l) marg += table[k][l];
            CHECK(marg == T_one_refined(t, n, k, a, b));
            total += marg;
        }
        CHECK(total == T_closed(n, a, b));
    }
    // explicit order-3 marginals at (2,3)
    CHECK(T_one_refined(t, 3, 0, a, b) == make_rational(13, 18));
    CHECK(T_one_refined(t, 3, 1, a, b) == make_rational(221, 162));
}

TEST_CASE("generating functions reproduce the recurrence tables") {
    const int order = 12;
    auto t = one_refined(order);
    BiSeries G0 = gen_fun_G0(order);
    BiSeries G = gen_fun_full(order);
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(G.at(n, k) == t.S[n][k]);
            if (n % 4 == 0) CHECK(G0.at(n, k) == t.S[n][k]);
        }
}

TEST_CASE("two-refined tables against brute force") {
    Rational a = make_rational(2), b = make_rational(3);
    auto t = two_refined(4, a, b);
    for (int n = 1; n <= 4; ++n) {
        AztecGraph g = make_aztec_graph(n);
        FaceWeightGrid grid = two_periodic_grid(n, a, b);
        auto brute = refined_counts(g, grid, Measure::Octahedral);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) CHECK(brute[k][l] == t.T2[n][k][l]);
    }
}

TEST_CASE("two-refined marginal and symmetry identities") {
    Rational a = make_rational(2), b = make_rational(3);
    auto t = two_refined(10, a, b);
    auto ref = one_refined(10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            Rational sum = 0;
            for (int l = 0; l <= n; ++l) {
                sum += t.T2[n][k][l];
                CHECK(t.T2[n][k][l] == t.T2[n][l][k]);
            }
            CHECK(sum == T_one_refined(ref, n, k, a, b));
        }
}

TEST_CASE("uniform two-refined closed form") {
    CHECK(uniform_two_refined(2, 1, 1) == make_rational(3, 2));
    auto tu = two_refined(6, Rational(1), Rational(1));
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                CHECK(S_two_refined(tu, n, k, l) == uniform_two_refined(n, k, l));
}

TEST_CASE("two-refined closed float sum matches the exact table") {
    Rational a = make_rational(2), b = make_rational(3);
    double beta = to_double(a * a / (b * b));
    auto t = two_refined(8, a, b);
    auto ref = one_refined(8);
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                double exact = to_double(S_two_refined(t, n, k, l));
                double closed = two_refined_closed(ref, n, k, l, beta);
                CHECK(closed == doctest::Approx(exact).epsilon(1e-12));
            }
}

TEST_CASE("boundary probabilities are a distribution") {
    Rational a = make_rational(2), b = make_rational(3);
    auto t = one_refined(10);
    for (int n = 1; n <= 10; ++n) {
        Rational sum = 0;
        for (int k = 0; k <= n; ++k) {
            Rational p = boundary_probability(t, n, k, a, b);
            CHECK(p > 0);
            sum += p;
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("float one-refined rows track the exact logs") {
    double beta = 4.0 / 9.0;
    auto t = one_refined(20);
    auto row = one_refined_float(20, beta);
    for (int k = 0; k <= 20; ++k) {
        double exact = std::log(t.S[20][k].eval_double(beta));
        CHECK(row.logS[k] == doctest::Approx(exact).epsilon(1e-12));
    }
    auto p = boundary_distribution_float(20, beta);
    double sum = 0;
    for (double v : p) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
}
