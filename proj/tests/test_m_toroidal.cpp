#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aztec/toroidal.hpp"

using namespace aztec;

namespace {
PeriodicEdgeWeights sample_m3() {
    // prod alpha = 2*3*5 = 30 = 2 * (15/4) * 4 = prod beta
    return {3,
            {make_rational(2), make_rational(3), make_rational(5)},
            {make_rational(2), make_rational(15, 4), make_rational(4)}};
}
}  // namespace

TEST_CASE("weight tuple validation") {
    PeriodicEdgeWeights w = sample_m3();
    CHECK(w.constrained());
    CHECK_NOTHROW(w.validate());
    CHECK(w.alpha_at(4) == w.alpha_at(1));  // cyclic
    CHECK(w.beta_at(0) == w.beta_at(3));
    CHECK(w.inverted().constrained());
    CHECK(w.shifted().alpha_at(1) == w.alpha_at(2));
    PeriodicEdgeWeights bad{2, {Rational(1), Rational(2)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PeriodicEdgeWeights neg{1, {make_rational(-1)}, {make_rational(-1)}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
    CHECK(two_periodic_weights(make_rational(2), make_rational(3)).constrained());
}

TEST_CASE("X sequence and product forms") {
    PeriodicEdgeWeights w = sample_m3();
    for (long j = 1; j <= 12; ++j) CHECK(X_of(w, j) == X_of(w, j + 2 * w.m));
    CHECK(X_of(w, 1) == w.alpha_at(1) + w.beta_at(1));
    CHECK(X_of(w, 2) == 1 / w.alpha_at(2) + 1 / w.beta_at(1));
    CHECK(T_product(0, w) == 1);
    CHECK(T_product(1, w) == X_of(w, 1));
    for (int n = 1; n <= 12; ++n)
        CHECK(T_product(n, w) == T_product(n - 1, w) * T_ratio(n, w));
    // m = 1 uniform weights give the free count 2^{n(n+1)/2}
    PeriodicEdgeWeights u{1, {Rational(1)}, {Rational(1)}};
    long e = 0;
    for (int n = 1; n <= 8; ++n) {
        e += n;
        CHECK(T_product(n, u) == pow_rational(Rational(2), e));
    }
}

TEST_CASE("generalized octahedron recurrence") {
    CHECK(mocta_check(12, sample_m3()) == 0);
    CHECK(mocta_check(12, two_periodic_weights(make_rational(2), make_rational(3))) == 0);
    PeriodicEdgeWeights u{1, {make_rational(3, 7)}, {make_rational(3, 7)}};
    CHECK(mocta_check(12, u) == 0);
}

TEST_CASE("order-8 fully factorized form at m = 3") {
    PeriodicEdgeWeights w = sample_m3();
    CHECK(T8_m3_factorized(w) == T_product(8, w));
}

TEST_CASE("refinement coefficients: range, periodicity, uniform case") {
    PeriodicEdgeWeights w = sample_m3();
    for (int n = 1; n <= 2 * w.m; ++n) {
        Rational A = refined_A(n, w);
        CHECK(A > 0);
        CHECK(A < 1);
        CHECK(refined_A(n + 2 * w.m, w) == A);
        CHECK(refined_A(n, w) + refined_B(n, w) == 1);
    }
    PeriodicEdgeWeights u{1, {make_rational(5, 4)}, {make_rational(5, 4)}};
    for (int n = 1; n <= 6; ++n) CHECK(refined_A(n, u) == make_rational(1, 2));
    auto row = refined_table_row(5, u);
    for (int k = 0; k <= 5; ++k) CHECK(row[k] == Rational(binomial(5, k)) / 32);
    // rows always sum to 1
    auto row3 = refined_table_row(7, w);
    Rational sum = 0;
    for (const auto& p : row3) sum += p;
    CHECK(sum == 1);
}

TEST_CASE("edge weights: brute-force sum equals the product form") {
    std::vector<PeriodicEdgeWeights> samples{
        {1, {make_rational(3, 2)}, {make_rational(3, 2)}},
        two_periodic_weights(make_rational(2), make_rational(3)),
        sample_m3()};
    for (const auto& w : samples)
        for (int n = 1; n <= 4; ++n) {
            BruteEdgeReport rep = brute_edge_check(n, w);
            CHECK(rep.gauge == 1);
            CHECK(rep.sum == rep.T);
        }
}

TEST_CASE("m = 2 specialization matches the two-periodic conventional measure") {
    Rational a = make_rational(2), b = make_rational(3);
    AztecGraph g = make_aztec_graph(3);
    auto ew = edge_weight_grid(g, two_periodic_weights(a, b));
    FaceWeightGrid grid = two_periodic_grid(3, a, b);
    auto ms = enumerate_matchings(g);
    REQUIRE(ms.size() == 64);
    Rational ratio = matching_edge_weight(ew, ms[0]) / conventional_weight(g, grid, ms[0]);
    for (const auto& m : ms)
        CHECK(matching_edge_weight(ew, m) == ratio * conventional_weight(g, grid, m));
}
