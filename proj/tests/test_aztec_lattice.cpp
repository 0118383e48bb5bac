#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aztec/lattice.hpp"

using namespace aztec;

TEST_CASE("face weight grid stores and bounds-checks") {
    FaceWeightGrid g(3);
    CHECK(g.order() == 3);
    CHECK(g.contains(3, 0));
    CHECK(!g.contains(2, 2));
    CHECK(g.at(1, -2) == 1);
    g.set(1, -2, make_rational(5, 7));
    CHECK(g.at(1, -2) == make_rational(5, 7));
    g.set(0, 3, make_rational(9));  // topmost face, last row
    CHECK(g.at(0, 3) == 9);
    CHECK_THROWS_AS(g.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(g.set(2, 2, Rational(1)), std::out_of_range);
}

TEST_CASE("two-periodic grid layout") {
    Rational a = make_rational(2), b = make_rational(3);
    for (int n : {3, 4, 5, 6}) {
        FaceWeightGrid g = two_periodic_grid(n, a, b);
        // boundary ring weighs 1, faces just below the poles weigh a
        for (int k = 0; k <= n; ++k) {
            CHECK(g.at(k, n - k) == 1);
            CHECK(g.at(-k, -(n - k)) == 1);
        }
        CHECK(g.at(0, n - 1) == a);
        CHECK(g.at(0, -(n - 1)) == a);
        // inner weights alternate between {a,b} faces and 1-faces
        for (int l = -(n - 1); l <= n - 1; ++l)
            for (int k = -(n - 1) + std::abs(l); k <= n - 1 - std::abs(l); ++k) {
                Rational w = g.at(k, l);
                bool ab_face = (w == a || w == b);
                bool unit_face = (w == 1);
                CHECK((ab_face || unit_face));
                // neighbors of an {a,b} face along the axes are 1-faces
                if (ab_face && g.contains(k + 1, l) && std::abs(k + 1) + std::abs(l) < n)
                    CHECK(g.at(k + 1, l) == 1);
            }
    }
}

TEST_CASE("octahedron recurrence matches the closed product form") {
    for (auto [a, b] : {std::pair{make_rational(1), make_rational(1)},
                        std::pair{make_rational(2), make_rational(3)},
                        std::pair{make_rational(1, 2), make_rational(5, 3)}}) {
        for (int n = 0; n <= 6; ++n) {
            FaceWeightGrid g = two_periodic_grid(std::max(n, 1), a, b);
            CHECK(octahedron_evolve(g, n) == T_closed(n, a, b));
        }
    }
}

TEST_CASE("known partition values") {
    Rational one(1);
    CHECK(Z_closed(3, one, one) == 64);  // 2^{n(n+1)/2}
    CHECK(Z_closed(4, one, make_rational(2)) ==
          pow_rational(Rational(4), 6) * pow_rational(Rational(5), 4));
    CHECK(Z_closed(3, make_rational(2), make_rational(3)) == 3504384);
    // T and Z agree at a = b = 1 up to nothing: both are 2^{n(n+1)/2}
    for (int n = 0; n <= 8; ++n) CHECK(T_closed(n, one, one) == Z_closed(n, one, one));
    // weight inversion: Z_n(a,b) = T_n(1/a,1/b) (ab)^{2 floor(n^2/4)} a^{n odd}
    Rational a = make_rational(2), b = make_rational(3);
    for (int n = 0; n <= 8; ++n) {
        long e2 = static_cast<long>(n) * n / 4;
        Rational extra = n % 2 == 1 ? a : Rational(1);
        CHECK(Z_closed(n, a, b) ==
              T_closed(n, 1 / a, 1 / b) * pow_rational(a * b, 2 * e2) * extra);
    }
}

TEST_CASE("octahedron recurrence on a non-periodic grid stays rational") {
    FaceWeightGrid g(3);
    int v = 1;
    for (int l = -3; l <= 3; ++l)
        for (int k = -(3 - std::abs(l)); k <= 3 - std::abs(l); ++k)
            g.set(k, l, make_rational(1 + (v++ % 5), 1 + (v % 3)));
    Rational t = octahedron_evolve(g, 3);
    CHECK(t > 0);
}

TEST_CASE("argument validation") {
    FaceWeightGrid g = two_periodic_grid(2, make_rational(2), make_rational(3));
    CHECK_THROWS_AS(octahedron_evolve(g, 3), std::invalid_argument);
    CHECK_THROWS_AS(octahedron_evolve(g, -1), std::invalid_argument);
    CHECK_THROWS_AS(T_closed(-1, Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Z_closed(-2, Rational(1), Rational(1)), std::invalid_argument);
}
