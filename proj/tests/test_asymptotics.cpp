#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aztec/asymptotics.hpp"
#include "aztec/refined.hpp"

using namespace aztec;

TEST_CASE("saddle locus parametrization") {
    for (double beta : {0.5, 1.0, 4.0}) {
        // the two closed forms for u(v) agree away from v = 1
        for (double v : {0.1, 0.5, 0.9, 1.3, 2.0, 10.0})
            CHECK(u_of_v(v, beta) == doctest::Approx(u_of_v_alt(v, beta)).epsilon(1e-11));
        // r(v) is increasing with r(0) = 0, r(1) = 1/2, r(inf) = 1
        CHECK(r_of_v(0, beta) == 0);
        CHECK(r_of_v(1, beta) == doctest::Approx(0.5).epsilon(1e-9));
        double prev = -1;
        for (double v = 0.05; v < 40; v += 0.05) {
            double r = r_of_v(v, beta);
            CHECK(r > prev);
            prev = r;
        }
        // inverse round-trips
        for (double r : {0.05, 0.3, 0.5, 0.7, 0.95})
            CHECK(r_of_v(v_of_r(r, beta), beta) == doctest::Approx(r).epsilon(1e-10));
    }
}

TEST_CASE("one-refined free energy: value, derivative, concavity") {
    for (double beta : {0.5, 1.0, 4.0}) {
        // F1(1/2) = (1/2) log(2(1+beta)/sqrt(beta))
        double mid = 0.5 * std::log(2 * (1 + beta) / std::sqrt(beta));
        CHECK(F1(0.5, beta) == doctest::Approx(mid).epsilon(1e-9));
        for (double r : {0.2, 0.4, 0.6, 0.8}) {
            double h = 1e-6;
            double fd = (F1(r + h, beta) - F1(r - h, beta)) / (2 * h);
            CHECK(F1_prime(r, beta) == doctest::Approx(fd).epsilon(1e-5));
            CHECK(F1_second(r, beta) < 0);
        }
    }
}

TEST_CASE("free energy limit against the float recurrence at n = 400") {
    const int n = 400;
    for (double beta : {0.5, 1.0, 4.0}) {
        auto row = one_refined_float(n, beta);
        for (double r : {0.25, 0.5, 0.75}) {
            int k = static_cast<int>(r * n);
            CHECK(std::abs(row.logS[k] / n - F1(r, beta)) < 1.5e-2);
        }
    }
}

TEST_CASE("boundary fluctuations are Gaussian with variance beta/(1+beta)^2") {
    const int n = 400;
    for (double beta : {0.5, 1.0, 4.0}) {
        auto p = boundary_distribution_float(n, beta);
        double mean = 0, var = 0;
        for (int k = 0; k <= n; ++k) mean += k * p[k];
        for (int k = 0; k <= n; ++k) var += (k - mean) * (k - mean) * p[k];
        double target = beta / ((1 + beta) * (1 + beta));
        CHECK(std::abs(var / n - target) < 0.1 * target);
        // the one-refined rows are nearly symmetric in k <-> n-k
        CHECK(mean / n == doctest::Approx(0.5).epsilon(5e-3));
    }
}

TEST_CASE("tangency locus solves H'(0) = 0 and matches its quadratic form") {
    for (double beta : {0.5, 1.0, 4.0}) {
        double al = alpha_of_beta(beta);
        for (double r : {0.51, 0.6, 0.75, 0.9, 0.99}) {
            double s = tangency_s(r, beta);
            CHECK(s > 0.5);
            CHECK(s <= 1.0 + 1e-12);
            CHECK(std::abs(H_profile_prime(0, r, s, beta)) < 1e-9);
            double vr = v_of_r(r, beta), vs = v_of_r(s, beta);
            CHECK(tangency_vs(vr, beta) == doctest::Approx(vs).epsilon(1e-9));
            CHECK((vr * vr - 1) * (vs * vs - 1) ==
                  doctest::Approx(2 * al * vr * vs).epsilon(1e-10));
        }
        // endpoints: r -> 1/2 gives s -> 1, r -> 1 gives s -> 1/2
        CHECK(tangency_s(0.5 + 1e-6, beta) == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(tangency_s(1.0 - 1e-6, beta) == doctest::Approx(0.5).epsilon(1e-3));
    }
}

TEST_CASE("overlap profile: concavity and the two F2 regimes") {
    for (double beta : {0.5, 4.0}) {
        for (double r : {0.6, 0.8}) {
            double s_top = tangency_s(r, beta);
            // below the locus the boundary formula applies and Phi < 0
            double s_lo = 0.5 * (0.5 + s_top);
            double a = std::pow(beta, 0.25), b = 1 / a;
            CHECK(H_profile_prime(0, r, s_lo, beta) < 0);
            CHECK(F2(r, s_lo, beta) ==
                  doctest::Approx(0.5 * std::log(std::sqrt(beta) / (2 * (1 + beta))) +
                                  F1(r, beta) + F1(s_lo, beta))
                      .epsilon(1e-12));
            CHECK(phi_excess(r, s_lo, beta, a, b) < 0);
            CHECK(std::abs(phi_excess(r, s_top, beta, a, b)) < 1e-8);
            // above the locus an interior saddle takes over
            double s_hi = 0.5 * (s_top + 1.0);
            if (s_hi < 1.0) {
                CHECK(H_profile_prime(0, r, s_hi, beta) > 0);
                double xs = xi_star(r, s_hi, beta);
                CHECK(xs > 0);
                CHECK(std::abs(H_profile_prime(xs, r, s_hi, beta)) < 1e-9);
            }
            for (double f : {0.0, 0.25, 0.5, 0.75})
                CHECK(H_profile_second(f * std::min(r, s_lo), r, s_lo, beta) < 0);
        }
    }
}
