#pragma once

// Saddle-point asymptotics of the boundary-refined quantities: the one-refined
// free energy F1(r), the two-refined free energy F2(r,s) via the concave
// profile H(xi; r,s), the tangency locus in the (r,s) plane, and the excess
// free energy Phi(r,s) whose sign locates the 1-to-0 transition.
//
// Throughout beta = a^2/b^2 > 0 and alpha = (1+beta)/sqrt(beta).

#include <cmath>
#include <stdexcept>

#include "aztec/numerics.hpp"
#include "aztec/schroder.hpp"

namespace aztec {

inline double alpha_of_beta(double beta) { return (1 + beta) / std::sqrt(beta); }

// R(v) = 1 + (beta + 1/beta) v^2 + v^4, the recurring radicand.
inline double radicand(double v, double beta) {
    return 1 + (beta + 1 / beta) * v * v + v * v * v * v;
}

// u(v) > 0 on the saddle locus P(u,v) = 0:
// u^2 = 1 / (sqrt(R(v)) + alpha v).
inline double u_of_v(double v, double beta) {
    return 1.0 / std::sqrt(std::sqrt(radicand(v, beta)) + alpha_of_beta(beta) * v);
}

// Equivalent closed form u^2 = (sqrt(R) - alpha v) / (1 - v^2)^2, rationalized
// against u_of_v in tests (undefined at v = 1).
inline double u_of_v_alt(double v, double beta) {
    double d = (1 - v * v) * (1 - v * v);
    return std::sqrt((std::sqrt(radicand(v, beta)) - alpha_of_beta(beta) * v) / d);
}

// r(v) = v/(1-v^2) { (alpha/2) (1+v^2)/sqrt(R(v)) - v }, strictly increasing
// from 0 to 1 on v in [0, inf), with r(1) = 1/2 (removable singularity).
inline double r_of_v(double v, double beta) {
    if (v < 0) throw std::domain_error("r_of_v: negative v");
    double a = alpha_of_beta(beta);
    auto raw = [&](double w) {
        return w / (1 - w * w) * (0.5 * a * (1 + w * w) / std::sqrt(radicand(w, beta)) - w);
    };
    const double eps = 1e-7;
    if (std::abs(v - 1.0) < eps) {
        // removable singularity at v = 1 (r(1) = 1/2): interpolate across it
        double r_lo = raw(1.0 - eps), r_hi = raw(1.0 + eps);
        return r_lo + (r_hi - r_lo) * (v - (1.0 - eps)) / (2 * eps);
    }
    return raw(v);
}

// Inverse of r_of_v by bracketed bisection.
inline double v_of_r(double r, double beta) {
    if (r <= 0) return 0;
    if (r >= 1) throw std::domain_error("v_of_r: r must lie in (0,1)");
    double lo = 0, hi = 2;
    while (r_of_v(hi, beta) < r) {
        hi *= 2;
        if (hi > 1e14) throw std::runtime_error("v_of_r bracket failure");
    }
    return bisect([&](double v) { return r_of_v(v, beta) - r; }, lo, hi);
}

// F1(r) = -log u(v(r)) - r log v(r): one-refined free energy,
// lim (1/n) log S_{n,rn}(beta).
inline double F1(double r, double beta) {
    if (r <= 0 || r >= 1) return 0;  // S_{n,0} and S_{n,n} are O(1)
    double v = v_of_r(r, beta);
    return -std::log(u_of_v(v, beta)) - r * std::log(v);
}

inline double F1_prime(double r, double beta) { return -std::log(v_of_r(r, beta)); }

// F1''(r) = -v'(r)/v(r) with v'(r) = 1/r'(v); r'(v) by central differences.
inline double F1_second(double r, double beta) {
    double v = v_of_r(r, beta);
    double h = 1e-6 * (1 + v);
    double rp = (r_of_v(v + h, beta) - r_of_v(v - h, beta)) / (2 * h);
    return -1.0 / (rp * v);
}

inline double log_uv_of_r(double r, double beta) {
    double v = v_of_r(r, beta);
    return std::log(u_of_v(v, beta)) + std::log(v);
}

// H(xi; r,s), the concave profile maximized over the overlap length xi.
inline double H_profile(double xi, double r, double s, double beta) {
    double one = 1 - xi;
    return 0.5 * one * std::log(std::sqrt(beta) / (2 * (1 + beta))) +
           one * F1((r - xi) / one, beta) + one * F1((s - xi) / one, beta);
}

// H'(xi) = (1/2) log(2(1+beta)/sqrt(beta)) + log uv((r-xi)/(1-xi)) + log uv((s-xi)/(1-xi)).
inline double H_profile_prime(double xi, double r, double s, double beta) {
    double one = 1 - xi;
    return 0.5 * std::log(2 * (1 + beta) / std::sqrt(beta)) +
           log_uv_of_r((r - xi) / one, beta) + log_uv_of_r((s - xi) / one, beta);
}

// H''(xi) < 0 from the concavity of F1.
inline double H_profile_second(double xi, double r, double s, double beta) {
    double one = 1 - xi;
    double c = one * one * one;
    return (1 - r) * (1 - r) / c * F1_second((r - xi) / one, beta) +
           (1 - s) * (1 - s) / c * F1_second((s - xi) / one, beta);
}

// Interior saddle location xi* solving H'(xi) = 0 (requires H'(0) > 0).
inline double xi_star(double r, double s, double beta) {
    double smax = std::min(r, s);
    double hi = smax - 1e-10;
    return bisect([&](double xi) { return H_profile_prime(xi, r, s, beta); }, 0.0, hi);
}

// Two-refined free energy F2(r,s) = lim (1/n) log S_{n,rn,sn}(beta).
inline double F2(double r, double s, double beta) {
    double hp0 = H_profile_prime(0, r, s, beta);
    if (hp0 <= 0)
        return 0.5 * std::log(std::sqrt(beta) / (2 * (1 + beta))) + F1(r, beta) + F1(s, beta);
    double xs = xi_star(r, s, beta);
    double one = 1 - xs;
    return (1 - r) * std::log(v_of_r((r - xs) / one, beta)) +
           (1 - s) * std::log(v_of_r((s - xs) / one, beta));
}

// Tangency locus: for given r in [1/2, 1) (i.e. v_r = v(r) >= 1), the
// matching s in (1/2, 1] with H'(0; r,s) = 0, from the quadratic
// (v_r^2-1)(v_s^2-1) = 2 alpha v_r v_s and the closed form
// s = 1/2 + (sqrt(R(v_r)))/(alpha v_r (1+v_r^2)).
inline double tangency_s(double r, double beta) {
    double v = v_of_r(r, beta);
    return 0.5 + std::sqrt(radicand(v, beta)) / (alpha_of_beta(beta) * v * (1 + v * v));
}

// v_s as a function of v_r on the tangency locus (positive quadratic root).
inline double tangency_vs(double vr, double beta) {
    double a = alpha_of_beta(beta);
    double B = 2 * a * vr / (vr * vr - 1);
    return 0.5 * (B + std::sqrt(B * B + 4));
}

// Phi(r,s) = (1/2) log(sqrt(beta)/(2(1+beta))) + F1(r) + F1(s)
//          - (2-r-s) [L(t) - log sqrt(ab)], t = (s-r)/(2-r-s).
// Vanishes on the tangency locus, strictly negative below it.
inline double phi_excess(double r, double s, double beta, double a, double b) {
    double t = (s - r) / (2 - r - s);
    return 0.5 * std::log(std::sqrt(beta) / (2 * (1 + beta))) + F1(r, beta) + F1(s, beta) -
           (2 - r - s) * (L_of_t(t, a, b) - std::log(std::sqrt(a * b)));
}

}  // namespace aztec
