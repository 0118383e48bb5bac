#pragma once

// The arctic curve of the two-periodic Aztec diamond, obtained by two
// independent constructions, plus its degree-8 algebraic equation and the
// boundary arc integral used as a consistency check.
//
// The diamond is rescaled to |X| + |Y| <= 1. The north arc is parametrized by
// v in [1, inf), running from (-1/2, 1/2) at v=1 to (1/2, 1/2) as v -> inf;
// the full outer component follows by the diamond's fourfold symmetry.

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aztec/asymptotics.hpp"
#include "aztec/numerics.hpp"
#include "aztec/schroder.hpp"

namespace aztec {

struct CurvePoint {
    double X = 0, Y = 0;
};

// Slope of the tangent touching the arctic curve at the point associated with
// v = v(r): t* = t(p = 1/v), written out explicitly.
inline double t_star(double v, double beta) {
    double a = alpha_of_beta(beta);
    double v2 = v * v, v4 = v2 * v2;
    double root = std::sqrt(v4 + (a * a - 2) * v2 + 1);
    double q = (v2 - 1) * (v2 - 1) * (v2 - 1) * (v2 - 1);
    double den = q - 4 * a * a * v4;
    double num = 2 * a * v * (v4 - 1) * root - 2 * a * a * v2 * (v4 + 1) - q;
    return num / den;
}

// Closed-form parametrization of the north arc (geometric tangent method).
inline CurvePoint geometric_curve(double v, double beta) {
    double v2 = v * v, v4 = v2 * v2;
    double den = std::pow(v2 + 1, 4) + 4 * (beta - 1) * (beta - 1) / beta * v4;
    double even = 0.5 * (v4 - 1) * (v2 + 1) * (v2 + 1);
    double odd = 2 * std::sqrt(beta) / (beta + 1) * v * std::pow(radicand(v, beta), 1.5);
    return {(even - odd) / den, (even + odd) / den};
}

// Same point from the raw tangent construction
//   X = (dt*/dr)^{-1} (t* - 1) + r - 1,  Y = t* (X - r + 1) + r,
// with dt*/dr = (dt*/dv) / (dr/dv) taken by central differences. Used as a
// cross-check of the closed form.
inline CurvePoint tangent_construction_curve(double v, double beta) {
    double h = 1e-6 * v;
    double dts = (t_star(v + h, beta) - t_star(v - h, beta)) / (2 * h);
    double dr = (r_of_v(v + h, beta) - r_of_v(v - h, beta)) / (2 * h);
    double r = r_of_v(v, beta);
    double ts = t_star(v, beta);
    double X = (dr / dts) * (ts - 1) + r - 1;
    return {X, ts * (X - r + 1) + r};
}

// Residual of the degree-8 algebraic equation in U = X+Y, V = Y-X,
// normalized by the largest absolute monomial-group value.
inline double degree8_residual(double X, double Y, double beta) {
    double U = X + Y, V = Y - X;
    double U2 = U * U, V2 = V * V;
    double p = beta + 1, m = beta - 1;
    double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2;
    double m2 = m * m, m4 = m2 * m2, m6 = m4 * m2;
    double b2 = beta * beta, b3 = b2 * beta, b4 = b2 * b2;
    double terms[9] = {
        p6 * (std::pow(U2, 4) + std::pow(V2, 4)),
        -4 * p4 * (b2 - 6 * beta + 1) * U2 * V2 * (U2 * U2 + V2 * V2),
        2 * p2 * (3 * b4 - 20 * b3 + 82 * b2 - 20 * beta + 3) * U2 * U2 * V2 * V2,
        -4 * p4 * (b2 - beta + 1) * (U2 * U2 * U2 + V2 * V2 * V2),
        4 * p2 * (b4 + 17 * b3 - 48 * b2 + 17 * beta + 1) * U2 * V2 * (U2 + V2),
        6 * (b4 - 1) * (b2 - 1) * (U2 * U2 + V2 * V2),
        4 * m2 * (b4 - 22 * b3 - 42 * b2 - 22 * beta + 1) * U2 * V2,
        -4 * m4 * (b2 + beta + 1) * (U2 + V2),
        m6,
    };
    double sum = 0, scale = 0;
    for (double t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
    }
    return scale > 0 ? std::abs(sum) / scale : std::abs(sum);
}

// --- two-refined tangent family -------------------------------------------

// Tangent line Y = a(v) X + b(v) from the two-refined transition locus.
inline double tangent_slope_a(double v, double beta) {
    double al = alpha_of_beta(beta);
    double W = std::sqrt(radicand(v, beta));
    double N = al * v * (v * v + 1) - (v * v - 1) * W;
    double D = al * v * (v * v + 1) + (v * v - 1) * W;
    return N / D;
}

inline double tangent_intercept_b(double v, double beta) {
    double al = alpha_of_beta(beta);
    double W = std::sqrt(radicand(v, beta));
    double g = (v * v - 1) / (v * v + 1) + al * v / W;
    return 1.0 / g;
}

namespace detail {
inline double W_prime(double v, double beta) {
    return ((beta + 1 / beta) * v + 2 * v * v * v) / std::sqrt(radicand(v, beta));
}
}  // namespace detail

inline double tangent_slope_a_prime(double v, double beta) {
    double al = alpha_of_beta(beta);
    double W = std::sqrt(radicand(v, beta));
    double Wp = detail::W_prime(v, beta);
    double N = al * v * (v * v + 1) - (v * v - 1) * W;
    double D = al * v * (v * v + 1) + (v * v - 1) * W;
    double Np = al * (3 * v * v + 1) - (2 * v * W + (v * v - 1) * Wp);
    double Dp = al * (3 * v * v + 1) + 2 * v * W + (v * v - 1) * Wp;
    return (Np * D - N * Dp) / (D * D);
}

inline double tangent_intercept_b_prime(double v, double beta) {
    double al = alpha_of_beta(beta);
    double W = std::sqrt(radicand(v, beta));
    double Wp = detail::W_prime(v, beta);
    double g = (v * v - 1) / (v * v + 1) + al * v / W;
    double gp = 4 * v / ((v * v + 1) * (v * v + 1)) + al * (W - v * Wp) / (W * W);
    return -gp / (g * g);
}

// Envelope of the two-refined tangent family: X = -b'/a', Y = a X + b.
inline CurvePoint two_refined_curve(double v, double beta) {
    double X = -tangent_intercept_b_prime(v, beta) / tangent_slope_a_prime(v, beta);
    return {X, tangent_slope_a(v, beta) * X + tangent_intercept_b(v, beta)};
}

// --- boundary arc integral -------------------------------------------------

// Integral of L(h'(x)) along the north arc between the contact points
// (-1/2, 1/2) and (1/2, 1/2), where h is the arc and h'(X(v)) = t*(v).
// Equals (1/2) log(2 ab (1+beta)/sqrt(beta)).
inline double arc_integral(double beta, double ab) {
    double a = std::sqrt(ab * std::sqrt(beta));  // recover (a,b) from beta, ab
    double b = a / std::sqrt(beta);
    auto X_of_v = [&](double v) { return geometric_curve(v, beta).X; };
    auto f_v = [&](double v) {
        double h = 1e-6 * v;
        double dX = (X_of_v(v + h) - X_of_v(v - h)) / (2 * h);
        return L_of_t(t_star(v, beta), a, b) * dX;
    };
    auto f_u = [&](double u) {  // substitution v = 1/u for the far end
        double h = 1e-7;
        double dX = (X_of_v(1 / (u + h)) - X_of_v(1 / (u - h))) / (2 * h);
        return L_of_t(t_star(1 / u, beta), a, b) * dX;
    };
    // L_of_t carries ~1e-13 bisection noise, so keep the quadrature tolerance
    // and depth well above the noise floor (the target accuracy is 1e-4).
    const double u0 = 1e-5;
    double I1 = adaptive_simpson(f_v, 1.0, 2.0, 1e-7, 14);
    // v in [2, 1/u0] maps to u in [u0, 1/2] with reversed orientation
    double I2 = -adaptive_simpson(f_u, u0, 0.5, 1e-7, 14);
    double tail = std::log(std::sqrt(ab)) * (0.5 - X_of_v(1 / u0));
    return I1 + I2 + tail;
}

// --- exports ----------------------------------------------------------------

// Samples the north arc on a log-spaced grid of v in [1, vmax].
inline std::vector<CurvePoint> sample_north_arc(double beta, int samples = 400,
                                                double vmax = 1e4) {
    std::vector<CurvePoint> pts;
    pts.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i)
        pts.push_back(geometric_curve(std::exp(std::log(vmax) * i / samples), beta));
    return pts;
}

inline void write_curve_csv(const std::string& path, double beta, int samples = 400) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "v,X,Y,residual\n";
    double vmax = 1e4;
    for (int i = 0; i <= samples; ++i) {
        double v = std::exp(std::log(vmax) * i / samples);
        CurvePoint p = geometric_curve(v, beta);
        os << v << "," << p.X << "," << p.Y << "," << degree8_residual(p.X, p.Y, beta) << "\n";
    }
}

// Renders the full outer component (four rotated copies of the north arc)
// inside the rescaled diamond.
inline void write_curve_svg(const std::string& path, double beta, int samples = 400) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    const double S = 220, C = 250;  // scale and center in pixels
    auto px = [&](double x) { return C + S * x; };
    auto py = [&](double y) { return C - S * y; };
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='500' height='500' "
          "viewBox='0 0 500 500'>\n";
    os << "<polygon points='" << px(1) << "," << py(0) << " " << px(0) << "," << py(1) << " "
       << px(-1) << "," << py(0) << " " << px(0) << "," << py(-1)
       << "' fill='none' stroke='black'/>\n";
    auto arc = sample_north_arc(beta, samples);
    for (int rot = 0; rot < 4; ++rot) {
        os << "<polyline fill='none' stroke='crimson' stroke-width='1.5' points='";
        for (const auto& p : arc) {
            double x = p.X, y = p.Y;
            for (int k = 0; k < rot; ++k) {
                double nx = y, ny = -x;  // rotate by -90 degrees
                x = nx;
                y = ny;
            }
            os << px(x) << "," << py(y) << " ";
        }
        os << "'/>\n";
    }
    os << "</svg>\n";
}

}  // namespace aztec
