#pragma once

// Weighted large Schroder paths (steps (1,1), (2,0), (1,-1)) with the
// two-periodic step weights, their generating function, the LGV determinant
// reconstruction of the partition function, and the asymptotic free energy
// L(t) of a single long path.
//
// Step weights from site (i,j), for a path started at an even-even site:
//   up (1,1):   b if i even, a if i odd
//   flat (2,0): b^2 if i even, a^2 if i odd
//   down (1,-1): a if i even, b if i odd
// Starting at an odd-odd site swaps a and b.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aztec/laurent.hpp"
#include "aztec/numerics.hpp"
#include "aztec/rational.hpp"
#include "aztec/series.hpp"

namespace aztec {

// Exact single-path partition function Z_{i,j}(a,b) from an even-even origin,
// computed by dynamic programming over columns.
class PathTable {
  public:
    PathTable(int imax, const Rational& a, const Rational& b) : imax_(imax) {
        z_.assign(imax + 1, std::vector<Rational>(2 * imax + 1, Rational(0)));
        at(0, 0) = 1;
        for (int i = 1; i <= imax; ++i)
            for (int j = -i; j <= i; ++j) {
                // parity of the previous column decides its weights
                bool prev_even = (i - 1) % 2 == 0;
                const Rational& up = prev_even ? b : a;
                const Rational& down = prev_even ? a : b;
                Rational acc = 0;
                if (std::abs(j - 1) <= i - 1) acc += up * at(i - 1, j - 1);
                if (std::abs(j + 1) <= i - 1) acc += down * at(i - 1, j + 1);
                if (i >= 2 && std::abs(j) <= i - 2) {
                    bool from_even = (i - 2) % 2 == 0;
                    const Rational& flat = from_even ? b * b : a * a;
                    acc += flat * at(i - 2, j);
                }
                at(i, j) = acc;
            }
    }

    const Rational& value(int i, int j) const {
        if (i < 0 || i > imax_ || std::abs(j) > imax_) throw std::out_of_range("path index");
        return z_[i][j + imax_];
    }

  private:
    Rational& at(int i, int j) { return z_[i][j + imax_]; }
    int imax_;
    std::vector<std::vector<Rational>> z_;
};

inline Rational path_Z(int i, int j, const Rational& a, const Rational& b) {
    if (i < 0 || std::abs(j) > i || (i + j) % 2 != 0) return 0;
    return PathTable(i, a, b).value(i, j);
}

// Series expansion in x of the path generating function
//   G(x,y) = (1 - a^2 x^2 + x (b y + a/y))
//          / ((1 - a^2 x^2)(1 - b^2 x^2) - x^2 (a y + b/y)(b y + a/y)),
// with Laurent-in-y coefficients; coefficient of x^i y^j equals Z_{i,j}(a,b).
inline PowerSeries<LaurentPoly> path_gf(int order, const Rational& a, const Rational& b) {
    using LP = LaurentPoly;
    LP y = LP::monomial(1, 1), yinv = LP::monomial(1, -1);
    LP ay_biy = LP::monomial(a, 1) + LP::monomial(b, -1);   // a y + b/y
    LP by_aiy = LP::monomial(b, 1) + LP::monomial(a, -1);   // b y + a/y
    PowerSeries<LP> num(order), den(order);
    num[0] = LP(1);
    if (order >= 1) num[1] = by_aiy;
    if (order >= 2) num[2] = LP::monomial(-a * a, 0);
    den[0] = LP(1);
    if (order >= 2) den[2] = LP::monomial(-(a * a + b * b), 0) - ay_biy * by_aiy;
    if (order >= 4) den[4] = LP::monomial(a * a * b * b, 0);
    return num / den;
}

inline Rational path_gf_coeff(int i, int j, const Rational& a, const Rational& b) {
    return path_gf(i, a, b)[i].coeff(j);
}

// Exact determinant by fraction-free-ish Gaussian elimination over rationals.
inline Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// LGV reconstruction: Z_n(a,b) = det(A) with A_{i,j} = Z_{i+j,j-i} computed
// with (a,b) for i even and (b,a) for i odd (alternating start parity).
inline Rational lgv_determinant(int n, const Rational& a, const Rational& b) {
    PathTable tab_ab(2 * n, a, b), tab_ba(2 * n, b, a);
    std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            A[i][j] = (i % 2 == 0) ? tab_ab.value(i + j, j - i) : tab_ba.value(i + j, j - i);
    return rational_determinant(std::move(A));
}

// --- asymptotics of a single long path ------------------------------------

// t(p) with p = sqrt(ab) x y and alpha = (a^2+b^2)/(ab). On the physical
// branch p in (0, 1], t increases from t(0) = -1 to t(1) = 1; the second
// branch p in [1, inf) decreases back to t(inf) = -1.
inline double t_of_p(double p, double alpha) {
    double p2 = p * p, p4 = p2 * p2;
    double root = std::sqrt(p4 + (alpha * alpha - 2) * p2 + 1);
    double onemp2 = 1 - p2;
    double quart = onemp2 * onemp2 * onemp2 * onemp2;
    double den = quart - 4 * alpha * alpha * p4;
    double num = 2 * alpha * p * (1 - p4) * root - 2 * alpha * alpha * p2 * (1 + p4) - quart;
    return num / den;
}

// L(t) = -log x(t) - t log y(t) for the dominant single-path free energy;
// x,y are recovered from the bisection solution of t(p) = t on p in (0, 1].
inline double L_of_t(double t, double a, double b) {
    double ab = a * b;
    if (t >= 1.0 || t <= -1.0) return 0.5 * std::log(ab);
    // Approaching t = 1 the ratio below suffers a (1-t)^3 cancellation, so
    // bridge the last stretch linearly between L(1-delta) and L(1) = log(ab)/2.
    const double delta = 1e-3;
    if (t > 1.0 - delta) {
        double L0 = L_of_t(1.0 - delta, a, b);
        return L0 + (t - (1.0 - delta)) / delta * (0.5 * std::log(ab) - L0);
    }
    double alpha = (a * a + b * b) / ab;
    double p = bisect([&](double q) { return t_of_p(q, alpha) - t; }, 1e-12, 1.0);
    double xy = p / std::sqrt(ab);
    double ratio = (t - p * p) / (t * p * p - 1);  // (x/y)^2 * ab
    if (ratio < 0) ratio = 0;
    double x_over_y = std::sqrt(ratio / ab);
    double x = std::sqrt(xy * x_over_y), y = std::sqrt(xy / x_over_y);
    return -std::log(x) - t * std::log(y);
}

// L'(t) = -log y(t) (the envelope property: x(t) drops out). Diverges at the
// endpoints t = +-1; meaningful for t strictly inside (-1, 1).
inline double L_prime_of_t(double t, double a, double b) {
    double ab = a * b;
    const double delta = 1e-3;
    if (t > 1.0 - delta) t = 1.0 - delta;
    if (t < -1.0 + delta) t = -1.0 + delta;
    double alpha = (a * a + b * b) / ab;
    double p = bisect([&](double q) { return t_of_p(q, alpha) - t; }, 1e-12, 1.0);
    double xy = p / std::sqrt(ab);
    double ratio = (t - p * p) / (t * p * p - 1);
    if (ratio < 0) ratio = 0;
    double x_over_y = std::sqrt(ratio / ab);
    return -std::log(std::sqrt(xy / x_over_y));
}

// Startup-style sanity scan: t(p) should be strictly increasing on (0, 1].
inline bool t_of_p_monotone(double alpha, int samples = 2000) {
    double prev = -1.0;  // t(0) = -1
    for (int i = 1; i <= samples; ++i) {
        double p = static_cast<double>(i) / samples;
        double cur = t_of_p(p, alpha);
        if (cur <= prev) return false;
        prev = cur;
    }
    return true;
}

// Float single-path partition function by DP with per-column rescaling;
// returns log Z_{i,j}(a,b).
inline double path_log_Z_float(int i, int j, double a, double b) {
    if (i < 0 || std::abs(j) > i || (i + j) % 2 != 0)
        throw std::invalid_argument("unreachable path endpoint");
    std::vector<std::vector<double>> z(i + 1, std::vector<double>(2 * i + 1, 0.0));
    std::vector<double> logscale(i + 1, 0.0);
    auto at = [&](int c, int r) -> double& { return z[c][r + i]; };
    at(0, 0) = 1;
    for (int c = 1; c <= i; ++c) {
        bool prev_even = (c - 1) % 2 == 0;
        double up = prev_even ? b : a, down = prev_even ? a : b;
        for (int r = -c; r <= c; ++r) {
            double acc = 0;
            if (std::abs(r - 1) <= c - 1) acc += up * at(c - 1, r - 1);
            if (std::abs(r + 1) <= c - 1) acc += down * at(c - 1, r + 1);
            if (c >= 2 && std::abs(r) <= c - 2) {
                bool from_even = (c - 2) % 2 == 0;
                double flat = from_even ? b * b : a * a;
                // bring column c-2 to the same scale as column c-1
                acc += flat * at(c - 2, r) * std::exp(logscale[c - 2] - logscale[c - 1]);
            }
            at(c, r) = acc;
        }
        double mx = 0;
        for (int r = -c; r <= c; ++r) mx = std::max(mx, at(c, r));
        for (int r = -c; r <= c; ++r) at(c, r) /= mx;
        logscale[c] = logscale[c - 1] + std::log(mx);
    }
    return std::log(at(i, j)) + logscale[i];
}

}  // namespace aztec
