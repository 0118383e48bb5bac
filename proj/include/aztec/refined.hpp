#pragma once

// Boundary-refined partition data for two-periodic Aztec diamonds:
//  - exact one-refined tables S_{n,k} as Laurent polynomials in beta = a^2/b^2,
//    with the generalized Pascal recurrence
//      S_{n,k}(beta) = S_{n-1,k-1}(beta) + {1 or beta} S_{n-1,k}(1/beta),
//    the factor being 1 for n = 0,1 (mod 4) and beta for n = 2,3 (mod 4);
//  - the generating function G(u,v) of the S_{n,k} as a bivariate series;
//  - exact two-refined tables T_{n,k,l}(a,b) at fixed rational (a,b);
//  - closed sum and uniform specializations of the two-refined ratios;
//  - exact NW boundary probabilities and float tables for large orders.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aztec/lattice.hpp"
#include "aztec/laurent.hpp"
#include "aztec/series.hpp"

namespace aztec {

struct OneRefinedTable {
    int nmax = 0;
    // S[n][k] = S_{n,k}(beta); S_inv[n][k] = S_{n,k}(1/beta). Row n has n+1 entries.
    std::vector<std::vector<LaurentPoly>> S, S_inv;
};

inline OneRefinedTable one_refined(int nmax) {
    OneRefinedTable t;
    t.nmax = nmax;
    t.S.resize(nmax + 1);
    t.S_inv.resize(nmax + 1);
    t.S[0] = {LaurentPoly(1)};
    t.S_inv[0] = {LaurentPoly(1)};
    for (int n = 1; n <= nmax; ++n) {
        bool unit = (n % 4 == 0 || n % 4 == 1);
        LaurentPoly c = unit ? LaurentPoly(1) : LaurentPoly::monomial(1, 1);
        LaurentPoly c_inv = unit ? LaurentPoly(1) : LaurentPoly::monomial(1, -1);
        t.S[n].resize(n + 1);
        t.S_inv[n].resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            LaurentPoly s, s_inv;
            if (k >= 1 && k - 1 <= n - 1) {
                s += t.S[n - 1][k - 1];
                s_inv += t.S_inv[n - 1][k - 1];
            }
            if (k <= n - 1) {
                s += c * t.S_inv[n - 1][k];
                s_inv += c_inv * t.S[n - 1][k];
            }
            t.S[n][k] = std::move(s);
            t.S_inv[n][k] = std::move(s_inv);
        }
    }
    return t;
}

// T_{n,k}(a,b) = S_{n,k}(a^2/b^2) T_{n-1}(a,b) / a for n >= 1.
inline Rational T_one_refined(const OneRefinedTable& t, int n, int k, const Rational& a,
                              const Rational& b) {
    if (n < 1 || n > t.nmax) throw std::out_of_range("one-refined order out of range");
    if (k < 0 || k > n) return 0;
    Rational beta = (a * a) / (b * b);
    return t.S[n][k].eval(beta) * T_closed(n - 1, a, b) / a;
}

// --- generating functions --------------------------------------------------

namespace detail {
// Builds the common denominator P(u,v) = 1 - 2u^4(1+v^2)^2 - 4u^4v^2(beta+1/beta)
// + u^8(1-v^2)^4 as a BiSeries with Laurent coefficients in beta.
inline BiSeries build_P(int umax, int vmax) {
    BiSeries P(umax, vmax);
    auto add = [&](int i, int j, LaurentPoly c) {
        if (i <= umax && j <= vmax) P.at(i, j) += c;
    };
    add(0, 0, LaurentPoly(1));
    // -2u^4 (1 + 2v^2 + v^4)
    add(4, 0, LaurentPoly(-2));
    add(4, 2, LaurentPoly(-4));
    add(4, 4, LaurentPoly(-2));
    // -4u^4 v^2 (beta + 1/beta)
    LaurentPoly bb = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    add(4, 2, LaurentPoly(-4) * bb);
    // u^8 (1 - v^2)^4 = u^8 (1 - 4v^2 + 6v^4 - 4v^6 + v^8)
    add(8, 0, LaurentPoly(1));
    add(8, 2, LaurentPoly(-4));
    add(8, 4, LaurentPoly(6));
    add(8, 6, LaurentPoly(-4));
    add(8, 8, LaurentPoly(1));
    return P;
}

inline BiSeries build_G0_numerator(int umax, int vmax, bool invert_beta) {
    auto mono = [&](long c, int e) {
        return LaurentPoly::monomial(c, invert_beta ? -e : e);
    };
    BiSeries N(umax, vmax);
    auto add = [&](int i, int j, LaurentPoly c) {
        if (i <= umax && j <= vmax) N.at(i, j) += c;
    };
    add(0, 0, LaurentPoly(1));
    // -u^4 [1 + 2(1 + beta + 1/beta) v^2 + v^4]
    add(4, 0, LaurentPoly(-1));
    add(4, 2, LaurentPoly(-2) + mono(-2, 1) + mono(-2, -1));
    add(4, 4, LaurentPoly(-1));
    // +2u^4 v [1 + 1/beta + (1+beta) v^2]
    add(4, 1, LaurentPoly(2) + mono(2, -1));
    add(4, 3, LaurentPoly(2) + mono(2, 1));
    return N;
}
}  // namespace detail

// G^(0)(u,v;beta): generating function of the S_{n,k} with n = 0 (mod 4),
// expanded through u-degree `order`.
inline BiSeries gen_fun_G0(int order, bool invert_beta = false) {
    int vmax = order + 4;
    return detail::build_G0_numerator(order, vmax, invert_beta) / detail::build_P(order, vmax);
}

// Full generating function G(u,v;beta) = sum_{n,k} S_{n,k}(beta) u^n v^k.
inline BiSeries gen_fun_full(int order) {
    int vmax = order + 4;
    BiSeries G0 = gen_fun_G0(order, false);
    BiSeries G0i = gen_fun_G0(order, true);
    BiSeries pre(order, vmax), pre_i(order, vmax);
    LaurentPoly beta = LaurentPoly::monomial(1, 1);
    // [1 + uv + u^2(beta + v^2) + u^3 v(1 + 2 beta + v^2)]
    pre.at(0, 0) = 1;
    pre.at(1, 1) = 1;
    pre.at(2, 0) = beta;
    pre.at(2, 2) = 1;
    pre.at(3, 1) = LaurentPoly(1) + LaurentPoly(2) * beta;
    pre.at(3, 3) = 1;
    // [u + (1+beta) u^2 v + u^3(1 + (1 + 2 beta) v^2)]
    pre_i.at(1, 0) = 1;
    pre_i.at(2, 1) = LaurentPoly(1) + beta;
    pre_i.at(3, 0) = 1;
    pre_i.at(3, 2) = LaurentPoly(1) + LaurentPoly(2) * beta;
    return pre * G0 + pre_i * G0i;
}

// --- exact two-refined tables ---------------------------------------------

// T2[n][k][l] = T_{n,k,l}(a,b), the octahedral weight of matchings with k
// (resp. l) vertical edges along the NW (resp. NE) boundary.
struct TwoRefinedTable {
    int nmax = 0;
    Rational a, b;
    std::vector<std::vector<std::vector<Rational>>> T2;
};

inline TwoRefinedTable two_refined(int nmax, const Rational& a, const Rational& b) {
    if (nmax < 1) throw std::invalid_argument("two_refined needs nmax >= 1");
    TwoRefinedTable t;
    t.nmax = nmax;
    t.a = a;
    t.b = b;
    t.T2.resize(nmax + 1);
    auto ref = one_refined(nmax);
    t.T2[1].assign(2, std::vector<Rational>(2, Rational(0)));
    t.T2[1][0][0] = 1 / a;
    t.T2[1][1][1] = 1 / a;
    for (int n = 2; n <= nmax; ++n) {
        t.T2[n].assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
        Rational Tn1 = T_closed(n - 1, a, b), Tn2 = T_closed(n - 2, a, b);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                Rational acc = 0;
                if (k >= 1 && l >= 1 && k - 1 <= n - 1 && l - 1 <= n - 1)
                    acc += Tn1 * t.T2[n - 1][k - 1][l - 1];
                if (k <= n - 1 && l <= n - 1)
                    acc += T_one_refined(ref, n - 1, k, b, a) * T_one_refined(ref, n - 1, l, b, a);
                t.T2[n][k][l] = acc / Tn2;
            }
    }
    return t;
}

// S_{n,k,l}(beta) at beta = a^2/b^2, from the exact table.
inline Rational S_two_refined(const TwoRefinedTable& t, int n, int k, int l) {
    return t.a * t.T2[n][k][l] / T_closed(n - 1, t.a, t.b);
}

// epsilon_n(beta), the mod-4 prefactor in the two-refined linear recurrence.
inline double epsilon_n(int n, double beta) {
    double sb = std::sqrt(beta);
    switch (((n % 4) + 4) % 4) {
        case 0: return 1 + beta;
        case 1: return std::sqrt(2 * (1 + beta) / sb);
        case 2: return (1 + beta) * sb;
        default: return std::sqrt(2 * (1 + beta) / sb) * beta * sb;
    }
}

// Closed sum for S_{n,k,l}(beta) in floating point:
//   S_{n,k,l} = delta_{k,n} delta_{l,n}
//             + sum_i [sqrt(beta)/(2(1+beta))]^{(n-i)/2} epsilon_{n-i}(beta)
//               S_{n-1-i,k-i}(1/beta) S_{n-1-i,l-i}(1/beta).
inline double two_refined_closed(const OneRefinedTable& t, int n, int k, int l, double beta) {
    double total = (k == n && l == n) ? 1.0 : 0.0;
    double base = std::sqrt(beta) / (2 * (1 + beta));
    for (int i = 0; i <= std::min(k, l); ++i) {
        if (n - 1 - i < 0) break;
        if (k - i > n - 1 - i || l - i > n - 1 - i) continue;
        double sk = t.S_inv[n - 1 - i][k - i].eval_double(beta);
        double sl = t.S_inv[n - 1 - i][l - i].eval_double(beta);
        total += std::pow(base, (n - i) / 2.0) * epsilon_n(n - i, beta) * sk * sl;
    }
    return total;
}

// Exact uniform specialization S_{n,k,l}(1).
inline Rational uniform_two_refined(int n, int k, int l) {
    Rational total = (k == n && l == n) ? 1 : 0;
    Rational sum = 0;
    for (int i = 0; i <= std::min(k, l); ++i) {
        if (n - 1 - i < 0) break;
        sum += pow_rational(2, i) * Rational(binomial(n - 1 - i, k - i)) *
               Rational(binomial(n - 1 - i, l - i));
    }
    total += pow_rational(2, 1 - n) * sum;
    return total;
}

// Exact probability of k vertical dominos along the NW boundary under the
// conventional measure: P_{n,k}(a,b) = Z_{n,k}/Z_n = T_{n,k}(1/a,1/b)/T_n(1/a,1/b).
inline Rational boundary_probability(const OneRefinedTable& t, int n, int k, const Rational& a,
                                     const Rational& b) {
    Rational ia = 1 / a, ib = 1 / b;
    return T_one_refined(t, n, k, ia, ib) / T_closed(n, ia, ib);
}

// --- float tables for large orders ----------------------------------------

// log S_{n,k}(beta) (and the 1/beta companion) for a single row n, computed
// with per-level rescaling to avoid overflow.
struct OneRefinedFloatRow {
    int n = 0;
    std::vector<double> logS, logS_inv;
};

inline OneRefinedFloatRow one_refined_float(int n, double beta) {
    std::vector<double> Sb{1.0}, Si{1.0};
    double log_scale = 0;
    for (int m = 1; m <= n; ++m) {
        bool unit = (m % 4 == 0 || m % 4 == 1);
        double c = unit ? 1.0 : beta;
        double c_inv = unit ? 1.0 : 1.0 / beta;
        std::vector<double> nSb(m + 1, 0.0), nSi(m + 1, 0.0);
        for (int k = 0; k <= m; ++k) {
            if (k >= 1) {
                nSb[k] += Sb[k - 1];
                nSi[k] += Si[k - 1];
            }
            if (k <= m - 1) {
                nSb[k] += c * Si[k];
                nSi[k] += c_inv * Sb[k];
            }
        }
        double mx = 0;
        for (int k = 0; k <= m; ++k) mx = std::max(mx, std::max(nSb[k], nSi[k]));
        for (int k = 0; k <= m; ++k) {
            nSb[k] /= mx;
            nSi[k] /= mx;
        }
        log_scale += std::log(mx);
        Sb = std::move(nSb);
        Si = std::move(nSi);
    }
    OneRefinedFloatRow row;
    row.n = n;
    row.logS.resize(n + 1);
    row.logS_inv.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        row.logS[k] = std::log(Sb[k]) + log_scale;
        row.logS_inv[k] = std::log(Si[k]) + log_scale;
    }
    return row;
}

// Normalized NW boundary distribution P_{n,k}(a,b) with beta = a^2/b^2, in
// floating point (P_{n,k} is proportional to S_{n,k}(1/beta)).
inline std::vector<double> boundary_distribution_float(int n, double beta) {
    auto row = one_refined_float(n, beta);
    double mx = row.logS_inv[0];
    for (double v : row.logS_inv) mx = std::max(mx, v);
    std::vector<double> p(n + 1);
    double total = 0;
    for (int k = 0; k <= n; ++k) {
        p[k] = std::exp(row.logS_inv[k] - mx);
        total += p[k];
    }
    for (double& v : p) v /= total;
    return p;
}

}  // namespace aztec
