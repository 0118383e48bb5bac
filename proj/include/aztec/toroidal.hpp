#pragma once

// 2x2m-periodic Aztec diamonds: edge weights alpha_1..alpha_m, beta_1..beta_m
// tied by the single relation prod alpha_i = prod beta_i. The partition
// function factorizes completely over the sequence
//   X_{2i-1} = alpha_i + beta_i,   X_{2i} = alpha_{i+1}^{-1} + beta_i^{-1}
// (indices periodic mod m), and satisfies a generalized octahedron recurrence
// over cyclically shifted and inverted weight tuples. m = 2 with
// (a/b, a/b, b/a, b/a) reproduces the two-periodic model; m = 1 is uniform.

#include <map>
#include <stdexcept>
#include <vector>

#include "aztec/matchings.hpp"
#include "aztec/rational.hpp"

namespace aztec {

struct PeriodicEdgeWeights {
    int m = 1;
    std::vector<Rational> alpha, beta;  // size m each, 1-based access helpers below

    // Cyclic 1-based accessors: alpha_at(i) = alpha_{((i-1) mod m)+1}.
    const Rational& alpha_at(long i) const { return alpha[mod_index(i)]; }
    const Rational& beta_at(long i) const { return beta[mod_index(i)]; }

    bool constrained() const {
        Rational pa = 1, pb = 1;
        for (const auto& a : alpha) pa *= a;
        for (const auto& b : beta) pb *= b;
        return pa == pb;
    }

    void validate() const {
        if (m < 1 || static_cast<int>(alpha.size()) != m || static_cast<int>(beta.size()) != m)
            throw std::invalid_argument("weight tuple size mismatch");
        for (const auto& a : alpha)
            if (a <= 0) throw std::invalid_argument("weights must be positive");
        for (const auto& b : beta)
            if (b <= 0) throw std::invalid_argument("weights must be positive");
        if (!constrained())
            throw std::invalid_argument("weights must satisfy prod alpha = prod beta");
    }

    // Elementwise inverse (preserves the product constraint).
    PeriodicEdgeWeights inverted() const {
        PeriodicEdgeWeights w{m, {}, {}};
        for (const auto& a : alpha) w.alpha.push_back(1 / a);
        for (const auto& b : beta) w.beta.push_back(1 / b);
        return w;
    }

    // Cyclic shift sigma: (alpha_2, beta_2, ..., alpha_1, beta_1).
    PeriodicEdgeWeights shifted() const {
        PeriodicEdgeWeights w{m, {}, {}};
        for (int i = 1; i < m; ++i) w.alpha.push_back(alpha[i]);
        w.alpha.push_back(alpha[0]);
        for (int i = 1; i < m; ++i) w.beta.push_back(beta[i]);
        w.beta.push_back(beta[0]);
        return w;
    }

  private:
    int mod_index(long i) const {
        long r = (i - 1) % m;
        if (r < 0) r += m;
        return static_cast<int>(r);
    }
};

// The two-periodic specialization (a/b, a/b, b/a, b/a) at m = 2.
inline PeriodicEdgeWeights two_periodic_weights(const Rational& a, const Rational& b) {
    return {2, {a / b, b / a}, {a / b, b / a}};
}

// X_j, j >= 1, with period 2m.
inline Rational X_of(const PeriodicEdgeWeights& w, long j) {
    if (j < 1) throw std::invalid_argument("X sequence starts at j = 1");
    if (j % 2 == 1) {
        long i = (j + 1) / 2;
        return w.alpha_at(i) + w.beta_at(i);
    }
    long i = j / 2;
    return 1 / w.alpha_at(i + 1) + 1 / w.beta_at(i);
}

// Fully factorized partition function T_n = prod_{i=1}^n prod_{j=0}^{i-1} X_{i+j}.
inline Rational T_product(int n, const PeriodicEdgeWeights& w) {
    Rational t = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 0; j < i; ++j) t *= X_of(w, i + j);
    return t;
}

// Ratio form T_n / T_{n-1} = X_n X_{n+1} ... X_{2n-1}.
inline Rational T_ratio(int n, const PeriodicEdgeWeights& w) {
    Rational t = 1;
    for (long j = n; j <= 2 * n - 1; ++j) t *= X_of(w, j);
    return t;
}

// Generalized octahedron recurrence at order n >= 2:
//   T_n(w) T_{n-2}(sigma w^{-1})
//     = alpha_1 T_{n-1}(w^{-1}) T_{n-1}(sigma w)
//     + beta_{n mod m} T_{n-1}(w) T_{n-1}(sigma w^{-1}),
// with beta index m when n mod m == 0.
inline bool mocta_holds(int n, const PeriodicEdgeWeights& w) {
    if (n < 2) throw std::invalid_argument("recurrence needs n >= 2");
    PeriodicEdgeWeights winv = w.inverted();
    PeriodicEdgeWeights ws = w.shifted();
    PeriodicEdgeWeights wsinv = ws.inverted();
    long bidx = n % w.m == 0 ? w.m : n % w.m;
    Rational lhs = T_product(n, w) * T_product(n - 2, wsinv);
    Rational rhs = w.alpha_at(1) * T_product(n - 1, winv) * T_product(n - 1, ws) +
                   w.beta_at(bidx) * T_product(n - 1, w) * T_product(n - 1, wsinv);
    return lhs == rhs;
}

// Checks the recurrence for 2 <= n <= n_max; returns 0 on success, else the
// first failing n.
inline int mocta_check(int n_max, const PeriodicEdgeWeights& w) {
    w.validate();
    for (int n = 2; n <= n_max; ++n)
        if (!mocta_holds(n, w)) return n;
    return 0;
}

// Refined linearization coefficients:
//   A_n = (1/X_n) * (alpha_{(n+1)/2} for n odd; beta_{n/2}^{-1} for n even),
//   B_n = 1 - A_n;  both periodic with period 2m, and 0 < A_n < 1.
inline Rational refined_A(int n, const PeriodicEdgeWeights& w) {
    if (n < 1) throw std::invalid_argument("refined_A needs n >= 1");
    Rational num = n % 2 == 1 ? w.alpha_at((n + 1) / 2) : 1 / w.beta_at(n / 2);
    return num / X_of(w, n);
}

inline Rational refined_B(int n, const PeriodicEdgeWeights& w) {
    return 1 - refined_A(n, w);
}

// Normalized refinement distribution generated by the linearized recurrence
//   p_{n,k} = A_n p_{n-1,k-1} + B_n p_{n-1,k},  p_{0,0} = 1;
// each row sums to 1 since A_n + B_n = 1.
inline std::vector<Rational> refined_table_row(int n, const PeriodicEdgeWeights& w) {
    std::vector<Rational> row{Rational(1)};
    for (int lvl = 1; lvl <= n; ++lvl) {
        Rational A = refined_A(lvl, w), B = 1 - A;
        std::vector<Rational> nxt(lvl + 1, Rational(0));
        for (int k = 0; k < lvl; ++k) {
            nxt[k + 1] += A * row[k];
            nxt[k] += B * row[k];
        }
        row = std::move(nxt);
    }
    return row;
}

// The maximally factorized n = 8, m = 3 evaluation, written out term by term:
//   (a1 a3 b2 b3)^{-5} (a2 b1)^{-6} (a1+b1)^7 (a2+b1)^6 (a2+b2)^7
//   (a3+b2)^5 (a3+b3)^6 (a1+b3)^5.
inline Rational T8_m3_factorized(const PeriodicEdgeWeights& w) {
    if (w.m != 3) throw std::invalid_argument("factorized form is for m = 3");
    const Rational &a1 = w.alpha[0], &a2 = w.alpha[1], &a3 = w.alpha[2];
    const Rational &b1 = w.beta[0], &b2 = w.beta[1], &b3 = w.beta[2];
    return pow_rational(a1 * a3 * b2 * b3, -5) * pow_rational(a2 * b1, -6) *
           pow_rational(a1 + b1, 7) * pow_rational(a2 + b1, 6) * pow_rational(a2 + b2, 7) *
           pow_rational(a3 + b2, 5) * pow_rational(a3 + b3, 6) * pow_rational(a1 + b3, 5);
}

// --- edge weight assignment -------------------------------------------------

// Weights sit on broken staircase lines running SW -> NE. The line with index
// d carries the horizontal edges whose left vertex satisfies v - u = d and the
// vertical edges whose bottom vertex satisfies v - u = d - 1, alternating
// h, v, h, v, ... along the line. Lines exist for d = n-1, n-3, ..., -(n-1).
// Along a line the weights cycle alpha_1, beta_1, alpha_2, beta_2, ...
// starting with alpha_1 on the lowest horizontal edge (a vertical edge sitting
// before it continues the cycle backwards, i.e. gets beta_m). Counting lines
// upward from the bottom one, even lines carry the weights as is and odd lines
// carry the inverted weights; all other edges weigh 1.
inline std::vector<Rational> edge_weight_grid(const AztecGraph& g, const PeriodicEdgeWeights& w) {
    w.validate();
    std::vector<Rational> ew(g.edges.size(), Rational(1));
    // staircase index and position of every colored edge
    std::map<int, std::vector<std::pair<int, int>>> lines;  // d -> (position, edge)
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [du, dv] = g.verts[g.edges[e].first];  // left / bottom endpoint
        if (g.edge_is_horizontal(e)) {
            int d = (dv - du) / 2;
            lines[d].emplace_back(du, e);  // horizontal at position du
        } else {
            int d = (dv - du) / 2 + 1;
            lines[d].emplace_back(du - 1, e);  // vertical between du-2 and du
        }
    }
    for (auto& [d, edges] : lines) {
        if (((d - (g.n - 1)) % 2 + 2) % 2 != 0) continue;  // not a staircase line
        std::sort(edges.begin(), edges.end());
        int level = (d + g.n - 1) / 2;  // 0 = bottom line, n-1 = top line
        bool inverse = level % 2 == 1;
        // phase: the first horizontal edge on the line is alpha_1
        int first_h = -1;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (g.edge_is_horizontal(edges[i].second)) {
                first_h = i;
                break;
            }
        if (first_h < 0) throw std::logic_error("staircase line with no horizontal edge");
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            long j = i - first_h;  // 2k -> alpha_{k+1}, 2k+1 -> beta_{k+1}, any sign
            long k = j >= 0 ? j / 2 : (j - 1) / 2;
            const Rational& val =
                j % 2 == 0 ? w.alpha_at(k + 1) : w.beta_at(k + 1);
            ew[edges[i].second] = inverse ? 1 / val : val;
        }
    }
    return ew;
}

inline Rational matching_edge_weight(const std::vector<Rational>& ew, const Matching& m) {
    Rational prod = 1;
    for (int e : m) prod *= ew[e];
    return prod;
}

struct BruteEdgeReport {
    Rational sum;    // brute-force sum over matchings of the edge weights
    Rational T;      // T_product(n, w)
    Rational gauge;  // sum / T, tiling-independent
};

inline BruteEdgeReport brute_edge_check(int n, const PeriodicEdgeWeights& w) {
    AztecGraph g = make_aztec_graph(n);
    std::vector<Rational> ew = edge_weight_grid(g, w);
    Rational sum = 0;
    for (const auto& m : enumerate_matchings(g)) sum += matching_edge_weight(ew, m);
    Rational T = T_product(n, w);
    return {sum, T, sum / T};
}

}  // namespace aztec
