#pragma once

// Aztec diamond face-weight grids, the octahedron recurrence, and the exact
// closed forms for the two-periodic partition functions.
//
// Geometry conventions (used across the whole library):
//  - faces sit at integer points (k,l) with |k|+|l| <= n; faces with
//    |k|+|l| <= n-1 are the inner faces, |k|+|l| = n the boundary ring;
//  - graph vertices sit at half-integer points (u,v) with |u|+|v| <= n;
//  - an order-m subdiamond centered at face (i,j) uses faces (i+k, j+l),
//    |k|+|l| <= m.

#include <functional>
#include <stdexcept>
#include <vector>

#include "aztec/rational.hpp"

namespace aztec {

// Face weights x_{k,l} on |k|+|l| <= n, stored densely.
class FaceWeightGrid {
  public:
    explicit FaceWeightGrid(int n)
        : n_(n), x_(static_cast<size_t>(2 * n) * (n + 1) + 1, Rational(1)) {}

    int order() const { return n_; }

    bool contains(int k, int l) const { return std::abs(k) + std::abs(l) <= n_; }

    const Rational& at(int k, int l) const {
        check(k, l);
        return x_[idx(k, l)];
    }
    void set(int k, int l, const Rational& w) {
        check(k, l);
        x_[idx(k, l)] = w;
    }

  private:
    void check(int k, int l) const {
        if (!contains(k, l)) throw std::out_of_range("face outside grid");
    }
    // Row-major over rows l = -n..n; row l holds 2*(n-|l|)+1 faces.
    size_t idx(int k, int l) const {
        size_t base = 0;
        for (int row = -n_; row < l; ++row) base += 2 * (n_ - std::abs(row)) + 1;
        return base + static_cast<size_t>(k + (n_ - std::abs(l)));
    }

    int n_;
    std::vector<Rational> x_;
};

// Two-periodic weights with parameters (a,b): for n odd, faces with k+l odd
// get weight 1, even faces get a (k,l both even) or b (both odd); for n even,
// faces with k+l even get weight 1, odd faces get a (k even) or b (k odd).
// Either way all faces on the boundary ring |k|+|l| = n get weight 1, and the
// lowest/highest inner faces (0,+-(n-1)) get weight a.
inline FaceWeightGrid two_periodic_grid(int n, const Rational& a, const Rational& b) {
    FaceWeightGrid g(n);
    for (int l = -n; l <= n; ++l)
        for (int k = -(n - std::abs(l)); k <= n - std::abs(l); ++k) {
            Rational w = 1;
            if (n % 2 != 0) {
                if ((k + l) % 2 == 0) w = (k % 2 == 0) ? a : b;
            } else {
                if (((k + l) % 2 + 2) % 2 == 1) w = (((k % 2) + 2) % 2 == 0) ? a : b;
            }
            g.set(k, l, w);
        }
    return g;
}

// Runs the octahedron recurrence
//   T_{m;i,j} T_{m-2;i,j} = T_{m-1;i+1,j} T_{m-1;i-1,j} + T_{m-1;i,j+1} T_{m-1;i,j-1}
// seeded by T_{0;i,j} = 1 and
//   T_{1;i,j} = (x_{i,j-1} x_{i,j+1} + x_{i-1,j} x_{i+1,j}) / x_{i,j},
// and returns T_{n;0,0}, the octahedral-measure partition function of the
// order-n diamond centered at the origin of the given grid.
inline Rational octahedron_evolve(const FaceWeightGrid& grid, int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    if (n > grid.order()) throw std::invalid_argument("order exceeds grid");
    if (n == 0) return 1;

    // level[m] maps center offsets |i|+|j| <= n-m; dense square indexing.
    auto level_value = [&](std::vector<Rational>& lv, int radius, int i, int j) -> Rational& {
        return lv[static_cast<size_t>(i + radius) * (2 * radius + 1) + (j + radius)];
    };

    int r0 = n;  // radius of centers needed at level m is n - m
    std::vector<Rational> prev2(static_cast<size_t>(2 * r0 + 1) * (2 * r0 + 1), Rational(1));
    std::vector<Rational> prev(static_cast<size_t>(2 * (r0 - 1) + 1) * (2 * (r0 - 1) + 1));
    for (int i = -(n - 1); i <= n - 1; ++i)
        for (int j = -(n - 1) + std::abs(i); j <= (n - 1) - std::abs(i); ++j) {
            Rational t = grid.at(i, j - 1) * grid.at(i, j + 1) + grid.at(i - 1, j) * grid.at(i + 1, j);
            level_value(prev, r0 - 1, i, j) = t / grid.at(i, j);
        }
    if (n == 1) return level_value(prev, r0 - 1, 0, 0);

    for (int m = 2; m <= n; ++m) {
        int r = n - m;
        std::vector<Rational> cur(static_cast<size_t>(2 * r + 1) * (2 * r + 1));
        for (int i = -r; i <= r; ++i)
            for (int j = -r + std::abs(i); j <= r - std::abs(i); ++j) {
                Rational num = level_value(prev, r + 1, i + 1, j) * level_value(prev, r + 1, i - 1, j) +
                               level_value(prev, r + 1, i, j + 1) * level_value(prev, r + 1, i, j - 1);
                cur[static_cast<size_t>(i + r) * (2 * r + 1) + (j + r)] =
                    num / level_value(prev2, r + 2, i, j);
            }
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev[0];
}

// Closed form for the octahedral two-periodic partition function.
inline Rational T_closed(int n, const Rational& a, const Rational& b) {
    if (n < 0) throw std::invalid_argument("negative order");
    long e1 = static_cast<long>(n + 1) * (n + 1) / 4;
    long e2 = static_cast<long>(n) * n / 4;
    Rational r = pow_rational(2 / (a * b), e1) * pow_rational(a * a + b * b, e2);
    if (n % 4 == 1) r *= b;
    if (n % 4 == 3) r *= a;
    return r;
}

// Closed form for the conventional-measure partition function.
inline Rational Z_closed(int n, const Rational& a, const Rational& b) {
    if (n < 0) throw std::invalid_argument("negative order");
    long e1 = static_cast<long>(n + 1) * (n + 1) / 4;
    long e2 = static_cast<long>(n) * n / 4;
    Rational r = pow_rational(2 * a * b, e1) * pow_rational(a * a + b * b, e2);
    if (n % 4 == 1) r *= a / b;
    return r;
}

}  // namespace aztec
