#pragma once

// Truncated formal power series:
//  - PowerSeries<T>: dense univariate series over a coefficient ring T,
//    truncated at a fixed order; division requires a unit constant term of 1.
//  - BiSeries: series in two variables (u, v) with nonnegative exponents and
//    LaurentPoly (in an auxiliary parameter) coefficients, truncated at fixed
//    u- and v-degree caps. Division proceeds in graded u-order and requires
//    the denominator's u^0 part to be exactly 1.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "aztec/laurent.hpp"

namespace aztec {

template <class T>
class PowerSeries {
  public:
    explicit PowerSeries(int order) : coef_(order + 1) {}

    int order() const { return static_cast<int>(coef_.size()) - 1; }
    T& operator[](int i) { return coef_[i]; }
    const T& operator[](int i) const { return coef_[i]; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }

    // Long division; den[0] must equal 1 so no coefficient inversion is needed.
    friend PowerSeries operator/(const PowerSeries& num, const PowerSeries& den) {
        if (!(den[0] == T(1)))
            throw std::domain_error("series division requires unit constant term");
        PowerSeries q(num.order());
        for (int k = 0; k <= num.order(); ++k) {
            T acc = num[k];
            for (int j = 1; j <= k && j <= den.order(); ++j) acc = acc - den[j] * q[k - j];
            q[k] = acc;
        }
        return q;
    }

  private:
    std::vector<T> coef_;
};

class BiSeries {
  public:
    BiSeries(int umax, int vmax)
        : umax_(umax), vmax_(vmax), c_(umax + 1, std::vector<LaurentPoly>(vmax + 1)) {}

    int umax() const { return umax_; }
    int vmax() const { return vmax_; }

    LaurentPoly& at(int i, int j) { return c_[i][j]; }
    const LaurentPoly& at(int i, int j) const { return c_[i][j]; }

    void set(int i, int j, LaurentPoly p) {
        if (i > umax_ || j > vmax_) throw std::out_of_range("BiSeries::set beyond caps");
        c_[i][j] = std::move(p);
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(a.umax_, a.vmax_);
        for (int i = 0; i <= r.umax_; ++i)
            for (int j = 0; j <= r.vmax_; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
        return r;
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries r(a.umax_, a.vmax_);
        for (int i = 0; i <= a.umax_; ++i)
            for (int j = 0; j <= a.vmax_; ++j) {
                if (a.c_[i][j].is_zero()) continue;
                for (int p = 0; i + p <= r.umax_; ++p)
                    for (int q = 0; j + q <= r.vmax_; ++q) {
                        if (b.c_[p][q].is_zero()) continue;
                        r.c_[i + p][j + q] += a.c_[i][j] * b.c_[p][q];
                    }
            }
        return r;
    }

    // Graded long division in u: requires den's u^0 slice to be exactly 1.
    friend BiSeries operator/(const BiSeries& num, const BiSeries& den) {
        if (!(den.c_[0][0] == LaurentPoly(1)))
            throw std::domain_error("BiSeries division requires unit constant term");
        for (int j = 1; j <= den.vmax_; ++j)
            if (!den.c_[0][j].is_zero())
                throw std::domain_error("BiSeries division requires trivial u^0 slice");
        BiSeries q(num.umax_, num.vmax_);
        for (int i = 0; i <= num.umax_; ++i)
            for (int j = 0; j <= num.vmax_; ++j) {
                LaurentPoly acc = num.c_[i][j];
                for (int p = 1; p <= i; ++p)
                    for (int qj = 0; qj <= j; ++qj) {
                        if (den.c_[p][qj].is_zero()) continue;
                        acc -= den.c_[p][qj] * q.c_[i - p][j - qj];
                    }
                q.c_[i][j] = acc;
            }
        return q;
    }

  private:
    int umax_, vmax_;
    std::vector<std::vector<LaurentPoly>> c_;
};

// Coefficient extraction from a rational function num/den given as BiSeries.
inline BiSeries series_of_rational(const BiSeries& num, const BiSeries& den) {
    return num / den;
}

}  // namespace aztec
