#pragma once

// Small numeric helpers: bracketed bisection (the only root-finder used in
// this library) and adaptive Simpson quadrature.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace aztec {

// Bracketed bisection: f(lo) and f(hi) must have opposite signs (or vanish).
// Runs at most `iters` halvings or until the bracket width drops below `tol`.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200, double tol = 1e-13) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::domain_error("bisect: endpoints do not bracket a root");
    for (int i = 0; i < iters && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace detail {
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-9, int max_depth = 40) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace aztec
