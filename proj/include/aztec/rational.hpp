#pragma once

// Exact rational scalar type backed by GMP, plus small parsing/formatting
// helpers used across the library and the CLI.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aztec {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 to a negative power");
        Rational inv = 1 / base;
        return pow_rational(inv, -e);
    }
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace aztec
