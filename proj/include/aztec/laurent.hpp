#pragma once

// Sparse univariate Laurent polynomials with exact rational coefficients.
// Exponents may be negative; the zero polynomial has an empty term map.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aztec/rational.hpp"

namespace aztec {

class LaurentPoly {
  public:
    LaurentPoly() = default;
    /*implicit*/ LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    /*implicit*/ LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, long e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Constant-term extraction; throws if other exponents are present.
    Rational as_constant() const {
        if (terms_.empty()) return 0;
        if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
        throw std::domain_error("Laurent polynomial is not a constant");
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Substitutes x -> x^k (k = -1 gives the inversion involution).
    LaurentPoly substitute_power(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }

    // Evaluates at an exact rational point (nonzero if negative exponents occur).
    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (const auto& [e, c] : terms_) r += c * pow_rational(x, e);
        return r;
    }

    double eval_double(double x) const;

    std::string str(const std::string& var = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.get_str();
            if (e != 0) os << "*" << var << "^" << e;
        }
        return os.str();
    }

  private:
    void add_term(long e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long, Rational> terms_;
};

inline double LaurentPoly::eval_double(double x) const {
    double r = 0;
    for (const auto& [e, c] : terms()) {
        double p = 1, b = e < 0 ? 1.0 / x : x;
        for (long k = e < 0 ? -e : e; k > 0; --k) p *= b;
        r += to_double(c) * p;
    }
    return r;
}

// Exact Laurent evaluation helper mirroring the library-wide naming.
inline Rational laurent_eval(const LaurentPoly& p, const Rational& x) { return p.eval(x); }

}  // namespace aztec
