#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "heckedim/rational.hpp"

namespace heckedim {

// Laurent polynomial in one variable z with rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
    static LaurentPoly one() { return constant(Rational(1)); }

    static LaurentPoly monomial(std::int64_t exp, const Rational& coef) {
        LaurentPoly f;
        if (!coef.is_zero()) f.c_[exp] = coef;
        return f;
    }

    bool is_zero() const { return c_.empty(); }

    const std::map<std::int64_t, Rational>& coeffs() const { return c_; }

    Rational coeff(std::int64_t exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add_term(std::int64_t exp, const Rational& coef) {
        if (coef.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(exp, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::int64_t min_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: min_exp of zero");
        return c_.begin()->first;
    }

    std::int64_t max_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: max_exp of zero");
        return c_.rbegin()->first;
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [e, c] : c_) out.c_[e] = -c;
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& f) {
        LaurentPoly out;
        if (c.is_zero()) return out;
        for (const auto& [e, fc] : f.c_) out.c_[e] = c * fc;
        return out;
    }

    // z^k * f
    LaurentPoly shifted(std::int64_t k) const {
        LaurentPoly out;
        for (const auto& [e, c] : c_) out.c_[e + k] = c;
        return out;
    }

    // The bar involution z -> z^-1.
    LaurentPoly bar() const {
        LaurentPoly out;
        for (const auto& [e, c] : c_) out.c_[-e] = c;
        return out;
    }

    Rational eval(const Rational& point) const {
        if (point.is_zero()) throw std::invalid_argument("LaurentPoly: evaluation at zero");
        Rational out(0);
        for (const auto& [e, c] : c_) out += c * point.pow(e);
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : c_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            if (e != 0) out += "*z^" + std::to_string(e);
        }
        return out;
    }

private:
    std::map<std::int64_t, Rational> c_;
};

// Exact quotient f/g in the Laurent ring.  Throws if g is zero or the
// division leaves a remainder.  Shift both arguments to ordinary
// polynomials, long-divide, and shift back.
inline LaurentPoly laurent_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("laurent_exact_div: division by zero");
    if (f.is_zero()) return LaurentPoly{};
    const std::int64_t shift = f.min_exp() - g.min_exp();
    LaurentPoly rem = f.shifted(-f.min_exp());
    const LaurentPoly div = g.shifted(-g.min_exp());
    const std::int64_t dd = div.max_exp();
    const Rational lead = div.coeff(dd);
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= dd) {
        const std::int64_t e = rem.max_exp() - dd;
        const Rational c = rem.coeff(rem.max_exp()) / lead;
        quot.add_term(e, c);
        rem -= LaurentPoly::monomial(e, c) * div;
    }
    if (!rem.is_zero()) throw std::logic_error("laurent_exact_div: inexact division");
    return quot.shifted(shift);
}

}  // namespace heckedim
