#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heckedim {

// Arbitrary-precision rational, always stored in canonical form
// (coprime numerator/denominator, denominator > 0).  Thin value wrapper
// around mpq_class; mpq_class alone does not canonicalize two-argument
// construction, which is an easy source of bugs.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading minus sign.
    static std::optional<Rational> parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    // Exact square root, if one exists over the rationals.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-') { neg = true; i = 1; }
    auto digits = [&](std::size_t& pos) -> std::optional<std::string> {
        std::string out;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out += text[pos++];
        if (out.empty()) return std::nullopt;
        return out;
    };
    auto num = digits(i);
    if (!num) return std::nullopt;
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        auto d = digits(i);
        if (!d) return std::nullopt;
        den = *d;
    }
    if (i != text.size()) return std::nullopt;
    mpz_class n(*num), d(den);
    if (d == 0) return std::nullopt;
    if (neg) n = -n;
    return Rational(n, d);
}

// Sign of sqrt(a) - (sqrt(b) + c) for rationals a, b >= 0 and any rational c,
// decided exactly.  Used for norm inequalities where both sides carry one
// square root.
inline int cmp_sqrt_vs_sqrt_plus(const Rational& a, const Rational& b, const Rational& c) {
    if (a.sign() < 0 || b.sign() < 0)
        throw std::domain_error("cmp_sqrt_vs_sqrt_plus: negative radicand");
    // sqrt(a) ? sqrt(b) + c
    if (c.sign() >= 0) {
        // Both sides nonnegative; squaring gives a ? b + c^2 + 2c*sqrt(b).
        Rational lhs = a - b - c * c;
        if (lhs.sign() < 0) return -1;
        // lhs >= 0 and 2c*sqrt(b) >= 0: compare squares.
        Rational l2 = lhs * lhs, r2 = Rational(4) * c * c * b;
        if (l2 < r2) return -1;
        if (l2 == r2) return 0;
        return 1;
    }
    // c < 0: sqrt(a) + |c| ? sqrt(b), symmetric case
    return -cmp_sqrt_vs_sqrt_plus(b, a, -c);
}

}  // namespace heckedim
