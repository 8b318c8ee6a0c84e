#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "heckedim/dihedral.hpp"
#include "heckedim/rational.hpp"

namespace heckedim {

// The group algebra RW carries two bases: the group basis {w} and the
// pullback {tau_w} of the Hecke basis, which depends on the parameters q.
// Elements are tagged with their basis; mixed-basis arithmetic is rejected
// rather than silently converted.
enum class HBasis : std::uint8_t { group, tau };

inline const char* basis_str(HBasis b) { return b == HBasis::group ? "group" : "tau"; }

class HeckeElem {
public:
    explicit HeckeElem(HBasis basis) : basis_(basis) {}

    static HeckeElem zero(HBasis basis) { return HeckeElem(basis); }

    static HeckeElem unit(HBasis basis) { return monomial(basis, kIdentity, Rational(1)); }

    static HeckeElem monomial(HBasis basis, const Word& w, const Rational& c = Rational(1)) {
        HeckeElem e(basis);
        e.add_term(w, c);
        return e;
    }

    HBasis basis() const { return basis_; }
    const std::map<Word, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }

    Rational coeff(const Word& w) const {
        auto it = c_.find(w);
        return it == c_.end() ? Rational(0) : it->second;
    }

    std::int64_t max_word_length() const {
        std::int64_t out = 0;
        for (const auto& [w, c] : c_) out = std::max(out, word_length(w));
        return out;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    HeckeElem operator-() const {
        HeckeElem out(basis_);
        for (const auto& [w, c] : c_) out.c_[w] = -c;
        return out;
    }

    HeckeElem& operator+=(const HeckeElem& o) {
        require_same_basis(o);
        for (const auto& [w, c] : o.c_) add_term(w, c);
        return *this;
    }

    HeckeElem& operator-=(const HeckeElem& o) {
        require_same_basis(o);
        for (const auto& [w, c] : o.c_) add_term(w, -c);
        return *this;
    }

    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }

    friend HeckeElem operator*(const Rational& c, const HeckeElem& x) {
        HeckeElem out(x.basis_);
        if (c.is_zero()) return out;
        for (const auto& [w, xc] : x.c_) out.c_[w] = c * xc;
        return out;
    }

    friend bool operator==(const HeckeElem&, const HeckeElem&) = default;

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : c_) {
            if (!first) out += " + ";
            first = false;
            out += c.str() + "*";
            out += (basis_ == HBasis::tau ? "T[" : "[") + word_str(w) + "]";
        }
        return out;
    }

private:
    void require_same_basis(const HeckeElem& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("HeckeElem: mixed-basis arithmetic");
    }

    HBasis basis_;
    std::map<Word, Rational> c_;
};

// Group-ring convolution; independent of the parameters.
inline HeckeElem group_mul(const HeckeElem& x, const HeckeElem& y) {
    if (x.basis() != HBasis::group || y.basis() != HBasis::group)
        throw std::invalid_argument("group_mul: operands must be in the group basis");
    HeckeElem out(HBasis::group);
    for (const auto& [u, cu] : x.coeffs())
        for (const auto& [v, cv] : y.coeffs()) out.add_term(word_mul(u, v), cu * cv);
    return out;
}

// x * tau_g by the one-letter rule: tau_w tau_g is tau_{wg} when the word
// grows, and (q_g - 1) tau_w + q_g tau_{wg} when it shrinks.
inline HeckeElem right_mul_tau_gen(const HeckeElem& x, Gen g, const Params& p) {
    if (x.basis() != HBasis::tau)
        throw std::invalid_argument("right_mul_tau_gen: tau basis required");
    const Word gw = gen_word(g);
    const Rational q = q_gen(p, g);
    HeckeElem out(HBasis::tau);
    for (const auto& [w, c] : x.coeffs()) {
        const Word wg = word_mul(w, gw);
        if (word_length(wg) > word_length(w)) {
            out.add_term(wg, c);
        } else {
            out.add_term(w, c * (q - Rational(1)));
            out.add_term(wg, c * q);
        }
    }
    return out;
}

// Bilinear extension of the generator rules.  Each word of y is expanded
// along a reduced expression; associativity of the Hecke product makes the
// letter-by-letter evaluation exact.
inline HeckeElem hecke_mul(const HeckeElem& x, const HeckeElem& y, const Params& p) {
    if (x.basis() != HBasis::tau || y.basis() != HBasis::tau)
        throw std::invalid_argument("hecke_mul: operands must be in the tau basis");
    HeckeElem out(HBasis::tau);
    for (const auto& [v, cv] : y.coeffs()) {
        HeckeElem cur = x;
        for (Gen g : reduced_letters(v)) cur = right_mul_tau_gen(cur, g, p);
        out += cv * cur;
    }
    return out;
}

inline HeckeElem mul(const HeckeElem& x, const HeckeElem& y, const Params& p) {
    if (x.basis() == HBasis::group && y.basis() == HBasis::group) return group_mul(x, y);
    return hecke_mul(x, y, p);
}

// Image of the group generator g in the tau basis:
//   g = (1-q_g)/(1+q_g) + 2/(1+q_g) tau_g.
inline HeckeElem group_gen_in_tau(Gen g, const Params& p) {
    const Rational q = q_gen(p, g);
    const Rational d = Rational(1) + q;
    HeckeElem out(HBasis::tau);
    out.add_term(kIdentity, (Rational(1) - q) / d);
    out.add_term(gen_word(g), Rational(2) / d);
    return out;
}

// Image of tau_g in the group basis: tau_g = (q_g-1)/2 + (q_g+1)/2 g.
inline HeckeElem tau_gen_in_group(Gen g, const Params& p) {
    const Rational q = q_gen(p, g);
    HeckeElem out(HBasis::group);
    out.add_term(kIdentity, (q - Rational(1)) / Rational(2));
    out.add_term(gen_word(g), (q + Rational(1)) / Rational(2));
    return out;
}

// Basis conversion along reduced words; exact in both directions.
inline HeckeElem convert_basis(const HeckeElem& x, HBasis target, const Params& p) {
    if (x.basis() == target) return x;
    HeckeElem out(target);
    for (const auto& [w, c] : x.coeffs()) {
        HeckeElem img = HeckeElem::unit(target);
        for (Gen g : reduced_letters(w)) {
            if (target == HBasis::tau)
                img = hecke_mul(img, group_gen_in_tau(g, p), p);
            else
                img = group_mul(img, tau_gen_in_group(g, p));
        }
        out += c * img;
    }
    return out;
}

// <tau_w, tau_w'> = q^w delta_{w,w'}; other bases are converted first.
inline Rational inner_product(const HeckeElem& x, const HeckeElem& y, const Params& p) {
    const HeckeElem xt = convert_basis(x, HBasis::tau, p);
    const HeckeElem yt = convert_basis(y, HBasis::tau, p);
    Rational out(0);
    const auto& a = xt.coeffs();
    const auto& b = yt.coeffs();
    for (const auto& [w, cx] : a) {
        auto it = b.find(w);
        if (it != b.end()) out += cx * it->second * q_pow(w, p);
    }
    return out;
}

inline Rational norm_sq(const HeckeElem& x, const Params& p) { return inner_product(x, x, p); }

// The *-involution relabels w -> w^-1 in either basis.
inline HeckeElem adjoint(const HeckeElem& x) {
    HeckeElem out(x.basis());
    for (const auto& [w, c] : x.coeffs()) out.add_term(word_inverse(w), c);
    return out;
}

// a_g = (1+g)/2 = (1+tau_g)/(1+q_g), a self-adjoint idempotent.
inline HeckeElem idempotent_a(Gen g, HBasis basis, const Params& p) {
    HeckeElem out(basis);
    if (basis == HBasis::group) {
        out.add_term(kIdentity, Rational(1, 2));
        out.add_term(gen_word(g), Rational(1, 2));
    } else {
        const Rational d = Rational(1) + q_gen(p, g);
        out.add_term(kIdentity, Rational(1) / d);
        out.add_term(gen_word(g), Rational(1) / d);
    }
    return out;
}

// h_g = (1-g)/2 = (q_g - tau_g)/(1+q_g), the complementary idempotent.
inline HeckeElem idempotent_h(Gen g, HBasis basis, const Params& p) {
    HeckeElem out(basis);
    if (basis == HBasis::group) {
        out.add_term(kIdentity, Rational(1, 2));
        out.add_term(gen_word(g), Rational(-1, 2));
    } else {
        const Rational q = q_gen(p, g);
        const Rational d = Rational(1) + q;
        out.add_term(kIdentity, q / d);
        out.add_term(gen_word(g), Rational(-1) / d);
    }
    return out;
}

}  // namespace heckedim
