#pragma once

#include <stdexcept>
#include <utility>

#include "heckedim/dihedral.hpp"
#include "heckedim/hecke.hpp"

namespace heckedim {

// Coefficient pattern of the formal series kappa(r_s, r_t) = sum_w r^w tau_w.
// The zero_vec flag covers the boundary parameter values where the vector
// is zero by convention (there is no renormalized limit object; the
// convention is part of the contract).
struct KappaSpec {
    Rational rs, rt;
    bool zero_vec = false;

    static KappaSpec zero() { return KappaSpec{Rational(0), Rational(0), true}; }

    friend bool operator==(const KappaSpec&, const KappaSpec&) = default;
};

enum class KappaKind : std::uint8_t { plus, minus };

// +1 eigenvector pattern for right multiplication by st:
//   (1,1) below the curve q_s q_t = 1, (-1/q_s, -1/q_t) above, 0 on it.
inline KappaSpec kappa_plus_spec(const Params& p) {
    switch (p.region().prod) {
        case Cmp::lt: return KappaSpec{Rational(1), Rational(1)};
        case Cmp::gt: return KappaSpec{-p.qs().inv(), -p.qt().inv()};
        default: return KappaSpec::zero();
    }
}

// -1 eigenvector pattern: (1, -1/q_t) for q_s < q_t, (-1/q_s, 1) for
// q_s > q_t, 0 on the diagonal.
inline KappaSpec kappa_minus_spec(const Params& p) {
    switch (p.region().pair) {
        case Cmp::lt: return KappaSpec{Rational(1), -p.qt().inv()};
        case Cmp::gt: return KappaSpec{-p.qs().inv(), Rational(1)};
        default: return KappaSpec::zero();
    }
}

inline KappaSpec kappa_spec(KappaKind k, const Params& p) {
    return k == KappaKind::plus ? kappa_plus_spec(p) : kappa_minus_spec(p);
}

// r^w follows the same letter-count pattern as q^w.
inline Rational r_pow(const KappaSpec& spec, const Word& w) {
    if (spec.zero_vec) return Rational(0);
    const LetterCounts lc = letter_counts(w);
    return spec.rs.pow(lc.ns) * spec.rt.pow(lc.nt);
}

// Partial sum of kappa over all words of length <= depth.
inline HeckeElem kappa_truncated(const KappaSpec& spec, std::int64_t depth) {
    if (depth < 0) throw std::invalid_argument("kappa_truncated: negative depth");
    HeckeElem out(HBasis::tau);
    if (spec.zero_vec) return out;
    for (const Word& w : words_up_to(depth)) out.add_term(w, r_pow(spec, w));
    return out;
}

// The series sum_w (r^w)^2 q^w converges iff (r_s r_t)^2 < 1/(q_s q_t).
inline bool kappa_norm_converges(const KappaSpec& spec, const Params& p) {
    if (spec.zero_vec) return true;
    const Rational rr = spec.rs * spec.rt;
    return rr * rr * p.qs() * p.qt() < Rational(1);
}

// Closed-form squared norm (1 + r_s^2 q_s)(1 + r_t^2 q_t) / (1 - r_s^2 r_t^2 q_s q_t).
inline Rational kappa_norm_sq(const KappaSpec& spec, const Params& p) {
    if (spec.zero_vec) return Rational(0);
    if (!kappa_norm_converges(spec, p))
        throw std::domain_error("kappa_norm_sq: series diverges, (r_s r_t)^2 >= 1/(q_s q_t)");
    const Rational a = spec.rs * spec.rs * p.qs();
    const Rational b = spec.rt * spec.rt * p.qt();
    return (Rational(1) + a) * (Rational(1) + b) / (Rational(1) - a * b);
}

// Exact tail sum_{|w| > depth} (r^w)^2 q^w of the norm series.  Word mass
// by length: 1 at length 0, 2*rho^n at length 2n, (A)*rho^n at length
// 2n+1, with rho = r_s^2 q_s r_t^2 q_t and A = r_s^2 q_s + r_t^2 q_t.
inline Rational kappa_norm_tail(const KappaSpec& spec, const Params& p, std::int64_t depth) {
    if (depth < 0) throw std::invalid_argument("kappa_norm_tail: negative depth");
    if (spec.zero_vec) return Rational(0);
    if (!kappa_norm_converges(spec, p))
        throw std::domain_error("kappa_norm_tail: series diverges");
    const Rational a = spec.rs * spec.rs * p.qs();
    const Rational b = spec.rt * spec.rt * p.qt();
    const Rational rho = a * b;
    const Rational geom = Rational(1) - rho;
    const std::int64_t n_even = depth / 2 + 1;        // first even length > depth
    const std::int64_t n_odd = (depth + 1) / 2;       // first odd length > depth
    return (Rational(2) * rho.pow(n_even) + (a + b) * rho.pow(n_odd)) / geom;
}

// Regional action of the generators on kappa: s and t fix kappa up to the
// listed sign, and tau_s, tau_t act by the listed scalars.
struct KappaAction {
    int s_sign = 1, t_sign = 1;
    Rational tau_s_scalar, tau_t_scalar;
};

inline KappaAction kappa_action(KappaKind k, const Params& p) {
    KappaAction act;
    if (k == KappaKind::plus) {
        const int sigma = p.region().prod == Cmp::gt ? -1 : 1;
        act.s_sign = sigma;
        act.t_sign = sigma;
        act.tau_s_scalar = sigma > 0 ? p.qs() : Rational(-1);
        act.tau_t_scalar = sigma > 0 ? p.qt() : Rational(-1);
    } else {
        const int sigma = p.region().pair == Cmp::gt ? -1 : 1;
        act.s_sign = sigma;
        act.t_sign = -sigma;
        act.tau_s_scalar = sigma > 0 ? p.qs() : Rational(-1);
        act.tau_t_scalar = sigma > 0 ? Rational(-1) : p.qt();
    }
    return act;
}

// Restriction of x to the words of length <= radius.
inline HeckeElem restrict_length(const HeckeElem& x, std::int64_t radius) {
    HeckeElem out(x.basis());
    for (const auto& [w, c] : x.coeffs())
        if (word_length(w) <= radius) out.add_term(w, c);
    return out;
}

// Exact scalar <y, kappa>_q = sum_w y_w r^w q^w for finite y in the tau
// basis; this is the coefficient functional behind the bounded-operator
// estimate for kappa.
inline Rational kappa_pairing(const HeckeElem& y, const KappaSpec& spec, const Params& p) {
    if (y.basis() != HBasis::tau)
        throw std::invalid_argument("kappa_pairing: tau basis required");
    Rational out(0);
    for (const auto& [w, c] : y.coeffs()) out += c * r_pow(spec, w) * q_pow(w, p);
    return out;
}

}  // namespace heckedim
