#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heckedim/hecke.hpp"
#include "heckedim/kappa.hpp"
#include "heckedim/kernel_dim.hpp"
#include "heckedim/rational_matrix.hpp"

namespace heckedim {

// --- truncated right-multiplication operators ------------------------------

// Matrix of right multiplication restricted to words of length <= depth,
// written in the orthonormal basis ttau_w = q^{-w/2} tau_w.  Row i holds the
// coefficients of ttau_{w_i} * elem; products falling outside the truncation
// are dropped, so only rows with word length <= exact_radius are exact.
// Exactness of the entries needs q^{w/2} rational, hence square-rational
// parameters.
struct TruncatedOperator {
    std::int64_t depth = 0;
    std::vector<Word> basis;
    RatMatrix mat;
    std::int64_t exact_radius = 0;

    bool row_exact(std::size_t i) const {
        return word_length(basis[i]) <= exact_radius;
    }
};

namespace detail {

inline Rational q_half_pow(const Word& w, const Rational& sqrt_qs, const Rational& sqrt_qt) {
    const LetterCounts lc = letter_counts(w);
    return sqrt_qs.pow(lc.ns) * sqrt_qt.pow(lc.nt);
}

}  // namespace detail

inline TruncatedOperator truncated_right_op(const HeckeElem& elem, std::int64_t depth,
                                            const Params& p) {
    if (depth < 1) throw std::invalid_argument("truncated_right_op: depth must be >= 1");
    const auto roots = p.square_roots();
    if (!roots)
        throw std::domain_error(
            "truncated_right_op: exact operator needs square-rational parameters");
    const HeckeElem op = convert_basis(elem, HBasis::tau, p);

    TruncatedOperator out;
    out.depth = depth;
    out.basis = words_up_to(depth);
    out.exact_radius = depth - op.max_word_length();
    out.mat = RatMatrix(out.basis.size(), out.basis.size());

    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = i;

    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        const Word& w = out.basis[i];
        const HeckeElem row = hecke_mul(HeckeElem::monomial(HBasis::tau, w), op, p);
        const Rational scale = detail::q_half_pow(w, roots->first, roots->second).inv();
        for (const auto& [v, c] : row.coeffs()) {
            auto it = index.find(v);
            if (it == index.end()) continue;  // outside the truncation
            out.mat.at(i, it->second) =
                c * detail::q_half_pow(v, roots->first, roots->second) * scale;
        }
    }
    return out;
}

// Floating-point variant for parameters without rational square roots.
struct TruncatedOperatorF {
    std::int64_t depth = 0;
    std::vector<Word> basis;
    std::vector<std::vector<double>> mat;
    std::int64_t exact_radius = 0;
    double tolerance = 1e-9;

    bool row_exact(std::size_t i) const {
        return word_length(basis[i]) <= exact_radius;
    }
};

inline TruncatedOperatorF truncated_right_op_f(const HeckeElem& elem, std::int64_t depth,
                                               const Params& p) {
    if (depth < 1) throw std::invalid_argument("truncated_right_op_f: depth must be >= 1");
    const HeckeElem op = convert_basis(elem, HBasis::tau, p);
    TruncatedOperatorF out;
    out.depth = depth;
    out.basis = words_up_to(depth);
    out.exact_radius = depth - op.max_word_length();
    out.mat.assign(out.basis.size(), std::vector<double>(out.basis.size(), 0.0));
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = i;
    const double sqs = std::sqrt(p.qs().to_double());
    const double sqt = std::sqrt(p.qt().to_double());
    auto half = [&](const Word& w) {
        const LetterCounts lc = letter_counts(w);
        return std::pow(sqs, static_cast<double>(lc.ns)) *
               std::pow(sqt, static_cast<double>(lc.nt));
    };
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        const HeckeElem row = hecke_mul(HeckeElem::monomial(HBasis::tau, out.basis[i]), op, p);
        for (const auto& [v, c] : row.coeffs()) {
            auto it = index.find(v);
            if (it == index.end()) continue;
            out.mat[i][it->second] = c.to_double() * half(v) / half(out.basis[i]);
        }
    }
    return out;
}

// --- eigenvector residuals --------------------------------------------------

namespace detail {

// ||x restricted to length <= radius||^2 relative to ||reference||^2.
inline Rational interior_residual_sq(const HeckeElem& diff, const HeckeElem& reference,
                                     std::int64_t radius, const Params& p) {
    const Rational den = norm_sq(reference, p);
    if (den.is_zero())
        throw std::invalid_argument("interior residual: zero reference vector");
    return norm_sq(restrict_length(diff, radius), p) / den;
}

}  // namespace detail

// Squared interior residual of kappa under right multiplication by st
// against the candidate eigenvalue: ||(k.st - lambda k)|_{<=N-2}||^2 / ||k||^2.
// Multiplication by st moves word length by at most two, so the interior of
// radius N-2 is computed exactly and the residual is exactly zero for the
// correct pairing.
inline Rational eigen_residual_sq(const KappaSpec& spec, const Rational& lambda,
                                  std::int64_t depth, const Params& p) {
    if (depth < 2) throw std::invalid_argument("eigen_residual_sq: depth must be >= 2");
    if (spec.zero_vec)
        throw std::invalid_argument("eigen_residual_sq: zero kappa has no residual");
    const HeckeElem k = kappa_truncated(spec, depth);
    const HeckeElem st = convert_basis(HeckeElem::monomial(HBasis::group, word_z(1)),
                                       HBasis::tau, p);
    const HeckeElem diff = hecke_mul(k, st, p) - lambda * k;
    return detail::interior_residual_sq(diff, k, depth - 2, p);
}

// Same residual for left multiplication by st.
inline Rational eigen_residual_left_sq(const KappaSpec& spec, const Rational& lambda,
                                       std::int64_t depth, const Params& p) {
    if (depth < 2) throw std::invalid_argument("eigen_residual_left_sq: depth must be >= 2");
    if (spec.zero_vec)
        throw std::invalid_argument("eigen_residual_left_sq: zero kappa has no residual");
    const HeckeElem k = kappa_truncated(spec, depth);
    const HeckeElem st = convert_basis(HeckeElem::monomial(HBasis::group, word_z(1)),
                                       HBasis::tau, p);
    const HeckeElem diff = hecke_mul(st, k, p) - lambda * k;
    return detail::interior_residual_sq(diff, k, depth - 2, p);
}

// Interior residual of kappa under a_s - a_t against mu; one-letter
// operator, so the exact radius is N-1.
inline Rational asat_residual_sq(const KappaSpec& spec, const Rational& mu,
                                 std::int64_t depth, const Params& p) {
    if (depth < 1) throw std::invalid_argument("asat_residual_sq: depth must be >= 1");
    if (spec.zero_vec)
        throw std::invalid_argument("asat_residual_sq: zero kappa has no residual");
    const HeckeElem k = kappa_truncated(spec, depth);
    const HeckeElem op =
        idempotent_a(Gen::s, HBasis::tau, p) - idempotent_a(Gen::t, HBasis::tau, p);
    const HeckeElem diff = hecke_mul(k, op, p) - mu * k;
    return detail::interior_residual_sq(diff, k, depth - 1, p);
}

// --- the coefficient recurrences --------------------------------------------

struct Mat2 {
    Rational a, b, c, d;  // row-major [[a, b], [c, d]]

    Rational det() const { return a * d - b * c; }
    Rational trace() const { return a + d; }

    std::pair<Rational, Rational> apply(const std::pair<Rational, Rational>& v) const {
        return {a * v.first + b * v.second, c * v.first + d * v.second};
    }
};

// All scalar data of the second-order recurrences satisfied by the
// coordinates of an st-eigenvector, at a given mu.
struct RecurrenceData {
    Rational mu, lambda;
    Rational alpha_s, alpha_t, alpha_st;
    Rational delta, beta, gamma;
    Mat2 m_rec, n_rec;
    bool det_ok = false;
    bool trace_ok = false;
    // Eigenvalues chi1, chi2 (|chi1| >= |chi2|) when the characteristic
    // roots are rational.
    std::optional<std::pair<Rational, Rational>> chi;
};

inline RecurrenceData recurrence_data(const Params& p, const Rational& mu) {
    const auto roots = p.square_roots();
    if (!roots)
        throw std::domain_error("recurrence_data: square-rational parameters required");
    const Rational ss = roots->first, tt = roots->second;
    RecurrenceData rd;
    rd.mu = mu;
    rd.lambda = Rational(1) - Rational(2) * mu * mu;
    rd.alpha_s = ss + ss.inv();
    rd.alpha_t = tt + tt.inv();
    rd.alpha_st = ss * tt - (ss * tt).inv();
    rd.delta = rd.alpha_s / rd.alpha_t;
    rd.beta = rd.alpha_st / rd.alpha_s - rd.alpha_t * mu;
    rd.gamma = rd.alpha_st / rd.alpha_t + rd.alpha_s * mu;
    const Rational di = rd.delta.inv();
    rd.m_rec = Mat2{di, rd.beta, rd.gamma * di, rd.beta * rd.gamma + rd.delta};
    rd.n_rec = Mat2{rd.delta, rd.gamma, rd.beta * rd.delta, rd.beta * rd.gamma + di};
    rd.det_ok = rd.m_rec.det() == Rational(1) && rd.n_rec.det() == Rational(1);
    const Rational tr = rd.beta * rd.gamma + rd.delta + di;
    rd.trace_ok = rd.m_rec.trace() == tr && rd.n_rec.trace() == tr;
    const Rational disc = tr * tr - Rational(4);
    if (disc.sign() >= 0) {
        if (auto sq = disc.sqrt()) {
            Rational c1 = (tr + *sq) / Rational(2);
            Rational c2 = (tr - *sq) / Rational(2);
            if (c1.abs() < c2.abs()) std::swap(c1, c2);
            rd.chi = std::make_pair(c1, c2);
        }
    }
    return rd;
}

// The four closed-form eigenvalue/mu pairings.
inline std::vector<std::pair<Rational, Rational>> solution_pairs(const Params& p) {
    const auto roots = p.square_roots();
    if (!roots)
        throw std::domain_error("solution_pairs: square-rational parameters required");
    const Rational ss = roots->first, tt = roots->second;
    return {{ss * tt, Rational(0)},
            {(ss * tt).inv(), Rational(0)},
            {-(ss / tt), Rational(1)},
            {-(tt / ss), Rational(-1)}};
}

// Verification of one (chi2, mu) pairing: the characteristic equation
// chi^2 - (beta gamma + delta + delta^-1) chi + 1 = 0 always, and the
// initial equation
//   x_s/alpha_s - x_t/alpha_t = (mu - 1/(1+q_s) + 1/(1+q_t)) x_1
// with x_s = (chi2 - delta^-1)/beta and x_t = (chi2 - delta)/gamma when the
// denominators do not vanish (on the break curves they may).
struct SolutionPairCheck {
    Rational chi2, mu;
    bool char_ok = false;
    enum class Init : std::uint8_t { ok, failed, degenerate } init = Init::failed;
    RecurrenceData data;
};

inline SolutionPairCheck check_solution_pair(const Params& p, const Rational& chi2,
                                             const Rational& mu) {
    SolutionPairCheck out;
    out.chi2 = chi2;
    out.mu = mu;
    out.data = recurrence_data(p, mu);
    const RecurrenceData& rd = out.data;
    const Rational tr = rd.m_rec.trace();
    out.char_ok = chi2 * chi2 - tr * chi2 + Rational(1) == Rational(0);
    if (rd.beta.is_zero() || rd.gamma.is_zero()) {
        out.init = SolutionPairCheck::Init::degenerate;
        return out;
    }
    const Rational xs = (chi2 - rd.delta.inv()) / rd.beta;
    const Rational xt = (chi2 - rd.delta) / rd.gamma;
    const Rational lhs = xs / rd.alpha_s - xt / rd.alpha_t;
    const Rational rhs = mu - (Rational(1) + p.qs()).inv() + (Rational(1) + p.qt()).inv();
    out.init = lhs == rhs ? SolutionPairCheck::Init::ok : SolutionPairCheck::Init::failed;
    return out;
}

// Non-decay test: iterate the recurrence matrix and report true when the
// orbit does not collapse (squared norm after `iters` steps at least a
// fixed quarter of the initial one).  A nonzero chi1-component or a Jordan
// block keeps the orbit large; an exact chi2-direction decays.
inline bool divergence_check(const Mat2& m, std::pair<Rational, Rational> v,
                             std::int64_t iters = 50) {
    const Rational start = v.first * v.first + v.second * v.second;
    if (start.is_zero())
        throw std::invalid_argument("divergence_check: zero initial vector");
    for (std::int64_t i = 0; i < iters; ++i) v = m.apply(v);
    const Rational end = v.first * v.first + v.second * v.second;
    return end >= start / Rational(4);
}

inline bool divergence_check(const Params& p, const Rational& mu,
                             std::pair<Rational, Rational> v, std::int64_t iters = 50) {
    return divergence_check(recurrence_data(p, mu).m_rec, std::move(v), iters);
}

// Eigenvector of the recurrence matrix for a given eigenvalue, in the
// [beta, chi - delta^-1] form; valid whenever it is nonzero.
inline std::pair<Rational, Rational> chi_direction(const RecurrenceData& rd,
                                                   const Rational& chi) {
    std::pair<Rational, Rational> v{rd.beta, chi - rd.delta.inv()};
    if (v.first.is_zero() && v.second.is_zero())
        throw std::domain_error("chi_direction: eigenvector formula degenerates");
    return v;
}

// --- exclusion of other eigenvalues ------------------------------------------

// The would-be solution with beta = 0 forces
// (q_s + q_t + 2)(2 q_s q_t + q_s + q_t) = 0, impossible for positive q.
inline Rational case1_exclusion_value(const Params& p) {
    return (p.qs() + p.qt() + Rational(2)) *
           (Rational(2) * p.qs() * p.qt() + p.qs() + p.qt());
}

// Floating-point check that a candidate eigenvalue with mu outside {0,±1}
// admits no square-summable eigenvector: either the recurrence has no
// decaying direction at all, or the decaying direction violates the
// initial equation by a definite residual.
struct ExoticCheck {
    double mu = 0.0;
    bool no_decaying_direction = false;
    double init_residual = 0.0;
};

inline ExoticCheck exotic_eigenvalue_check(double qs, double qt, double mu) {
    ExoticCheck out;
    out.mu = mu;
    const double ss = std::sqrt(qs), tt = std::sqrt(qt);
    const double as = ss + 1.0 / ss, at = tt + 1.0 / tt;
    const double ast = ss * tt - 1.0 / (ss * tt);
    const double delta = as / at;
    const double beta = ast / as - at * mu;
    const double gamma = ast / at + as * mu;
    const double tr = beta * gamma + delta + 1.0 / delta;
    const double disc = tr * tr - 4.0;
    if (disc <= 0.0) {
        // complex or repeated roots on the unit circle: no decay possible
        out.no_decaying_direction = true;
        return out;
    }
    const double r1 = (tr + std::sqrt(disc)) / 2.0;
    const double r2 = (tr - std::sqrt(disc)) / 2.0;
    const double chi2 = std::abs(r1) < std::abs(r2) ? r1 : r2;
    if (std::abs(chi2) >= 1.0 - 1e-12) {
        out.no_decaying_direction = true;
        return out;
    }
    if (std::abs(beta) < 1e-12 || std::abs(gamma) < 1e-12) {
        // beta or gamma collapse: excluded by the positive product
        // (q_s+q_t+2)(2 q_s q_t + q_s + q_t); report that as the residual.
        out.init_residual = (qs + qt + 2.0) * (2.0 * qs * qt + qs + qt);
        return out;
    }
    const double xs = (chi2 - 1.0 / delta) / beta;
    const double xt = (chi2 - delta) / gamma;
    const double lhs = xs / as - xt / at;
    const double rhs = mu - 1.0 / (1.0 + qs) + 1.0 / (1.0 + qt);
    out.init_residual = std::abs(lhs - rhs);
    return out;
}

// --- orthogonality of the decomposition --------------------------------------

// Exact cancellation identities behind the orthogonal complement
// projection, partial inner products of the truncated kappa vectors, and
// the component-dimension sum.
struct OrthReport {
    bool s_identity_ok = false;
    bool t_identity_ok = false;
    std::vector<Rational> cross_partials;  // <k+_trunc(n), k-_trunc(n)>, n = 0..depth
    bool cross_monotone = true;            // |S_{n+1}| <= |S_n| from n = 4 on
    Rational dims_sum;
    bool dims_sum_ok = false;
};

inline OrthReport orthogonality_check(const Params& p, std::int64_t depth) {
    OrthReport out;
    const KDims kd = dims_of_K(p);
    const Rational s1 = p.region().prod == Cmp::gt ? Rational(-1) : Rational(1);
    const Rational s2 = p.region().pair == Cmp::gt ? Rational(-1) : Rational(1);
    const Rational ip_s = (Rational(1) - p.qs()) / (Rational(1) + p.qs());
    const Rational ip_t = (Rational(1) - p.qt()) / (Rational(1) + p.qt());
    // <s k~empty, 1> = <s,1> - sigma1 dim K+ - sigma2 dim K-, and the
    // t-identity flips the sign of the K- term.
    out.s_identity_ok = ip_s - s1 * kd.k_plus - s2 * kd.k_minus == Rational(0);
    out.t_identity_ok = ip_t - s1 * kd.k_plus + s2 * kd.k_minus == Rational(0);

    const KappaSpec plus = kappa_plus_spec(p);
    const KappaSpec minus = kappa_minus_spec(p);
    out.cross_partials.reserve(static_cast<std::size_t>(depth + 1));
    Rational acc(0);
    std::int64_t len = 0;
    for (const Word& w : words_up_to(depth)) {
        // words_up_to is ordered by length, so partial sums by length are
        // prefix sums over this enumeration.
        while (word_length(w) > len) {
            out.cross_partials.push_back(acc);
            ++len;
        }
        acc += r_pow(plus, w) * r_pow(minus, w) * q_pow(w, p);
    }
    out.cross_partials.push_back(acc);
    for (std::size_t n = 4; n + 1 < out.cross_partials.size(); ++n)
        if (out.cross_partials[n + 1].abs() > out.cross_partials[n].abs())
            out.cross_monotone = false;

    out.dims_sum = kd.k_plus + kd.k_minus + kd.k_empty;
    out.dims_sum_ok = out.dims_sum == Rational(1);
    return out;
}

}  // namespace heckedim
