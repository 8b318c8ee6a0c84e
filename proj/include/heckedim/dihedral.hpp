#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckedim/rational.hpp"

namespace heckedim {

// Element of the infinite dihedral group <s,t | s^2 = t^2 = 1> in the
// normal form z^n or z^n*s, where z = st.  Every group element has exactly
// one (n, refl) representation, so equality is structural.
struct Word {
    std::int64_t n = 0;
    bool refl = false;

    friend auto operator<=>(const Word&, const Word&) = default;
};

inline constexpr Word kIdentity{0, false};
inline constexpr Word kGenS{0, true};
inline constexpr Word kGenT{-1, true};

inline constexpr Word word_z(std::int64_t k) { return Word{k, false}; }

// (n1,r1)*(n2,r2) = (n1 + (r1 ? -n2 : n2), r1 xor r2): conjugation by a
// reflection inverts the translation part.
inline constexpr Word word_mul(const Word& u, const Word& v) {
    return Word{u.n + (u.refl ? -v.n : v.n), u.refl != v.refl};
}

inline constexpr Word word_inverse(const Word& w) {
    return w.refl ? w : Word{-w.n, false};
}

enum class Gen : std::uint8_t { s, t };

inline constexpr Word gen_word(Gen g) { return g == Gen::s ? kGenS : kGenT; }

struct LetterCounts {
    std::int64_t ns = 0;
    std::int64_t nt = 0;

    friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

// Number of s- and t-letters in the reduced word:
//   z^n        -> (|n|, |n|)
//   z^n s, n>=0 -> (n+1, n)
//   z^n s, n<0  -> (|n|-1, |n|)
inline LetterCounts letter_counts(const Word& w) {
    const std::int64_t a = w.n < 0 ? -w.n : w.n;
    if (!w.refl) return {a, a};
    if (w.n >= 0) return {w.n + 1, w.n};
    return {a - 1, a};
}

inline std::int64_t word_length(const Word& w) {
    const LetterCounts lc = letter_counts(w);
    return lc.ns + lc.nt;
}

// Reduced expression as a letter sequence, leftmost letter first.
inline std::vector<Gen> reduced_letters(const Word& w) {
    std::vector<Gen> out;
    out.reserve(static_cast<std::size_t>(word_length(w)));
    if (w.n >= 0) {
        for (std::int64_t i = 0; i < w.n; ++i) {
            out.push_back(Gen::s);
            out.push_back(Gen::t);
        }
        if (w.refl) out.push_back(Gen::s);
    } else {
        const std::int64_t a = -w.n;
        const std::int64_t pairs = w.refl ? a - 1 : a;
        for (std::int64_t i = 0; i < pairs; ++i) {
            out.push_back(Gen::t);
            out.push_back(Gen::s);
        }
        if (w.refl) out.push_back(Gen::t);
    }
    return out;
}

inline std::string word_str(const Word& w) {
    if (w == kIdentity) return "e";
    std::string out;
    for (Gen g : reduced_letters(w)) out += (g == Gen::s ? 's' : 't');
    return out;
}

// All words of length <= N, ordered by length with the s-leading word
// before the t-leading word at each positive length.  Size is 2N+1.
inline std::vector<Word> words_up_to(std::int64_t max_len) {
    if (max_len < 0) throw std::invalid_argument("words_up_to: negative length bound");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(2 * max_len + 1));
    out.push_back(kIdentity);
    for (std::int64_t len = 1; len <= max_len; ++len) {
        if (len % 2 == 0) {
            out.push_back(word_z(len / 2));
            out.push_back(word_z(-len / 2));
        } else {
            out.push_back(Word{(len - 1) / 2, true});
            out.push_back(Word{-(len + 1) / 2, true});
        }
    }
    return out;
}

enum class Cmp : std::uint8_t { lt, eq, gt };

inline Cmp cmp_of(const Rational& a, const Rational& b) {
    if (a < b) return Cmp::lt;
    if (a == b) return Cmp::eq;
    return Cmp::gt;
}

inline const char* cmp_str(Cmp c) {
    switch (c) {
        case Cmp::lt: return "lt";
        case Cmp::eq: return "eq";
        default: return "gt";
    }
}

// Position of (q_s, q_t) relative to the two break curves q_s*q_t = 1 and
// q_s = q_t.  The four open parameter regions are (lt/gt) x (lt/gt);
// the eq cases are the curves themselves.
struct Region {
    Cmp prod = Cmp::eq;  // q_s*q_t vs 1
    Cmp pair = Cmp::eq;  // q_s vs q_t

    friend bool operator==(const Region&, const Region&) = default;
};

// Deformation parameters.  Both must be strictly positive.
class Params {
public:
    Params(Rational qs, Rational qt) : qs_(std::move(qs)), qt_(std::move(qt)) {
        if (qs_.sign() <= 0 || qt_.sign() <= 0)
            throw std::invalid_argument("Params: q_s and q_t must be positive");
    }

    const Rational& qs() const { return qs_; }
    const Rational& qt() const { return qt_; }

    // c = (1+q_s)(1+q_t)
    Rational c_norm() const { return (Rational(1) + qs_) * (Rational(1) + qt_); }

    int sign_plus() const { return (Rational(1) - qs_ * qt_).sign(); }
    int sign_minus() const { return (qt_ - qs_).sign(); }

    Region region() const {
        return Region{cmp_of(qs_ * qt_, Rational(1)), cmp_of(qs_, qt_)};
    }

    // (sqrt(q_s), sqrt(q_t)) when both are squares of rationals.
    std::optional<std::pair<Rational, Rational>> square_roots() const {
        auto a = qs_.sqrt();
        auto b = qt_.sqrt();
        if (!a || !b) return std::nullopt;
        return std::make_pair(*a, *b);
    }

    std::string str() const { return "(" + qs_.str() + "," + qt_.str() + ")"; }

    friend bool operator==(const Params& a, const Params& b) {
        return a.qs_ == b.qs_ && a.qt_ == b.qt_;
    }

private:
    Rational qs_, qt_;
};

inline Rational q_gen(const Params& p, Gen g) { return g == Gen::s ? p.qs() : p.qt(); }

// q^w = q_s^(#s-letters) * q_t^(#t-letters)
inline Rational q_pow(const Word& w, const Params& p) {
    const LetterCounts lc = letter_counts(w);
    return p.qs().pow(lc.ns) * p.qt().pow(lc.nt);
}

}  // namespace heckedim
