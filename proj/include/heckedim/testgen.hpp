#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "heckedim/gw.hpp"
#include "heckedim/hecke.hpp"
#include "heckedim/laurent_matrix.hpp"

namespace heckedim {

// Deterministic small-height random inputs for property checks.  All
// generators take the engine by reference; seeding is the caller's job.

inline std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num = 3,
                                std::int64_t max_den = 3) {
    const std::int64_t num = random_int(rng, -max_num, max_num);
    const std::int64_t den = random_int(rng, 1, max_den);
    return Rational(num, den);
}

inline Rational random_positive_rational(std::mt19937_64& rng, std::int64_t max_num = 4,
                                         std::int64_t max_den = 4) {
    return Rational(random_int(rng, 1, max_num), random_int(rng, 1, max_den));
}

// Positive parameter pair; boundary values (q_s = q_t or q_s q_t = 1) are
// drawn with the given per-mille chance to keep the curves covered.
inline Params random_params(std::mt19937_64& rng, int boundary_permille = 250) {
    const Rational qs = random_positive_rational(rng);
    if (random_int(rng, 0, 999) < boundary_permille) {
        return random_int(rng, 0, 1) == 0 ? Params(qs, qs) : Params(qs, qs.inv());
    }
    return Params(qs, random_positive_rational(rng));
}

inline Word random_word(std::mt19937_64& rng, std::int64_t max_len) {
    const std::int64_t len = random_int(rng, 0, max_len);
    if (len == 0) return kIdentity;
    const bool from_s = random_int(rng, 0, 1) == 0;
    if (len % 2 == 0) return word_z(from_s ? len / 2 : -len / 2);
    return from_s ? Word{(len - 1) / 2, true} : Word{-(len + 1) / 2, true};
}

inline HeckeElem random_hecke_elem(std::mt19937_64& rng, HBasis basis,
                                   std::int64_t max_len = 3, std::int64_t max_terms = 4) {
    HeckeElem out(basis);
    const std::int64_t terms = random_int(rng, 0, max_terms);
    for (std::int64_t i = 0; i < terms; ++i)
        out.add_term(random_word(rng, max_len), random_rational(rng));
    return out;
}

inline HeckeMatrix random_hecke_matrix(std::mt19937_64& rng, std::size_t max_size = 3,
                                       std::int64_t max_len = 2) {
    const HBasis basis = random_int(rng, 0, 1) == 0 ? HBasis::group : HBasis::tau;
    const auto rows = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    const auto cols = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    HeckeMatrix m(rows, cols, basis);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, random_hecke_elem(rng, basis, max_len, 3));
    return m;
}

inline HeckeMatrix random_group_matrix(std::mt19937_64& rng, std::size_t max_size = 3,
                                       std::int64_t max_len = 2) {
    const auto rows = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    const auto cols = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    HeckeMatrix m(rows, cols, HBasis::group);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, random_hecke_elem(rng, HBasis::group, max_len, 3));
    return m;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, std::int64_t max_deg = 3,
                                  std::int64_t max_terms = 3) {
    LaurentPoly f;
    const std::int64_t terms = random_int(rng, 0, max_terms);
    for (std::int64_t i = 0; i < terms; ++i)
        f.add_term(random_int(rng, -max_deg, max_deg), random_rational(rng));
    return f;
}

// Random Laurent matrix; with some probability a row is overwritten by a
// monomial multiple of another so rank-deficient cases are exercised.
inline LaurentMatrix random_laurent_matrix(std::mt19937_64& rng, std::size_t max_size = 4,
                                           std::int64_t max_deg = 3) {
    const auto rows = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    const auto cols = static_cast<std::size_t>(random_int(rng, 1, static_cast<std::int64_t>(max_size)));
    LaurentMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_laurent(rng, max_deg);
    if (rows >= 2 && random_int(rng, 0, 2) == 0) {
        const auto dst = static_cast<std::size_t>(random_int(rng, 0, static_cast<std::int64_t>(rows) - 1));
        auto src = static_cast<std::size_t>(random_int(rng, 0, static_cast<std::int64_t>(rows) - 1));
        if (src == dst) src = (src + 1) % rows;
        const LaurentPoly factor =
            LaurentPoly::monomial(random_int(rng, -1, 1), random_rational(rng, 2, 2));
        for (std::size_t j = 0; j < cols; ++j) m.at(dst, j) = factor * m.at(src, j);
    }
    return m;
}

}  // namespace heckedim
