#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "heckedim/laurent.hpp"
#include "heckedim/rational_matrix.hpp"

namespace heckedim {

// Rectangular matrix of Laurent polynomials.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static LaurentMatrix identity(std::size_t n) {
        LaurentMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    LaurentPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    LaurentMatrix transpose() const {
        LaurentMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    RatMatrix eval(const Rational& point) const {
        RatMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(point);
        return out;
    }

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> e_;
};

// Rank over the field of rational functions Q(z).
//
// Each row is first multiplied by a power of z (a unit, so rank is
// preserved) to clear negative exponents, then fraction-free Bareiss
// elimination runs over Q[z].  Every division below is exact by the
// Sylvester determinant identity; an inexact division would be a bug and
// laurent_exact_div throws on it.  Pivots are chosen of lowest degree in
// the current column, ties broken by row index.
inline std::size_t rank_fraction_field(LaurentMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t min_exp = 0;
        bool any = false;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            const std::int64_t me = m.at(i, j).min_exp();
            min_exp = any ? std::min(min_exp, me) : me;
            any = true;
        }
        if (any && min_exp != 0)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = m.at(i, j).shifted(-min_exp);
    }

    std::size_t r = 0;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        std::int64_t piv_deg = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const std::int64_t deg = m.at(i, col).max_exp() - m.at(i, col).min_exp();
            if (piv == rows || deg < piv_deg) {
                piv = i;
                piv_deg = deg;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const LaurentPoly pivot = m.at(r, col);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const LaurentPoly head = m.at(i, col);
            for (std::size_t j = col + 1; j < cols; ++j)
                m.at(i, j) = laurent_exact_div(pivot * m.at(i, j) - head * m.at(r, j), prev);
            m.at(i, col) = LaurentPoly{};
        }
        prev = pivot;
        ++r;
    }
    return r;
}

// Maximum rank of the matrix evaluated at the given nonzero points.  A
// lower bound for rank_fraction_field; equal except at roots of the
// relevant minors, so random points almost surely achieve equality.
inline std::size_t rank_by_evaluation(const LaurentMatrix& m,
                                      std::span<const Rational> points) {
    if (points.empty()) throw std::invalid_argument("rank_by_evaluation: no points");
    std::size_t best = 0;
    for (const Rational& pt : points) best = std::max(best, rank(m.eval(pt)));
    return best;
}

// Small-height evaluation points keep the exact arithmetic cheap.
inline const std::vector<Rational>& eval_point_pool() {
    static const std::vector<Rational> pool = {
        Rational(1),  Rational(-1),  Rational(2),  Rational(-2),
        Rational(3),  Rational(-3),  Rational(5),  Rational(-5),
        Rational(7),  Rational(-7),  Rational(1, 2), Rational(-1, 2),
        Rational(1, 3), Rational(-1, 3)};
    return pool;
}

// Draws `count` distinct points from the pool, preferring points not in
// `seen`; falls back to re-using seen points when the pool runs dry.
inline std::vector<Rational> draw_eval_points(std::mt19937_64& rng, std::size_t count,
                                              std::vector<Rational>& seen) {
    const auto& pool = eval_point_pool();
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Rational> out;
    for (std::size_t i : idx) {
        if (out.size() == count) break;
        if (std::find(seen.begin(), seen.end(), pool[i]) != seen.end()) continue;
        out.push_back(pool[i]);
    }
    for (std::size_t i : idx) {
        if (out.size() == count) break;
        if (std::find(out.begin(), out.end(), pool[i]) != out.end()) continue;
        out.push_back(pool[i]);
    }
    seen.insert(seen.end(), out.begin(), out.end());
    return out;
}

// Evaluation-oracle protocol: up to `draws` draws of `points_per_draw`
// points each; agreement on any draw confirms the fraction-free rank.
inline bool rank_oracle_agrees(const LaurentMatrix& m, std::mt19937_64& rng,
                               std::size_t draws = 3, std::size_t points_per_draw = 5) {
    const std::size_t exact = rank_fraction_field(m);
    std::vector<Rational> seen;
    for (std::size_t d = 0; d < draws; ++d) {
        const auto pts = draw_eval_points(rng, points_per_draw, seen);
        const std::size_t approx = rank_by_evaluation(m, pts);
        if (approx > exact) throw std::logic_error("rank oracle exceeded exact rank");
        if (approx == exact) return true;
    }
    return false;
}

}  // namespace heckedim
