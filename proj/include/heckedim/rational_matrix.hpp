#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckedim/rational.hpp"

namespace heckedim {

// Dense matrix over the rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMatrix transpose() const {
        RatMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

// Exact rank by Gaussian elimination.
inline std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = m.at(r, col).inv();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace heckedim
