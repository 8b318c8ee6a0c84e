#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "heckedim/hecke.hpp"
#include "heckedim/laurent_matrix.hpp"
#include "heckedim/laurent.hpp"

namespace heckedim {

// Normal form y = y1(z) + y2(z) s of an element of RW, with z = st.
// Multiplication uses f(z) s = s f(z^-1):
//   (y1 + y2 s)(u1 + u2 s) = (y1 u1 + y2 bar(u2)) + (y1 u2 + y2 bar(u1)) s.
struct GWElem {
    LaurentPoly y1, y2;

    friend bool operator==(const GWElem&, const GWElem&) = default;
};

inline GWElem gw_mul(const GWElem& a, const GWElem& b) {
    return GWElem{a.y1 * b.y1 + a.y2 * b.y2.bar(), a.y1 * b.y2 + a.y2 * b.y1.bar()};
}

inline GWElem gw_add(const GWElem& a, const GWElem& b) {
    return GWElem{a.y1 + b.y1, a.y2 + b.y2};
}

// Split a group-basis element along the coset decomposition W = G u Gs:
// w = z^n contributes to y1, w = z^n s to y2.
inline GWElem gw_from_group_elem(const HeckeElem& x) {
    if (x.basis() != HBasis::group)
        throw std::invalid_argument("gw_from_group_elem: group basis required");
    GWElem out;
    for (const auto& [w, c] : x.coeffs()) {
        if (w.refl)
            out.y2.add_term(w.n, c);
        else
            out.y1.add_term(w.n, c);
    }
    return out;
}

inline HeckeElem gw_to_group_elem(const GWElem& g) {
    HeckeElem out(HBasis::group);
    for (const auto& [e, c] : g.y1.coeffs()) out.add_term(Word{e, false}, c);
    for (const auto& [e, c] : g.y2.coeffs()) out.add_term(Word{e, true}, c);
    return out;
}

// Matrix over RW, entries tagged with a common basis.
class HeckeMatrix {
public:
    HeckeMatrix(std::size_t rows, std::size_t cols, HBasis basis)
        : rows_(rows), cols_(cols), basis_(basis),
          e_(rows * cols, HeckeElem::zero(basis)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    HBasis basis() const { return basis_; }

    HeckeElem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const HeckeElem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, HeckeElem v) {
        if (v.basis() != basis_)
            throw std::invalid_argument("HeckeMatrix: entry basis mismatch");
        e_[i * cols_ + j] = std::move(v);
    }

private:
    std::size_t rows_, cols_;
    HBasis basis_;
    std::vector<HeckeElem> e_;
};

// Matrix over RW in GW normal form, remembering which basis it came from.
struct RWMatrix {
    std::size_t rows = 0, cols = 0;
    HBasis source_basis = HBasis::group;
    std::vector<GWElem> e;

    GWElem& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const GWElem& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

// Rewrites every entry in GW normal form; tau-basis input is first
// converted to the group basis at the given parameters.
inline RWMatrix split_gw(const HeckeMatrix& m, const Params& p) {
    RWMatrix out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.source_basis = m.basis();
    out.e.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = gw_from_group_elem(
                convert_basis(m.at(i, j), HBasis::group, p));
    return out;
}

// Scalar actions on the one-dimensional eigenspaces plus the block matrix
// acting on K_empty^2m:
//   A_plus[i][j]  = y1(1)  + sigma1 * y2(1),   sigma1 from q_s q_t vs 1,
//   A_minus[i][j] = y1(-1) + sigma2 * y2(-1),  sigma2 from q_s vs q_t,
//   M_empty = [[Y1(z), Y2(z)], [Y2(z^-1), Y1(z^-1)]].
// On a boundary curve the corresponding sign is taken +1; the flag records
// that the eigenspace there is zero, so the choice cannot be observed.
struct ComponentMatrices {
    RatMatrix a_plus, a_minus;
    LaurentMatrix m_empty;
    bool plus_relevant = true, minus_relevant = true;
};

inline ComponentMatrices component_matrices(const RWMatrix& m, const Region& region) {
    const std::size_t rows = m.rows, cols = m.cols;
    ComponentMatrices out;
    out.a_plus = RatMatrix(rows, cols);
    out.a_minus = RatMatrix(rows, cols);
    out.m_empty = LaurentMatrix(2 * rows, 2 * cols);
    out.plus_relevant = region.prod != Cmp::eq;
    out.minus_relevant = region.pair != Cmp::eq;
    const Rational sigma1 = region.prod == Cmp::gt ? Rational(-1) : Rational(1);
    const Rational sigma2 = region.pair == Cmp::gt ? Rational(-1) : Rational(1);
    const Rational one(1), minus_one(-1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const GWElem& g = m.at(i, j);
            out.a_plus.at(i, j) = g.y1.eval(one) + sigma1 * g.y2.eval(one);
            out.a_minus.at(i, j) = g.y1.eval(minus_one) + sigma2 * g.y2.eval(minus_one);
            out.m_empty.at(i, j) = g.y1;
            out.m_empty.at(i, cols + j) = g.y2;
            out.m_empty.at(rows + i, j) = g.y2.bar();
            out.m_empty.at(rows + i, cols + j) = g.y1.bar();
        }
    }
    return out;
}

}  // namespace heckedim
