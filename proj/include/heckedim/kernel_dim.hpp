#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckedim/gw.hpp"
#include "heckedim/kappa.hpp"

namespace heckedim {

// Von Neumann dimensions of the three summands of L2_q G for right
// multiplication by st: the +1 and -1 eigenspaces and their orthogonal
// complement.  They always sum to 1.
struct KDims {
    Rational k_plus, k_minus, k_empty;
};

inline KDims dims_of_K(const Params& p) {
    const Rational c = p.c_norm();
    KDims d;
    d.k_plus = (Rational(1) - p.qs() * p.qt()).abs() / c;
    d.k_minus = (p.qt() - p.qs()).abs() / c;
    const Region r = p.region();
    if (r.prod != Cmp::gt) {
        d.k_empty = r.pair != Cmp::gt
                        ? Rational(2) * p.qs() / (Rational(1) + p.qs())
                        : Rational(2) * p.qt() / (Rational(1) + p.qt());
    } else {
        d.k_empty = r.pair != Cmp::gt ? Rational(2) / (Rational(1) + p.qt())
                                      : Rational(2) / (Rational(1) + p.qs());
    }
    if (d.k_plus + d.k_minus + d.k_empty != Rational(1))
        throw std::logic_error("dims_of_K: component dimensions do not sum to 1");
    return d;
}

// Multiplicities of the three irreducible pieces in the kernel.
struct Abc {
    std::int64_t a = 0, b = 0, c = 0;

    friend bool operator==(const Abc&, const Abc&) = default;
};

// Certificate of membership in the dimension group: the integer triple of
// dim = alpha + beta/(1+q_s) + gamma/(1+q_t).
struct Cert {
    std::int64_t alpha = 0, beta = 0, gamma = 0;

    friend bool operator==(const Cert&, const Cert&) = default;
};

inline Rational cert_eval(const Cert& cert, const Params& p) {
    return Rational(cert.alpha) + Rational(cert.beta) / (Rational(1) + p.qs()) +
           Rational(cert.gamma) / (Rational(1) + p.qt());
}

namespace detail {

inline Cert cert_add(const Cert& x, const Cert& y, std::int64_t k) {
    return Cert{x.alpha + k * y.alpha, x.beta + k * y.beta, x.gamma + k * y.gamma};
}

// dim K_+ as an integer combination of 1, 1/(1+q_s), 1/(1+q_t):
//   (1 - q_s q_t)/c = 1/(1+q_s) + 1/(1+q_t) - 1.
// Zero triple on the curve itself, where the eigenspace vanishes.
inline Cert cert_k_plus(const Region& r) {
    switch (r.prod) {
        case Cmp::lt: return Cert{-1, 1, 1};
        case Cmp::gt: return Cert{1, -1, -1};
        default: return Cert{0, 0, 0};
    }
}

// dim K_- = |q_t - q_s|/c = +-(1/(1+q_s) - 1/(1+q_t)).
inline Cert cert_k_minus(const Region& r) {
    switch (r.pair) {
        case Cmp::lt: return Cert{0, 1, -1};
        case Cmp::gt: return Cert{0, -1, 1};
        default: return Cert{0, 0, 0};
    }
}

// Half of dim K_empty, region by region; the eq branches must match the
// branch choices in dims_of_K.
inline Cert cert_k_empty_half(const Region& r) {
    if (r.prod != Cmp::gt)
        return r.pair != Cmp::gt ? Cert{1, -1, 0} : Cert{1, 0, -1};
    return r.pair != Cmp::gt ? Cert{0, 0, 1} : Cert{0, 1, 0};
}

}  // namespace detail

inline Cert lambda_certificate(const Abc& abc, const Region& region) {
    Cert out{0, 0, 0};
    out = detail::cert_add(out, detail::cert_k_plus(region), abc.a);
    out = detail::cert_add(out, detail::cert_k_minus(region), abc.b);
    out = detail::cert_add(out, detail::cert_k_empty_half(region), abc.c);
    return out;
}

// Checked form: rejects a dimension that the certificate does not
// reproduce, which would indicate a bug upstream.
inline Cert lambda_certificate(const Rational& dim, const Params& p, const Abc& abc) {
    const Cert cert = lambda_certificate(abc, p.region());
    if (cert_eval(cert, p) != dim)
        throw std::logic_error("lambda_certificate: dimension not representable by (a,b,c)");
    return cert;
}

struct DimResult {
    std::size_t m = 0, n = 0;
    Region region;
    Abc abc;
    Rational dim;
    Cert cert;
};

// Main algorithm.  The kernel multiplicities are co-ranks:
//   a = m - rank A_plus, b = m - rank A_minus, c = 2m - rank M_empty,
// the last over the fraction field, and
//   dim = a dim K_+ + b dim K_- + (c/2) dim K_empty.
inline DimResult dim_ker(const HeckeMatrix& m, const Params& p) {
    const RWMatrix rw = split_gw(m, p);
    const Region region = p.region();
    const ComponentMatrices cm = component_matrices(rw, region);
    DimResult out;
    out.m = m.rows();
    out.n = m.cols();
    out.region = region;
    const auto mm = static_cast<std::int64_t>(m.rows());
    out.abc.a = mm - static_cast<std::int64_t>(rank(cm.a_plus));
    out.abc.b = mm - static_cast<std::int64_t>(rank(cm.a_minus));
    out.abc.c = 2 * mm - static_cast<std::int64_t>(rank_fraction_field(cm.m_empty));
    const KDims kd = dims_of_K(p);
    out.dim = Rational(out.abc.a) * kd.k_plus + Rational(out.abc.b) * kd.k_minus +
              Rational(out.abc.c) * kd.k_empty / Rational(2);
    out.cert = lambda_certificate(out.dim, p, out.abc);
    if (out.dim.sign() < 0 || out.dim > Rational(mm))
        throw std::logic_error("dim_ker: dimension out of [0, m]");
    return out;
}

// --- piecewise mode -------------------------------------------------------

// One cell of the parameter plane: an open region, a piece of a break
// curve, or the point (1,1).
struct PiecewiseCell {
    Region region;
    std::vector<Params> samples;
    Abc abc;
    Cert cert;
};

struct PiecewiseDim {
    std::array<PiecewiseCell, 9> cells;

    static std::size_t cell_index(Cmp prod, Cmp pair) {
        return static_cast<std::size_t>(prod) * 3 + static_cast<std::size_t>(pair);
    }

    const PiecewiseCell& cell(Cmp prod, Cmp pair) const { return cells[cell_index(prod, pair)]; }
};

namespace detail {

inline std::vector<Params> region_samples(Cmp prod, Cmp pair) {
    auto P = [](long a, long b, long c, long d) { return Params(Rational(a, b), Rational(c, d)); };
    if (prod == Cmp::lt && pair == Cmp::lt) return {P(1, 3, 1, 2), P(1, 4, 1, 2), P(2, 5, 3, 4)};
    if (prod == Cmp::lt && pair == Cmp::gt) return {P(1, 2, 1, 3), P(1, 2, 1, 4), P(3, 4, 2, 5)};
    if (prod == Cmp::gt && pair == Cmp::lt) return {P(2, 1, 3, 1), P(3, 2, 4, 1), P(2, 1, 5, 1)};
    if (prod == Cmp::gt && pair == Cmp::gt) return {P(3, 1, 2, 1), P(4, 1, 3, 2), P(5, 1, 2, 1)};
    if (prod == Cmp::eq && pair == Cmp::lt) return {P(1, 2, 2, 1), P(1, 3, 3, 1), P(2, 3, 3, 2)};
    if (prod == Cmp::eq && pair == Cmp::gt) return {P(2, 1, 1, 2), P(3, 1, 1, 3), P(3, 2, 2, 3)};
    if (prod == Cmp::lt && pair == Cmp::eq) return {P(1, 2, 1, 2), P(1, 3, 1, 3), P(3, 4, 3, 4)};
    if (prod == Cmp::gt && pair == Cmp::eq) return {P(2, 1, 2, 1), P(3, 1, 3, 1), P(3, 2, 3, 2)};
    return {P(1, 1, 1, 1)};
}

inline std::vector<Params> region_resamples(Cmp prod, Cmp pair) {
    auto P = [](long a, long b, long c, long d) { return Params(Rational(a, b), Rational(c, d)); };
    if (prod == Cmp::lt && pair == Cmp::lt) return {P(1, 5, 2, 3), P(3, 7, 1, 2)};
    if (prod == Cmp::lt && pair == Cmp::gt) return {P(2, 3, 1, 5), P(1, 2, 3, 7)};
    if (prod == Cmp::gt && pair == Cmp::lt) return {P(5, 2, 3, 1), P(3, 1, 7, 2)};
    if (prod == Cmp::gt && pair == Cmp::gt) return {P(3, 1, 5, 2), P(7, 2, 3, 1)};
    if (prod == Cmp::eq && pair == Cmp::lt) return {P(1, 4, 4, 1), P(2, 5, 5, 2)};
    if (prod == Cmp::eq && pair == Cmp::gt) return {P(4, 1, 1, 4), P(5, 2, 2, 5)};
    if (prod == Cmp::lt && pair == Cmp::eq) return {P(1, 4, 1, 4), P(2, 5, 2, 5)};
    if (prod == Cmp::gt && pair == Cmp::eq) return {P(4, 1, 4, 1), P(5, 2, 5, 2)};
    return {P(1, 1, 1, 1)};
}

// Open cells adjacent to a boundary cell, for the exact continuity check.
inline std::vector<Region> adjacent_open_cells(const Region& r) {
    std::vector<Region> out;
    const auto open = {Cmp::lt, Cmp::gt};
    if (r.prod == Cmp::eq && r.pair == Cmp::eq) {
        for (Cmp a : open)
            for (Cmp b : open) out.push_back(Region{a, b});
    } else if (r.prod == Cmp::eq) {
        for (Cmp a : open) out.push_back(Region{a, r.pair});
    } else if (r.pair == Cmp::eq) {
        for (Cmp b : open) out.push_back(Region{r.prod, b});
    }
    return out;
}

}  // namespace detail

// Computes (a,b,c) cell by cell over the nine cells of the parameter plane.
// For a fixed group-basis matrix the triple is constant on each cell; three
// samples per cell validate that, with a resample round before failing.
// The resulting closed forms are checked for exact continuity across every
// boundary cell.  Tau-basis input is rejected: its entries would describe a
// q-varying matrix for which region-constancy is not claimed.
inline PiecewiseDim dim_piecewise(const HeckeMatrix& m) {
    if (m.basis() != HBasis::group)
        throw std::invalid_argument("dim_piecewise: group-basis input required");
    PiecewiseDim out;
    for (Cmp prod : {Cmp::lt, Cmp::eq, Cmp::gt}) {
        for (Cmp pair : {Cmp::lt, Cmp::eq, Cmp::gt}) {
            PiecewiseCell cell;
            cell.region = Region{prod, pair};
            cell.samples = detail::region_samples(prod, pair);
            bool have = false;
            bool consistent = true;
            for (const Params& p : cell.samples) {
                if (p.region() != cell.region)
                    throw std::logic_error("dim_piecewise: sample point in wrong cell");
                const DimResult r = dim_ker(m, p);
                if (!have) {
                    cell.abc = r.abc;
                    cell.cert = r.cert;
                    have = true;
                } else if (r.abc != cell.abc) {
                    consistent = false;
                }
            }
            if (!consistent) {
                // Resample once before failing.  The counts are
                // sample-independent, so a persistent mismatch is a bug.
                for (const Params& p : detail::region_resamples(prod, pair))
                    consistent = dim_ker(m, p).abc == cell.abc && consistent;
                throw std::runtime_error(
                    std::string("dim_piecewise: (a,b,c) not constant on a region") +
                    (consistent ? " (resample agreed with the first sample)" : ""));
            }
            out.cells[PiecewiseDim::cell_index(prod, pair)] = std::move(cell);
        }
    }
    // Continuity across breaks: adjacent closed forms agree exactly at the
    // boundary sample points.
    for (const PiecewiseCell& cell : out.cells) {
        if (cell.region.prod != Cmp::eq && cell.region.pair != Cmp::eq) continue;
        for (const Region& nb : detail::adjacent_open_cells(cell.region)) {
            const PiecewiseCell& open = out.cell(nb.prod, nb.pair);
            for (const Params& p : cell.samples)
                if (cert_eval(open.cert, p) != cert_eval(cell.cert, p))
                    throw std::logic_error("dim_piecewise: discontinuity across a break curve");
        }
    }
    return out;
}

}  // namespace heckedim
