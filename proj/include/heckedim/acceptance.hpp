#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heckedim/kernel_dim.hpp"
#include "heckedim/matrix_doc.hpp"
#include "heckedim/testgen.hpp"
#include "heckedim/verify.hpp"

namespace heckedim {

// Twenty rational parameter points covering all four open regions and both
// break curves.
inline std::vector<Params> acceptance_grid() {
    auto P = [](long a, long b, long c, long d) { return Params(Rational(a, b), Rational(c, d)); };
    return {P(1, 2, 1, 3), P(1, 3, 1, 2), P(2, 1, 3, 1), P(3, 1, 2, 1), P(1, 4, 2, 3),
            P(2, 3, 1, 4), P(5, 1, 2, 1), P(2, 1, 5, 1), P(1, 5, 1, 2), P(7, 2, 4, 3),
            P(1, 1, 1, 1), P(1, 2, 1, 2), P(2, 1, 2, 1), P(1, 3, 1, 3), P(3, 1, 3, 1),
            P(2, 1, 1, 2), P(1, 2, 2, 1), P(3, 1, 1, 3), P(1, 3, 3, 1), P(5, 2, 2, 5)};
}

namespace acceptance_detail {

inline HeckeMatrix mat1x1(const HeckeElem& e) {
    HeckeMatrix m(1, 1, e.basis());
    m.set(0, 0, e);
    return m;
}

inline HeckeElem one_minus_st() {
    HeckeElem e(HBasis::group);
    e.add_term(kIdentity, Rational(1));
    e.add_term(word_z(1), Rational(-1));
    return e;
}

inline HeckeElem one_plus_st() {
    HeckeElem e(HBasis::group);
    e.add_term(kIdentity, Rational(1));
    e.add_term(word_z(1), Rational(1));
    return e;
}

using detail::CheckAggregator;

// 1. The closed-form component dimensions, against the four-case formulas
// and the inverse-norm route, summing to one everywhere.
inline CheckResult criterion_dims() {
    CheckAggregator agg("C01 component dimensions");
    for (const Params& p : acceptance_grid()) {
        const KDims d = dims_of_K(p);
        const Rational c = (Rational(1) + p.qs()) * (Rational(1) + p.qt());
        agg.require(d.k_plus == (Rational(1) - p.qs() * p.qt()).abs() / c,
                    "K+ at " + p.str());
        agg.require(d.k_minus == (p.qt() - p.qs()).abs() / c, "K- at " + p.str());
        Rational expected_empty;
        const bool prod_le = p.qs() * p.qt() <= Rational(1);
        const bool pair_le = p.qs() <= p.qt();
        if (prod_le && pair_le) expected_empty = Rational(2) * p.qs() / (Rational(1) + p.qs());
        else if (prod_le) expected_empty = Rational(2) * p.qt() / (Rational(1) + p.qt());
        else if (pair_le) expected_empty = Rational(2) / (Rational(1) + p.qt());
        else expected_empty = Rational(2) / (Rational(1) + p.qs());
        agg.require(d.k_empty == expected_empty, "K_empty at " + p.str());
        agg.require(d.k_plus + d.k_minus + d.k_empty == Rational(1), "sum at " + p.str());
        const KappaSpec plus = kappa_plus_spec(p), minus = kappa_minus_spec(p);
        if (!plus.zero_vec)
            agg.require(d.k_plus == kappa_norm_sq(plus, p).inv(), "K+ vs norm at " + p.str());
        if (!minus.zero_vec)
            agg.require(d.k_minus == kappa_norm_sq(minus, p).inv(), "K- vs norm at " + p.str());
    }
    return agg.finish();
}

// 2. The three realization matrices hit the component dimensions exactly.
inline CheckResult criterion_realizations() {
    CheckAggregator agg("C02 realization matrices");
    const HeckeMatrix km = mat1x1(one_minus_st());
    const HeckeMatrix kp = mat1x1(one_plus_st());
    const HeckeMatrix zero = mat1x1(HeckeElem::zero(HBasis::group));
    for (const Params& p : acceptance_grid()) {
        const KDims d = dims_of_K(p);
        agg.require(dim_ker(km, p).dim == d.k_plus, "1-st at " + p.str());
        agg.require(dim_ker(kp, p).dim == d.k_minus, "1+st at " + p.str());
        agg.require(dim_ker(zero, p).dim == Rational(1), "zero at " + p.str());
    }
    return agg.finish();
}

// 3. Idempotent oracle: the kernel dimension of the averaging idempotents
// comes out as 1 - <e,1>_q, computed from the inner product and not from
// the (a,b,c) pipeline.
inline CheckResult criterion_idempotents() {
    CheckAggregator agg("C03 idempotent oracle");
    for (const Params& p : acceptance_grid()) {
        for (Gen g : {Gen::s, Gen::t}) {
            const HeckeElem e = idempotent_a(g, HBasis::group, p);
            const Rational oracle =
                Rational(1) - inner_product(e, HeckeElem::unit(HBasis::group), p);
            const Rational closed = q_gen(p, g) / (Rational(1) + q_gen(p, g));
            agg.require(oracle == closed, "oracle closed form at " + p.str());
            agg.require(dim_ker(mat1x1(e), p).dim == oracle,
                        std::string(g == Gen::s ? "a_s" : "a_t") + " at " + p.str());
        }
    }
    return agg.finish();
}

// 4. Dimension-group membership on random matrices in both bases.
inline CheckResult criterion_membership(std::mt19937_64& rng) {
    CheckAggregator agg("C04 dimension-group membership");
    for (int i = 0; i < 200; ++i) {
        const HeckeMatrix m = random_hecke_matrix(rng, 3, 2);
        for (int j = 0; j < 5; ++j) {
            const Params p = random_params(rng);
            const DimResult r = dim_ker(m, p);
            const std::string ctx = "matrix " + std::to_string(i) + " at " + p.str();
            agg.require(cert_eval(r.cert, p) == r.dim, "certificate, " + ctx);
            agg.require(r.dim.sign() >= 0 && r.dim <= Rational(static_cast<long>(m.rows())),
                        "range, " + ctx);
        }
    }
    return agg.finish();
}

// 5. Piecewise mode: constant counts per region and exact continuity at ten
// points on each break curve.
inline CheckResult criterion_piecewise(std::mt19937_64& rng) {
    CheckAggregator agg("C05 piecewise continuity");
    const std::vector<Rational> radii = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                         Rational(2, 3), Rational(3, 4), Rational(1),
                                         Rational(3, 2), Rational(2),    Rational(5, 2),
                                         Rational(3)};
    const std::vector<Params> extra = {Params(Rational(2, 7), Rational(3, 7)),
                                       Params(Rational(3, 7), Rational(2, 7)),
                                       Params(Rational(7, 3), Rational(7, 2)),
                                       Params(Rational(7, 2), Rational(7, 3))};
    for (int i = 0; i < 20; ++i) {
        const HeckeMatrix m = random_group_matrix(rng, 3, 2);
        const PiecewiseDim pw = dim_piecewise(m);
        const std::string ctx = "matrix " + std::to_string(i);
        // diagonal curve q_s = q_t
        for (const Rational& r : radii) {
            const Params p(r, r);
            const Cmp prod = p.region().prod;
            const Rational here = cert_eval(pw.cell(prod, Cmp::eq).cert, p);
            if (prod == Cmp::eq) {
                for (const PiecewiseCell& cell : pw.cells)
                    agg.require(cert_eval(cell.cert, p) == here, "center point, " + ctx);
            } else {
                agg.require(cert_eval(pw.cell(prod, Cmp::lt).cert, p) == here,
                            "diagonal lt side, " + ctx);
                agg.require(cert_eval(pw.cell(prod, Cmp::gt).cert, p) == here,
                            "diagonal gt side, " + ctx);
            }
        }
        // hyperbola q_s q_t = 1
        for (const Rational& r : radii) {
            const Params p(r, r.inv());
            const Cmp pair = p.region().pair;
            if (pair == Cmp::eq) continue;  // (1,1) already covered
            const Rational here = cert_eval(pw.cell(Cmp::eq, pair).cert, p);
            agg.require(cert_eval(pw.cell(Cmp::lt, pair).cert, p) == here,
                        "hyperbola lt side, " + ctx);
            agg.require(cert_eval(pw.cell(Cmp::gt, pair).cert, p) == here,
                        "hyperbola gt side, " + ctx);
        }
        // counts stay constant at a fresh sample in each open region
        for (const Params& p : extra) {
            const Region reg = p.region();
            agg.require(dim_ker(m, p).abc == pw.cell(reg.prod, reg.pair).abc,
                        "constancy, " + ctx + " at " + p.str());
        }
    }
    return agg.finish();
}

// 6. The evaluation oracle reproduces the fraction-free rank.
inline CheckResult criterion_rank_oracle(std::mt19937_64& rng) {
    CheckAggregator agg("C06 rank oracle");
    for (int i = 0; i < 100; ++i) {
        const LaurentMatrix m = random_laurent_matrix(rng, 4, 3);
        agg.require(rank_oracle_agrees(m, rng), "matrix " + std::to_string(i));
    }
    return agg.finish();
}

// 7. Eigenvector residuals at square-rational points, one per open region.
inline CheckResult criterion_residuals() {
    CheckAggregator agg("C07 eigen residuals");
    auto P = [](long a, long b, long c, long d) { return Params(Rational(a, b), Rational(c, d)); };
    const std::int64_t depth = 8;
    for (const Params& p : {P(1, 4, 1, 9), P(1, 9, 1, 4), P(4, 1, 9, 1), P(9, 1, 4, 1)}) {
        for (auto [kind, lambda] : detail::kappa_lambdas()) {
            const KappaSpec spec = kappa_spec(kind, p);
            const std::string ctx = (kind == KappaKind::plus ? "kappa+" : "kappa-") +
                                    std::string(" at ") + p.str();
            agg.require(eigen_residual_sq(spec, lambda, depth, p).is_zero(),
                        "zero residual, " + ctx);
            agg.require(eigen_residual_sq(spec, -lambda, depth, p) >= Rational(1, 4),
                        "flipped sign, " + ctx);
        }
    }
    return agg.finish();
}

// 8. Recurrence identities and orbit growth/decay.
inline CheckResult criterion_recurrences() {
    CheckAggregator agg("C08 recurrence identities");
    auto P = [](long a, long b, long c, long d) { return Params(Rational(a, b), Rational(c, d)); };
    for (const Params& p : {P(1, 4, 4, 9), P(9, 4, 4, 9)}) {
        for (const auto& [chi2, mu] : solution_pairs(p)) {
            const SolutionPairCheck c = check_solution_pair(p, chi2, mu);
            const std::string ctx = "chi2=" + chi2.str() + " mu=" + mu.str() + " at " + p.str();
            agg.require(c.data.det_ok, "det=1, " + ctx);
            agg.require(c.data.trace_ok, "traces equal, " + ctx);
            agg.require(c.char_ok, "characteristic, " + ctx);
            agg.require(c.init != SolutionPairCheck::Init::failed, "initial, " + ctx);
        }
        for (const Rational& mu : {Rational(0), Rational(1), Rational(-1)}) {
            const RecurrenceData rd = recurrence_data(p, mu);
            const std::string ctx = "mu=" + mu.str() + " at " + p.str();
            if (rd.chi && rd.chi->first != rd.chi->second && !rd.beta.is_zero()) {
                agg.require(divergence_check(rd.m_rec, chi_direction(rd, rd.chi->first), 50),
                            "chi1 direction grows, " + ctx);
                agg.require(!divergence_check(rd.m_rec, chi_direction(rd, rd.chi->second), 50),
                            "chi2 direction decays, " + ctx);
            } else {
                // repeated eigenvalue: no decaying direction at all
                agg.require(divergence_check(rd.m_rec, {Rational(1), Rational(0)}, 50),
                            "repeated eigenvalue non-decay, " + ctx);
            }
        }
    }
    agg.require(divergence_check(Mat2{Rational(1), Rational(1), Rational(0), Rational(1)},
                                 {Rational(0), Rational(1)}, 50),
                "jordan block +1");
    agg.require(divergence_check(Mat2{Rational(-1), Rational(1), Rational(0), Rational(-1)},
                                 {Rational(0), Rational(1)}, 50),
                "jordan block -1");
    return agg.finish();
}

// 9. Orthogonality identities and the decay of the cross inner product.
inline CheckResult criterion_orthogonality() {
    CheckAggregator agg("C09 orthogonality");
    for (const Params& p : acceptance_grid()) {
        const OrthReport rep = orthogonality_check(p, 8);
        agg.require(rep.s_identity_ok, "s identity at " + p.str());
        agg.require(rep.t_identity_ok, "t identity at " + p.str());
        agg.require(rep.dims_sum_ok, "dims sum at " + p.str());
    }
    const Params p(Rational(1, 4), Rational(1, 9));
    const OrthReport rep = orthogonality_check(p, 16);
    for (std::size_t n = 4; n + 1 < rep.cross_partials.size(); ++n)
        agg.require(rep.cross_partials[n + 1].abs() <= rep.cross_partials[n].abs(),
                    "monotone at depth " + std::to_string(n));
    agg.require(rep.cross_partials[16].abs() < Rational(1, 10000), "small at depth 16");
    return agg.finish();
}

// 10. Adjointness and the multiplicative structure on random elements.
inline CheckResult criterion_algebra(std::mt19937_64& rng) {
    CheckAggregator agg("C10 adjointness and algebra");
    for (int i = 0; i < 500; ++i) {
        const Params p = random_params(rng);
        const std::string ctx = "trial " + std::to_string(i) + " at " + p.str();
        const HeckeElem x = random_hecke_elem(rng, HBasis::tau);
        const HeckeElem y = random_hecke_elem(rng, HBasis::tau);
        for (Gen g : {Gen::s, Gen::t}) {
            for (const HeckeElem& op :
                 {HeckeElem::monomial(HBasis::tau, gen_word(g)), group_gen_in_tau(g, p)}) {
                agg.require(inner_product(hecke_mul(op, x, p), y, p) ==
                                inner_product(x, hecke_mul(op, y, p), p),
                            "left adjoint, " + ctx);
                agg.require(inner_product(hecke_mul(x, op, p), y, p) ==
                                inner_product(x, hecke_mul(y, op, p), p),
                            "right adjoint, " + ctx);
            }
        }
        // generator relations
        const HeckeElem ts = HeckeElem::monomial(HBasis::tau, kGenS);
        HeckeElem quad(HBasis::tau);
        quad.add_term(kGenS, p.qs() - Rational(1));
        quad.add_term(kIdentity, p.qs());
        agg.require(hecke_mul(ts, ts, p) == quad, "tau quadratic relation, " + ctx);
        const HeckeElem s_tau = group_gen_in_tau(Gen::s, p);
        agg.require(hecke_mul(s_tau, s_tau, p) == HeckeElem::unit(HBasis::tau),
                    "involution squares to one, " + ctx);
        // the basis map is an algebra map
        const HeckeElem u = random_hecke_elem(rng, HBasis::group, 2, 3);
        const HeckeElem v = random_hecke_elem(rng, HBasis::group, 2, 3);
        agg.require(convert_basis(group_mul(u, v), HBasis::tau, p) ==
                        hecke_mul(convert_basis(u, HBasis::tau, p),
                                  convert_basis(v, HBasis::tau, p), p),
                    "multiplicative conversion, " + ctx);
        agg.require(convert_basis(convert_basis(u, HBasis::tau, p), HBasis::group, p) == u,
                    "roundtrip conversion, " + ctx);
    }
    return agg.finish();
}

}  // namespace acceptance_detail

inline std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(acceptance_detail::criterion_dims());
    out.push_back(acceptance_detail::criterion_realizations());
    out.push_back(acceptance_detail::criterion_idempotents());
    out.push_back(acceptance_detail::criterion_membership(rng));
    out.push_back(acceptance_detail::criterion_piecewise(rng));
    out.push_back(acceptance_detail::criterion_rank_oracle(rng));
    out.push_back(acceptance_detail::criterion_residuals());
    out.push_back(acceptance_detail::criterion_recurrences());
    out.push_back(acceptance_detail::criterion_orthogonality());
    out.push_back(acceptance_detail::criterion_algebra(rng));
    return out;
}

}  // namespace heckedim
