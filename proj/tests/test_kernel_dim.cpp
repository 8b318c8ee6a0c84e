#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heckedim/acceptance.hpp"
#include "heckedim/kernel_dim.hpp"
#include "heckedim/testgen.hpp"

using namespace heckedim;

namespace {

HeckeMatrix mat1x1(const HeckeElem& e) {
    HeckeMatrix m(1, 1, e.basis());
    m.set(0, 0, e);
    return m;
}

HeckeElem grp(const Word& w, const Rational& c = Rational(1)) {
    return HeckeElem::monomial(HBasis::group, w, c);
}

LaurentPoly lp(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
    LaurentPoly f;
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

}  // namespace

TEST_CASE("coset splitting") {
    const Params p(Rational(1, 2), Rational(1, 3));
    CHECK(gw_from_group_elem(grp(kGenS)) == GWElem{LaurentPoly{}, LaurentPoly::one()});
    CHECK(gw_from_group_elem(grp(kGenT)) ==
          GWElem{LaurentPoly{}, LaurentPoly::monomial(-1, Rational(1))});  // t = z^-1 s
    CHECK(gw_from_group_elem(grp(kIdentity) + grp(word_z(1))) ==
          GWElem{lp({{0, Rational(1)}, {1, Rational(1)}}), LaurentPoly{}});

    SECTION("splitting respects multiplication") {
        std::mt19937_64 rng(79);
        for (int i = 0; i < 200; ++i) {
            const HeckeElem x = random_hecke_elem(rng, HBasis::group);
            const HeckeElem y = random_hecke_elem(rng, HBasis::group);
            CHECK(gw_mul(gw_from_group_elem(x), gw_from_group_elem(y)) ==
                  gw_from_group_elem(group_mul(x, y)));
            CHECK(gw_to_group_elem(gw_from_group_elem(x)) == x);
        }
    }

    SECTION("tau input converts first") {
        HeckeMatrix m(1, 1, HBasis::tau);
        m.set(0, 0, HeckeElem::monomial(HBasis::tau, kGenS));
        const RWMatrix rw = split_gw(m, Params(Rational(3), Rational(1)));
        // tau_s = 1 + 2s at q_s = 3
        CHECK(rw.at(0, 0) == GWElem{LaurentPoly::one(), lp({{0, Rational(2)}})});
        CHECK(rw.source_basis == HBasis::tau);
    }
}

TEST_CASE("component matrices") {
    SECTION("1 - st") {
        const RWMatrix rw =
            split_gw(acceptance_detail::mat1x1(acceptance_detail::one_minus_st()),
                     Params(Rational(1, 2), Rational(1, 3)));
        const ComponentMatrices cm = component_matrices(rw, Region{Cmp::lt, Cmp::gt});
        CHECK(cm.a_plus.at(0, 0) == Rational(0));
        CHECK(cm.a_minus.at(0, 0) == Rational(2));
        LaurentMatrix expected(2, 2);
        expected.at(0, 0) = lp({{0, Rational(1)}, {1, Rational(-1)}});
        expected.at(1, 1) = lp({{0, Rational(1)}, {-1, Rational(-1)}});
        CHECK(cm.m_empty == expected);
    }

    SECTION("averaging idempotent below the hyperbola") {
        const Params p(Rational(1, 3), Rational(1, 2));
        const RWMatrix rw = split_gw(mat1x1(idempotent_a(Gen::s, HBasis::group, p)), p);
        const ComponentMatrices cm = component_matrices(rw, p.region());
        CHECK(cm.a_plus.at(0, 0) == Rational(1));
        LaurentMatrix expected(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) expected.at(i, j) = lp({{0, Rational(1, 2)}});
        CHECK(cm.m_empty == expected);
    }

    SECTION("s above the hyperbola") {
        const Params p(Rational(2), Rational(3));
        const ComponentMatrices cm =
            component_matrices(split_gw(mat1x1(grp(kGenS)), p), p.region());
        CHECK(cm.a_plus.at(0, 0) == Rational(-1));
        CHECK_FALSE(p.region().prod == Cmp::eq);
        CHECK(cm.plus_relevant);
    }

    SECTION("boundary regions flag the irrelevant sign") {
        const Params p(Rational(2), Rational(1, 2));
        const ComponentMatrices cm =
            component_matrices(split_gw(mat1x1(grp(kGenS)), p), p.region());
        CHECK_FALSE(cm.plus_relevant);
        CHECK(cm.minus_relevant);
    }
}

TEST_CASE("component dimensions") {
    const KDims d = dims_of_K(Params(Rational(1, 2), Rational(1, 3)));
    CHECK(d.k_plus == Rational(5, 12));
    CHECK(d.k_minus == Rational(1, 12));
    CHECK(d.k_empty == Rational(1, 2));

    const KDims center = dims_of_K(Params(Rational(1), Rational(1)));
    CHECK(center.k_plus == Rational(0));
    CHECK(center.k_minus == Rational(0));
    CHECK(center.k_empty == Rational(1));

    const KDims above = dims_of_K(Params(Rational(2), Rational(2)));
    CHECK(above.k_plus == Rational(1, 3));
    CHECK(above.k_minus == Rational(0));
    CHECK(above.k_empty == Rational(2, 3));

    for (const Params& p : acceptance_grid()) {
        const KDims kd = dims_of_K(p);
        CHECK(kd.k_plus + kd.k_minus + kd.k_empty == Rational(1));
        CHECK(kd.k_plus.sign() >= 0);
        CHECK(kd.k_minus.sign() >= 0);
        CHECK(kd.k_empty.sign() > 0);
    }
}

TEST_CASE("kernel dimensions of the basic matrices") {
    const HeckeMatrix zero = mat1x1(HeckeElem::zero(HBasis::group));
    for (const Params& p : acceptance_grid()) {
        const DimResult r = dim_ker(zero, p);
        CHECK(r.dim == Rational(1));
        CHECK(r.abc == Abc{1, 1, 2});
    }

    SECTION("zero matrices of every shape have full kernel") {
        const Params p(Rational(2, 3), Rational(5, 4));
        for (std::size_t rows : {1u, 2u, 3u})
            for (std::size_t cols : {1u, 2u, 4u})
                CHECK(dim_ker(HeckeMatrix(rows, cols, HBasis::group), p).dim ==
                      Rational(static_cast<long>(rows)));
    }

    const Params p(Rational(1, 2), Rational(1, 3));
    const DimResult km = dim_ker(acceptance_detail::mat1x1(acceptance_detail::one_minus_st()), p);
    CHECK(km.dim == Rational(5, 12));
    CHECK(km.abc == Abc{1, 0, 0});
    CHECK(km.cert == Cert{-1, 1, 1});

    SECTION("1 + st realizes the minus component") {
        for (const Params& q : acceptance_grid())
            CHECK(dim_ker(acceptance_detail::mat1x1(acceptance_detail::one_plus_st()), q).dim ==
                  dims_of_K(q).k_minus);
    }
}

TEST_CASE("idempotent kernels across the whole grid") {
    // dim ker [e] = 1 - <e,1>_q for a self-adjoint idempotent e; the right
    // side does not go through the (a,b,c) pipeline.
    for (const Params& p : acceptance_grid()) {
        for (Gen g : {Gen::s, Gen::t}) {
            const HeckeElem a = idempotent_a(g, HBasis::group, p);
            const HeckeElem h = idempotent_h(g, HBasis::group, p);
            const Rational qa =
                Rational(1) - inner_product(a, HeckeElem::unit(HBasis::group), p);
            const Rational qh =
                Rational(1) - inner_product(h, HeckeElem::unit(HBasis::group), p);
            CHECK(dim_ker(mat1x1(a), p).dim == qa);
            CHECK(dim_ker(mat1x1(h), p).dim == qh);
            CHECK(qa == q_gen(p, g) / (Rational(1) + q_gen(p, g)));
            CHECK(qa + qh == Rational(1));
        }
    }
}

TEST_CASE("dimension bounds and component sum") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 60; ++i) {
        const HeckeMatrix m = random_hecke_matrix(rng);
        const Params p = random_params(rng);
        const DimResult r = dim_ker(m, p);
        CHECK(r.dim.sign() >= 0);
        CHECK(r.dim <= Rational(static_cast<long>(m.rows())));
        const KDims kd = dims_of_K(p);
        CHECK(r.dim == Rational(r.abc.a) * kd.k_plus + Rational(r.abc.b) * kd.k_minus +
                           Rational(r.abc.c) * kd.k_empty / Rational(2));
        CHECK(cert_eval(r.cert, p) == r.dim);
    }
}

TEST_CASE("diagonal matrices decompose") {
    // the kernel of diag(y_1, ..., y_m) splits, so its dimension is the sum
    // of the 1x1 dimensions
    std::mt19937_64 rng(101);
    for (int i = 0; i < 40; ++i) {
        const Params p = random_params(rng);
        const std::size_t n = static_cast<std::size_t>(random_int(rng, 1, 3));
        HeckeMatrix diag(n, n, HBasis::group);
        Rational expected(0);
        for (std::size_t k = 0; k < n; ++k) {
            const HeckeElem y = random_hecke_elem(rng, HBasis::group);
            diag.set(k, k, y);
            expected += dim_ker(mat1x1(y), p).dim;
        }
        CHECK(dim_ker(diag, p).dim == expected);
    }
}

TEST_CASE("stacking invariance") {
    std::mt19937_64 rng(89);
    for (int i = 0; i < 40; ++i) {
        const HeckeMatrix m = random_hecke_matrix(rng, 2, 2);
        const Params p = random_params(rng);
        const DimResult base = dim_ker(m, p);

        HeckeMatrix with_row(m.rows() + 1, m.cols(), m.basis());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) with_row.set(r, c, m.at(r, c));
        CHECK(dim_ker(with_row, p).dim == base.dim + Rational(1));

        HeckeMatrix with_col(m.rows(), m.cols() + 1, m.basis());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) with_col.set(r, c, m.at(r, c));
        CHECK(dim_ker(with_col, p).dim == base.dim);
    }
}

TEST_CASE("unit invariance") {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 40; ++i) {
        const HeckeMatrix m = random_group_matrix(rng, 2, 2);
        const Params p = random_params(rng);
        const Abc base = dim_ker(m, p).abc;

        // right-multiply by z^k times the identity
        const std::int64_t k = random_int(rng, -2, 2);
        HeckeMatrix scaled(m.rows(), m.cols(), HBasis::group);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                scaled.set(r, c, group_mul(m.at(r, c), grp(word_z(k))));
        CHECK(dim_ker(scaled, p).abc == base);

        // permute rows and columns (reverse both)
        HeckeMatrix permuted(m.rows(), m.cols(), HBasis::group);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                permuted.set(m.rows() - 1 - r, m.cols() - 1 - c, m.at(r, c));
        CHECK(dim_ker(permuted, p).abc == base);
    }
}

TEST_CASE("certificates") {
    CHECK(lambda_certificate(Abc{1, 0, 0}, Region{Cmp::lt, Cmp::lt}) == Cert{-1, 1, 1});
    CHECK(lambda_certificate(Abc{0, 0, 1}, Region{Cmp::lt, Cmp::lt}) == Cert{1, -1, 0});
    CHECK(lambda_certificate(Abc{1, 1, 2}, Region{Cmp::lt, Cmp::lt}) == Cert{1, 0, 0});

    const Params p(Rational(1, 3), Rational(1, 2));
    CHECK(cert_eval(Cert{1, -1, 0}, p) == p.qs() / (Rational(1) + p.qs()));
    CHECK(lambda_certificate(p.qs() / (Rational(1) + p.qs()), p, Abc{0, 0, 1}) ==
          Cert{1, -1, 0});
    CHECK_THROWS_AS(lambda_certificate(Rational(1, 7), p, Abc{0, 0, 1}), std::logic_error);
}

TEST_CASE("piecewise closed forms") {
    SECTION("kernel of 1 - st") {
        const PiecewiseDim pw =
            dim_piecewise(acceptance_detail::mat1x1(acceptance_detail::one_minus_st()));
        CHECK(pw.cell(Cmp::lt, Cmp::lt).cert == Cert{-1, 1, 1});
        CHECK(pw.cell(Cmp::gt, Cmp::gt).cert == Cert{1, -1, -1});
        CHECK(pw.cell(Cmp::eq, Cmp::lt).cert == Cert{0, 0, 0});
        for (const PiecewiseCell& cell : pw.cells) CHECK(cell.abc.a == 1);
    }

    SECTION("averaging idempotent has one global expression") {
        const Params any(Rational(1), Rational(1));
        const PiecewiseDim pw =
            dim_piecewise(mat1x1(idempotent_a(Gen::s, HBasis::group, any)));
        for (const PiecewiseCell& cell : pw.cells) CHECK(cell.cert == Cert{1, -1, 0});
        // the counts themselves move between regions
        CHECK(pw.cell(Cmp::lt, Cmp::lt).abc == Abc{0, 0, 1});
        CHECK(pw.cell(Cmp::gt, Cmp::gt).abc == Abc{1, 1, 1});
    }

    SECTION("zero matrix is constant one") {
        const PiecewiseDim pw = dim_piecewise(mat1x1(HeckeElem::zero(HBasis::group)));
        for (Cmp prod : {Cmp::lt, Cmp::gt})
            for (Cmp pair : {Cmp::lt, Cmp::gt})
                CHECK(pw.cell(prod, pair).cert == Cert{1, 0, 0});
        // boundary-cell triples drop the vanishing components, so only the
        // certified value is canonical there
        for (const PiecewiseCell& cell : pw.cells) {
            CHECK(cell.abc == Abc{1, 1, 2});
            for (const Params& p : cell.samples)
                CHECK(cert_eval(cell.cert, p) == Rational(1));
        }
    }

    SECTION("tau input is rejected") {
        HeckeMatrix m(1, 1, HBasis::tau);
        m.set(0, 0, HeckeElem::monomial(HBasis::tau, kGenS));
        CHECK_THROWS_AS(dim_piecewise(m), std::invalid_argument);
    }
}
