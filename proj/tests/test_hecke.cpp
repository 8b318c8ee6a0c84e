#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heckedim/hecke.hpp"
#include "heckedim/testgen.hpp"

using namespace heckedim;

namespace {

HeckeElem tau(const Word& w, const Rational& c = Rational(1)) {
    return HeckeElem::monomial(HBasis::tau, w, c);
}

HeckeElem grp(const Word& w, const Rational& c = Rational(1)) {
    return HeckeElem::monomial(HBasis::group, w, c);
}

}  // namespace

TEST_CASE("tau multiplication rules") {
    const Params p(Rational(2), Rational(3));
    // tau_s^2 = (q_s - 1) tau_s + q_s
    CHECK(hecke_mul(tau(kGenS), tau(kGenS), p) == tau(kGenS) + tau(kIdentity, Rational(2)));
    // ascending product
    CHECK(hecke_mul(tau(kGenS), tau(kGenT), p) == tau(word_z(1)));
    // right rule with q_t = 3: tau_{st} tau_t = 2 tau_{st} + 3 tau_s
    CHECK(hecke_mul(tau(word_z(1)), tau(kGenT), p) ==
          tau(word_z(1), Rational(2)) + tau(kGenS, Rational(3)));

    SECTION("mixed bases rejected") {
        CHECK_THROWS_AS(hecke_mul(tau(kGenS), grp(kGenS), p), std::invalid_argument);
        CHECK_THROWS_AS(group_mul(grp(kGenS), tau(kGenS)), std::invalid_argument);
        CHECK_THROWS_AS(grp(kGenS) + tau(kGenS), std::invalid_argument);
    }

    SECTION("associativity on random elements") {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 100; ++i) {
            const Params q = random_params(rng);
            const HeckeElem a = random_hecke_elem(rng, HBasis::tau);
            const HeckeElem b = random_hecke_elem(rng, HBasis::tau);
            const HeckeElem c = random_hecke_elem(rng, HBasis::tau);
            CHECK(hecke_mul(hecke_mul(a, b, q), c, q) == hecke_mul(a, hecke_mul(b, c, q), q));
        }
    }
}

TEST_CASE("group convolution") {
    CHECK(group_mul(grp(kGenS), grp(kGenS)) == HeckeElem::unit(HBasis::group));
    const HeckeElem one_plus_s = grp(kIdentity) + grp(kGenS);
    const HeckeElem one_minus_s = grp(kIdentity) - grp(kGenS);
    CHECK(group_mul(one_plus_s, one_minus_s).is_zero());
    CHECK(group_mul(grp(word_z(1)), grp(kGenT)) == grp(kGenS));  // (st)t = s
}

TEST_CASE("basis conversion") {
    const Params p(Rational(3), Rational(5));
    // s = (1-q_s)/(1+q_s) + 2/(1+q_s) tau_s at q_s = 3
    CHECK(convert_basis(grp(kGenS), HBasis::tau, p) ==
          tau(kIdentity, Rational(-1, 2)) + tau(kGenS, Rational(1, 2)));
    // tau_s = (q_s-1)/2 + (q_s+1)/2 s at q_s = 3
    CHECK(convert_basis(tau(kGenS), HBasis::group, p) ==
          grp(kIdentity) + grp(kGenS, Rational(2)));

    SECTION("roundtrip is the identity") {
        const HeckeElem x = grp(kGenS) + grp(kGenT, Rational(2)) + grp(word_z(1));
        CHECK(convert_basis(convert_basis(x, HBasis::tau, p), HBasis::group, p) == x);

        std::mt19937_64 rng(43);
        for (int i = 0; i < 100; ++i) {
            const Params q = random_params(rng);
            const HeckeElem y = random_hecke_elem(rng, HBasis::group);
            CHECK(convert_basis(convert_basis(y, HBasis::tau, q), HBasis::group, q) == y);
            const HeckeElem z = random_hecke_elem(rng, HBasis::tau);
            CHECK(convert_basis(convert_basis(z, HBasis::group, q), HBasis::tau, q) == z);
        }
    }

    SECTION("conversion is an algebra map") {
        std::mt19937_64 rng(47);
        for (int i = 0; i < 100; ++i) {
            const Params q = random_params(rng);
            const HeckeElem u = random_hecke_elem(rng, HBasis::group, 2, 3);
            const HeckeElem v = random_hecke_elem(rng, HBasis::group, 2, 3);
            CHECK(convert_basis(group_mul(u, v), HBasis::tau, q) ==
                  hecke_mul(convert_basis(u, HBasis::tau, q), convert_basis(v, HBasis::tau, q),
                            q));
        }
    }

    SECTION("converted involution squares to one") {
        const HeckeElem s_tau = convert_basis(grp(kGenS), HBasis::tau, p);
        CHECK(hecke_mul(s_tau, s_tau, p) == HeckeElem::unit(HBasis::tau));
    }
}

TEST_CASE("inner product") {
    const Params p(Rational(1, 2), Rational(1, 3));
    CHECK(inner_product(tau(word_z(1)), tau(word_z(1)), p) == Rational(1, 6));
    CHECK(inner_product(HeckeElem::unit(HBasis::tau), HeckeElem::unit(HBasis::tau), p) ==
          Rational(1));
    CHECK(inner_product(grp(kGenS), HeckeElem::unit(HBasis::group), p) == Rational(1, 3));

    SECTION("symmetric and positive definite") {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 100; ++i) {
            const Params q = random_params(rng);
            const HeckeElem x = random_hecke_elem(rng, HBasis::tau);
            const HeckeElem y = random_hecke_elem(rng, HBasis::tau);
            CHECK(inner_product(x, y, q) == inner_product(y, x, q));
            if (!x.is_zero()) CHECK(norm_sq(x, q).sign() > 0);
        }
    }
}

TEST_CASE("adjoint") {
    CHECK(adjoint(tau(word_z(1))) == tau(Word{-1, false}));  // tau_st* = tau_ts
    const HeckeElem x = grp(kIdentity, Rational(2)) + grp(kGenS, Rational(3));
    CHECK(adjoint(x) == x);  // s is self-inverse

    std::mt19937_64 rng(59);
    for (int i = 0; i < 100; ++i) {
        const HeckeElem y = random_hecke_elem(rng, HBasis::tau);
        CHECK(adjoint(adjoint(y)) == y);
    }

    SECTION("multiplication by a generator is self-adjoint") {
        const Params p(Rational(2), Rational(3));
        const HeckeElem x = tau(kGenT);
        const HeckeElem y = tau(word_z(1));
        CHECK(inner_product(hecke_mul(tau(kGenS), x, p), y, p) ==
              inner_product(x, hecke_mul(tau(kGenS), y, p), p));

        std::mt19937_64 rng2(61);
        for (int i = 0; i < 100; ++i) {
            const Params q = random_params(rng2);
            const HeckeElem a = random_hecke_elem(rng2, HBasis::tau);
            const HeckeElem b = random_hecke_elem(rng2, HBasis::tau);
            for (Gen g : {Gen::s, Gen::t}) {
                for (const HeckeElem& op :
                     {HeckeElem::monomial(HBasis::tau, gen_word(g)), group_gen_in_tau(g, q)}) {
                    CHECK(inner_product(hecke_mul(op, a, q), b, q) ==
                          inner_product(a, hecke_mul(op, b, q), q));
                    CHECK(inner_product(hecke_mul(a, op, q), b, q) ==
                          inner_product(a, hecke_mul(b, op, q), q));
                }
            }
        }
    }
}

TEST_CASE("averaging idempotents") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 50; ++i) {
        const Params p = random_params(rng);
        for (Gen g : {Gen::s, Gen::t}) {
            for (HBasis basis : {HBasis::group, HBasis::tau}) {
                const HeckeElem a = idempotent_a(g, basis, p);
                const HeckeElem h = idempotent_h(g, basis, p);
                CHECK(mul(a, a, p) == a);
                CHECK(mul(h, h, p) == h);
                CHECK(mul(a, h, p).is_zero());
                CHECK(a + h == HeckeElem::unit(basis));
                CHECK(adjoint(a) == a);
            }
            CHECK(convert_basis(idempotent_a(g, HBasis::group, p), HBasis::tau, p) ==
                  idempotent_a(g, HBasis::tau, p));
        }
    }
}
