#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heckedim/kappa.hpp"
#include "heckedim/testgen.hpp"

using namespace heckedim;

namespace {

std::vector<Params> one_per_region() {
    return {Params(Rational(1, 3), Rational(1, 2)), Params(Rational(1, 2), Rational(1, 3)),
            Params(Rational(2), Rational(3)), Params(Rational(3), Rational(2))};
}

}  // namespace

TEST_CASE("kappa selectors by region") {
    CHECK(kappa_plus_spec(Params(Rational(1, 2), Rational(1, 3))) ==
          KappaSpec{Rational(1), Rational(1)});
    CHECK(kappa_plus_spec(Params(Rational(2), Rational(3))) ==
          KappaSpec{Rational(-1, 2), Rational(-1, 3)});
    CHECK(kappa_plus_spec(Params(Rational(2), Rational(1, 2))).zero_vec);
    CHECK(kappa_minus_spec(Params(Rational(2), Rational(3))) ==
          KappaSpec{Rational(1), Rational(-1, 3)});
    CHECK(kappa_minus_spec(Params(Rational(3), Rational(2))) ==
          KappaSpec{Rational(-1, 3), Rational(1)});
    CHECK(kappa_minus_spec(Params(Rational(2), Rational(2))).zero_vec);
}

TEST_CASE("truncated kappa coefficients") {
    const Params below(Rational(1, 2), Rational(1, 3));
    const HeckeElem k2 = kappa_truncated(kappa_plus_spec(below), 2);
    CHECK(k2.term_count() == 5);  // 1, s, t, st, ts
    for (const auto& [w, c] : k2.coeffs()) CHECK(c == Rational(1));

    const Params above(Rational(2), Rational(1, 2));  // q_s > q_t
    CHECK(kappa_truncated(kappa_minus_spec(above), 3).coeff(kGenS) == Rational(-1, 2));

    CHECK(kappa_truncated(kappa_minus_spec(Params(Rational(2), Rational(2))), 4).is_zero());

    SECTION("r-weights match letter counts") {
        const KappaSpec spec{Rational(-1, 2), Rational(3)};
        std::mt19937_64 rng(71);
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<std::int64_t> dn(-10, 10);
            std::uniform_int_distribution<int> dr(0, 1);
            const Word w{dn(rng), dr(rng) == 1};
            const LetterCounts lc = letter_counts(w);
            CHECK(r_pow(spec, w) == spec.rs.pow(lc.ns) * spec.rt.pow(lc.nt));
        }
    }
}

TEST_CASE("kappa norm closed form") {
    const Params p(Rational(1, 2), Rational(1, 3));
    CHECK(kappa_norm_sq(KappaSpec{Rational(1), Rational(1)}, p) == Rational(12, 5));
    // the mirror image of the previous case under q -> 1/q
    CHECK(kappa_norm_sq(KappaSpec{Rational(-1, 2), Rational(-1, 3)},
                        Params(Rational(2), Rational(3))) == Rational(12, 5));
    CHECK(kappa_norm_sq(KappaSpec{Rational(-1, 2), Rational(-1, 2)},
                        Params(Rational(2), Rational(2))) == Rational(3));
    CHECK_THROWS_AS(kappa_norm_sq(KappaSpec{Rational(1), Rational(1)},
                                  Params(Rational(1), Rational(1))),
                    std::domain_error);

    SECTION("partial sums plus the geometric tail reproduce the closed form") {
        for (const Params& q : one_per_region()) {
            for (KappaKind kind : {KappaKind::plus, KappaKind::minus}) {
                const KappaSpec spec = kappa_spec(kind, q);
                const Rational total = kappa_norm_sq(spec, q);
                for (std::int64_t depth : {0, 1, 2, 5, 9}) {
                    const Rational partial = norm_sq(kappa_truncated(spec, depth), q);
                    CHECK(partial + kappa_norm_tail(spec, q, depth) == total);
                }
            }
        }
    }
}

TEST_CASE("generators fix kappa up to sign") {
    const std::int64_t depth = 8;
    for (const Params& p : one_per_region()) {
        for (KappaKind kind : {KappaKind::plus, KappaKind::minus}) {
            const KappaSpec spec = kappa_spec(kind, p);
            const KappaAction act = kappa_action(kind, p);
            const HeckeElem k = kappa_truncated(spec, depth);
            const HeckeElem interior = restrict_length(k, depth - 1);
            for (Gen g : {Gen::s, Gen::t}) {
                const Rational sign(g == Gen::s ? act.s_sign : act.t_sign);
                const HeckeElem gi = group_gen_in_tau(g, p);
                CHECK(restrict_length(hecke_mul(gi, k, p), depth - 1) == sign * interior);
                CHECK(restrict_length(hecke_mul(k, gi, p), depth - 1) == sign * interior);
            }
        }
    }
}

TEST_CASE("tau generators act by regional scalars") {
    const std::int64_t depth = 8;
    for (const Params& p : one_per_region()) {
        for (KappaKind kind : {KappaKind::plus, KappaKind::minus}) {
            const KappaSpec spec = kappa_spec(kind, p);
            const KappaAction act = kappa_action(kind, p);
            const HeckeElem k = kappa_truncated(spec, depth);
            const HeckeElem interior = restrict_length(k, depth - 1);
            for (Gen g : {Gen::s, Gen::t}) {
                const Rational scalar = g == Gen::s ? act.tau_s_scalar : act.tau_t_scalar;
                const HeckeElem tg = HeckeElem::monomial(HBasis::tau, gen_word(g));
                CHECK(restrict_length(hecke_mul(tg, k, p), depth - 1) == scalar * interior);
                CHECK(restrict_length(hecke_mul(k, tg, p), depth - 1) == scalar * interior);
            }
        }
    }
}

TEST_CASE("kappa is an eigenvector of every tau word") {
    const std::int64_t depth = 9;
    for (const Params& p : one_per_region()) {
        for (KappaKind kind : {KappaKind::plus, KappaKind::minus}) {
            const KappaSpec spec = kappa_spec(kind, p);
            const HeckeElem k = kappa_truncated(spec, depth);
            for (const Word& w : words_up_to(3)) {
                const std::int64_t radius = depth - word_length(w);
                const Rational scalar = q_pow(w, p) * r_pow(spec, w);
                CHECK(restrict_length(
                          hecke_mul(k, HeckeElem::monomial(HBasis::tau, w), p), radius) ==
                      scalar * restrict_length(k, radius));
            }
        }
    }
}

TEST_CASE("kappa pairing against finite elements") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 50; ++i) {
        const Params p = random_params(rng);
        const KappaSpec spec = kappa_plus_spec(p);
        if (spec.zero_vec) continue;
        const HeckeElem y = random_hecke_elem(rng, HBasis::tau);
        // the pairing is the inner product against a deep enough truncation
        const HeckeElem deep = kappa_truncated(spec, y.max_word_length());
        CHECK(kappa_pairing(y, spec, p) == inner_product(y, deep, p));
        // Cauchy-Schwarz, all quantities squared and exact
        const Rational c = kappa_pairing(y, spec, p);
        CHECK(c * c <= kappa_norm_sq(spec, p) * norm_sq(y, p));
    }
}
