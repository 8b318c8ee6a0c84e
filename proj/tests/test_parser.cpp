#include <catch2/catch_amalgamated.hpp>

#include "heckedim/kernel_dim.hpp"
#include "heckedim/matrix_doc.hpp"

using namespace heckedim;

namespace {

HeckeElem grp(const Word& w, const Rational& c = Rational(1)) {
    return HeckeElem::monomial(HBasis::group, w, c);
}

}  // namespace

TEST_CASE("parsing basic documents") {
    SECTION("group entry") {
        const MatrixDocument doc = parse_matrix("basis group size 1x1 [ e - s*t ]");
        CHECK(doc.basis == HBasis::group);
        CHECK(doc.rows == 1);
        CHECK(doc.cols == 1);
        const HeckeMatrix m = eval_document(doc, nullptr);
        CHECK(m.at(0, 0) == grp(kIdentity) - grp(word_z(1)));
    }

    SECTION("rational coefficients") {
        const MatrixDocument doc = parse_matrix("basis group size 1x1 [ 1/2 + 1/2*s ]");
        const HeckeMatrix m = eval_document(doc, nullptr);
        CHECK(m.at(0, 0) == grp(kIdentity, Rational(1, 2)) + grp(kGenS, Rational(1, 2)));
    }

    SECTION("tau row") {
        const MatrixDocument doc = parse_matrix("basis tau size 1x2 [ Ts , Tt - 2 ]");
        CHECK(doc.basis == HBasis::tau);
        CHECK(doc.cols == 2);
        const HeckeMatrix m = eval_document(doc, nullptr);
        CHECK(m.at(0, 0) == HeckeElem::monomial(HBasis::tau, kGenS));
        CHECK(m.at(0, 1) == HeckeElem::monomial(HBasis::tau, kGenT) -
                                HeckeElem::monomial(HBasis::tau, kIdentity, Rational(2)));
    }

    SECTION("whitespace and newlines are insignificant") {
        const MatrixDocument a = parse_matrix("basis group size 2 x 1\n[ s ]\n[ t ]\n");
        const MatrixDocument b = parse_matrix("basis group size 2x1[s][t]");
        CHECK(a == b);
    }
}

TEST_CASE("powers") {
    const MatrixDocument doc = parse_matrix("basis group size 1x1 [ (s*t)^2 - e ]");
    const HeckeMatrix m = eval_document(doc, nullptr);
    CHECK(m.at(0, 0) == grp(word_z(2)) - grp(kIdentity));

    SECTION("negative powers of invertible entries") {
        const HeckeMatrix inv =
            eval_document(parse_matrix("basis group size 1x1 [ (s*t)^-3 ]"), nullptr);
        CHECK(inv.at(0, 0) == grp(word_z(-3)));

        const Params p(Rational(2), Rational(3));
        const HeckeMatrix tinv =
            eval_document(parse_matrix("basis tau size 1x1 [ Ts^-1 ]"), &p);
        CHECK(hecke_mul(tinv.at(0, 0), HeckeElem::monomial(HBasis::tau, kGenS), p) ==
              HeckeElem::unit(HBasis::tau));

        const HeckeMatrix scalar =
            eval_document(parse_matrix("basis group size 1x1 [ (2/3)^-2 ]"), nullptr);
        CHECK(scalar.at(0, 0) == grp(kIdentity, Rational(9, 4)));
    }

    SECTION("negative powers of sums are rejected") {
        const MatrixDocument doc2 = parse_matrix("basis group size 1x1 [ (e + s)^-1 ]");
        CHECK_THROWS_AS(eval_document(doc2, nullptr), EvalError);
    }
}

TEST_CASE("position-annotated syntax errors") {
    SECTION("tau atoms under basis group") {
        try {
            parse_matrix("basis group size 1x1\n[ Ts ]");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("basis tau") != std::string::npos);
        }
    }

    SECTION("row width mismatch") {
        CHECK_THROWS_AS(parse_matrix("basis group size 1x2 [ s ]"), ParseError);
    }

    SECTION("missing rows") {
        CHECK_THROWS_AS(parse_matrix("basis group size 2x1 [ s ]"), ParseError);
    }

    SECTION("trailing garbage") {
        CHECK_THROWS_AS(parse_matrix("basis group size 1x1 [ s ] extra"), ParseError);
    }

    SECTION("unknown atom") {
        CHECK_THROWS_AS(parse_matrix("basis group size 1x1 [ w ]"), ParseError);
    }

    SECTION("bad character") {
        CHECK_THROWS_AS(parse_matrix("basis group size 1x1 [ s % t ]"), ParseError);
    }

    SECTION("zero denominator") {
        CHECK_THROWS_AS(parse_matrix("basis group size 1x1 [ 1/0 ]"), ParseError);
    }

    SECTION("bad header") {
        CHECK_THROWS_AS(parse_matrix("basis weird size 1x1 [ s ]"), ParseError);
        CHECK_THROWS_AS(parse_matrix("size 1x1 [ s ]"), ParseError);
        CHECK_THROWS_AS(parse_matrix("basis group size 0x1"), ParseError);
    }
}

TEST_CASE("print-parse roundtrip") {
    const std::vector<std::string> sources = {
        "basis group size 1x1 [ e - s*t ]",
        "basis group size 1x1 [ 1/2 + 1/2*s ]",
        "basis tau size 1x2 [ Ts , Tt - 2 ]",
        "basis group size 2x2 [ s , (s*t)^2 - e ] [ 3*t - 1/5 , (s + t)*(e - t) ]",
        "basis group size 1x1 [ s^-1 * (t + e)^2 ]",
        "basis tau size 1x1 [ (Ts*Tt - 2)^2 + 7/3 ]",
    };
    for (const std::string& src : sources) {
        const MatrixDocument doc = parse_matrix(src);
        const std::string printed = print_document(doc);
        INFO("printed form: " << printed);
        CHECK(parse_matrix(printed) == doc);
        CHECK(print_document(parse_matrix(printed)) == printed);
    }
}

TEST_CASE("evaluation agrees across bases") {
    // evaluating a group document and converting matches the tau evaluation
    // of the same expression written with group atoms
    const Params p(Rational(1, 2), Rational(1, 3));
    const MatrixDocument gdoc = parse_matrix("basis group size 1x1 [ e - s*t ]");
    const MatrixDocument tdoc = parse_matrix("basis tau size 1x1 [ e - s*t ]");
    const HeckeElem via_group =
        convert_basis(eval_document(gdoc, &p).at(0, 0), HBasis::tau, p);
    CHECK(via_group == eval_document(tdoc, &p).at(0, 0));
    CHECK(dim_ker(eval_document(gdoc, &p), p).dim ==
          dim_ker(eval_document(tdoc, &p), p).dim);
}

TEST_CASE("input digest") {
    CHECK(text_digest("abc").size() == 16);
    CHECK(text_digest("abc") == text_digest("abc"));
    CHECK(text_digest("abc") != text_digest("abd"));
}
