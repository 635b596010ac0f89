#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsing/parser.hpp"
#include "test_util.hpp"

using namespace fsing;
using namespace fsing::testutil;

TEST_CASE("canonical examples") {
    auto R = PolyRing::make(5, {"x", "y", "z"});
    Polynomial f = parse_polynomial("x^4+y^4-z^4", R);
    CHECK(f.to_string() == "x^4 + y^4 + 4*z^4"); // -1 = 4 mod 5

    auto R3 = PolyRing::make(3, {"x", "y"});
    Polynomial g = parse_polynomial("(x+y)^3", R3);
    CHECK(g == parse_polynomial("x^3 + y^3", R3));
}

TEST_CASE("grammar details") {
    auto R = PolyRing::make(7, {"x", "y"});
    CHECK(parse_polynomial("2*x", R) == Polynomial::variable(R, 0).scale(2));
    CHECK(parse_polynomial("-x", R) == -Polynomial::variable(R, 0));
    CHECK(parse_polynomial("-x^2", R) == -(Polynomial::variable(R, 0).pow(2)));
    CHECK(parse_polynomial("x - - y", R) ==
          Polynomial::variable(R, 0) + Polynomial::variable(R, 1));
    CHECK(parse_polynomial("14", R) == Polynomial::zero(R)); // reduced mod 7
    CHECK(parse_polynomial("(x + y) * (x - y)", R) ==
          parse_polynomial("x^2 - y^2", R));
}

TEST_CASE("distinct diagnostics") {
    auto R = PolyRing::make(5, {"x", "y"});

    // syntax error at the stray '*', with position
    try {
        parse_polynomial("x + * y", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::Syntax);
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
        CHECK(e.fragment() == "*");
    }

    // implicit multiplication is rejected
    try {
        parse_polynomial("2x", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::Syntax);
    }

    try {
        parse_polynomial("x + w", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::UnknownVariable);
        CHECK(e.fragment() == "w");
    }

    try {
        parse_polynomial("x^99999999999999999999", R);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::ExponentOverflow);
    }

    CHECK_THROWS_AS(parse_polynomial("x +", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", R), ParseError);
}

TEST_CASE("parse-print round trip on random polynomials") {
    std::mt19937_64 rng(61);
    for (std::uint64_t p : {2ull, 5ull, 13ull}) {
        auto R = PolyRing::make(p, {"x", "y", "z"});
        for (int i = 0; i < 60; ++i) {
            Polynomial f = random_poly(R, rng, 6, 5);
            CHECK(parse_polynomial(f.to_string(), R) == f);
            // serialize-parse-serialize is the identity on canonical text
            CHECK(parse_polynomial(f.to_string(), R).to_string() == f.to_string());
        }
    }
}

TEST_CASE("univariate parsing and matrices") {
    auto F3 = FqContext::make(3, 1);
    UPoly f = parse_upoly("x^4+1", F3, "x");
    CHECK(f.to_string("x") == "x^4+1");

    UPolyMat A = parse_upoly_matrix("[0,1;1,x]", F3, "x");
    CHECK(A.size() == 2);
    CHECK(A.at(0, 0).is_zero());
    CHECK(A.at(1, 1) == UPoly::variable(F3));
    CHECK(matrix_to_string(A, "x") == "[0, 1; 1, x]");

    CHECK_THROWS_AS(parse_upoly_matrix("[0,1;1]", F3, "x"), ParseError);
    CHECK_THROWS_AS(parse_upoly_matrix("[0,1;1,x] junk", F3, "x"), ParseError);

    // round trip through the compact printer
    UPolyMat B = parse_upoly_matrix(matrix_to_string(A, "x"), F3, "x");
    CHECK(B == A);
}

TEST_CASE("fq matrices with generator entries") {
    auto F9 = FqContext::make(3, 2);
    FqMat M = parse_fq_matrix("[u, 1; 2, u^2]", F9);
    CHECK(M.at(0, 0) == Fq::generator(F9));
    CHECK(M.at(1, 1) == Fq(F9, 2)); // u^2 = -1 = 2
    CHECK(matrix_to_string(M) == "[u, 1; 2, 2]");
}
