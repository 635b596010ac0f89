#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsing/polynomial.hpp"
#include "test_util.hpp"

using namespace fsing;
using namespace fsing::testutil;

static Polynomial var(const PolyRingPtr& R, const char* name) {
    return Polynomial::variable(R, *R->var_index(name));
}

TEST_CASE("freshman's dream") {
    auto R2 = PolyRing::make(2, {"x", "y"});
    auto f2 = (var(R2, "x") + var(R2, "y")).pow(2);
    CHECK(f2 == var(R2, "x").pow(2) + var(R2, "y").pow(2));

    auto R3 = PolyRing::make(3, {"x", "y"});
    auto f3 = (var(R3, "x") + var(R3, "y")).pow(3);
    CHECK(f3 == var(R3, "x").pow(3) + var(R3, "y").pow(3));
}

TEST_CASE("expansion over F_5 against the dense oracle") {
    auto R = PolyRing::make(5, {"x", "y"});
    Polynomial x = var(R, "x"), y = var(R, "y");
    Polynomial f = (x + y) * (x + y);
    // x^2 + 2xy + y^2
    CHECK(f.coefficient_of(Monomial({2, 0})) == 1);
    CHECK(f.coefficient_of(Monomial({1, 1})) == 2);
    CHECK(f.coefficient_of(Monomial({0, 2})) == 1);
    CHECK(as_map(f) == dense_mul_oracle(x + y, x + y));
}

TEST_CASE("multiplication agrees with the oracle on random inputs") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto R = PolyRing::make(p, {"x", "y", "z"});
        for (int i = 0; i < 50; ++i) {
            Polynomial f = random_poly(R, rng);
            Polynomial g = random_poly(R, rng);
            CHECK(as_map(f * g) == dense_mul_oracle(f, g));
        }
    }
}

TEST_CASE("frobenius powers") {
    auto R3 = PolyRing::make(3, {"x", "y"});
    Polynomial f = var(R3, "x") + var(R3, "y");
    CHECK(f.frobenius(1) == var(R3, "x").pow(3) + var(R3, "y").pow(3));

    CHECK(Polynomial::constant(R3, 2).frobenius(2) == Polynomial::constant(R3, 2));

    auto R5 = PolyRing::make(5, {"x", "y"});
    Polynomial g = var(R5, "x").pow(2) * var(R5, "y") + Polynomial::constant(R5, 1);
    Polynomial gf = g.frobenius(1);
    CHECK(gf.coefficient_of(Monomial({10, 5})) == 1);
    CHECK(gf.coefficient_of(Monomial({0, 0})) == 1);
    CHECK(gf == g.pow(5));
}

TEST_CASE("frobenius equals pow on random polynomials") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto R = PolyRing::make(p, {"x", "y"});
        for (unsigned e : {1u, 2u}) {
            std::uint64_t q = checked_prime_power(p, e);
            for (int i = 0; i < 20; ++i) {
                Polynomial f = random_poly(R, rng, 4, 3);
                CHECK(f.frobenius(e) == f.pow(q));
            }
        }
    }
}

TEST_CASE("coefficient extraction") {
    auto R = PolyRing::make(5, {"x", "y"});
    Polynomial f = (var(R, "x") + var(R, "y")).pow(2);
    CHECK(f.coefficient_of(Monomial({1, 1})) == 2);
    CHECK(f.coefficient_of(Monomial({3, 0})) == 0); // not in support

    // coefficient of (xyz)^{p-1} in (x^3+y^3+z^3)^{p-1}, p = 7:
    // multinomial 6!/(2!2!2!) = 90 = 6 mod 7
    auto R7 = PolyRing::make(7, {"x", "y", "z"});
    Polynomial g = var(R7, "x").pow(3) + var(R7, "y").pow(3) + var(R7, "z").pow(3);
    std::uint64_t c = g.pow(6).coefficient_of(Monomial({6, 6, 6}));
    CHECK(c == 6);
    CHECK(c == multinomial_mod(6, {2, 2, 2}, 7));
}

TEST_CASE("weighted degree and homogeneity") {
    auto R = PolyRing::make(5, {"x", "y", "z"});
    Polynomial f = var(R, "x").pow(4) + var(R, "y").pow(4) - var(R, "z").pow(4);
    CHECK(f.weighted_degree() == 4);
    CHECK(f.is_homogeneous());

    Polynomial g = var(R, "x") + Polynomial::constant(R, 1);
    CHECK(g.weighted_degree() == 1);
    CHECK_FALSE(g.is_homogeneous());

    auto W = PolyRing::make(5, {"x", "y"}, {1, 2});
    Polynomial h = var(W, "x").pow(2) + var(W, "y");
    CHECK(h.weighted_degree() == 2);
    CHECK(h.is_homogeneous());

    CHECK_THROWS_AS(Polynomial::zero(R).weighted_degree(), ZeroPolynomialDegree);
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 rng(13);
    auto R = PolyRing::make(7, {"x", "y"});
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial::zero(R));
    }
}

TEST_CASE("degree additivity for homogeneous products") {
    auto R = PolyRing::make(5, {"x", "y", "z"});
    Polynomial f = var(R, "x").pow(2) + var(R, "y") * var(R, "z");
    Polynomial g = var(R, "x") + var(R, "y");
    REQUIRE(f.is_homogeneous());
    REQUIRE(g.is_homogeneous());
    CHECK((f * g).weighted_degree() == f.weighted_degree() + g.weighted_degree());
    CHECK((f * g).is_homogeneous());
}

TEST_CASE("canonical form is order-insensitive and idempotent") {
    auto R = PolyRing::make(5, {"x", "y", "z"});
    std::vector<Term> forward{{Monomial({4, 0, 0}), 1}, {Monomial({0, 4, 0}), 1}, {Monomial({0, 0, 4}), 4}};
    std::vector<Term> scrambled{{Monomial({0, 0, 4}), 9}, {Monomial({0, 4, 0}), 6}, {Monomial({4, 0, 0}), 1}};
    CHECK(Polynomial(R, forward) == Polynomial(R, scrambled));
    CHECK(Polynomial(R, forward).to_string() == "x^4 + y^4 + 4*z^4");

    // duplicate monomials accumulate, zeros vanish
    std::vector<Term> dup{{Monomial({1, 0, 0}), 3}, {Monomial({1, 0, 0}), 2}};
    CHECK(Polynomial(R, dup).is_zero());
}

TEST_CASE("monomial orders") {
    // grevlex on degree-2 monomials in x,y,z: x^2 > xy > y^2 > xz > yz > z^2
    MonomialOrder ord = MonomialOrder::grevlex(3);
    std::vector<Monomial> expected{Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}),
                                   Monomial({1, 0, 1}), Monomial({0, 1, 1}), Monomial({0, 0, 2})};
    for (std::size_t i = 0; i + 1 < expected.size(); ++i)
        CHECK(ord.greater(expected[i], expected[i + 1]));

    // lex: x > y^5
    MonomialOrder lex = MonomialOrder::lex(2);
    CHECK(lex.greater(Monomial({1, 0}), Monomial({0, 5})));

    // 1 is minimal in every order (well-ordering)
    for (auto o : {MonomialOrder::grevlex(3), MonomialOrder::lex(3), MonomialOrder::grlex(3)}) {
        CHECK(o.less(Monomial({0, 0, 0}), Monomial({0, 0, 1})));
        CHECK(o.less(Monomial({0, 0, 0}), Monomial({1, 0, 0})));
    }

    // multiplicativity on a sample
    MonomialOrder g = MonomialOrder::grevlex(3);
    Monomial a({1, 2, 0}), b({0, 1, 3}), c({2, 0, 1});
    CHECK(g.less(a, b) == g.less(a * c, b * c));
}

TEST_CASE("ring mismatch and overflow are reported") {
    auto R1 = PolyRing::make(3, {"x"});
    auto R2 = PolyRing::make(5, {"x"});
    CHECK_THROWS_AS(var(R1, "x") + var(R2, "x"), RingMismatch);

    auto R = PolyRing::make(3, {"x"});
    Polynomial big = Polynomial::monomial(R, Monomial({UINT64_MAX / 2}));
    CHECK_THROWS_AS(big.frobenius(1), ExponentOverflow);
}

TEST_CASE("derivatives") {
    auto R = PolyRing::make(5, {"x", "y", "z"});
    Polynomial f = var(R, "x").pow(4) + var(R, "y").pow(4) - var(R, "z").pow(4);
    CHECK(f.derivative(0) == var(R, "x").pow(3).scale(4));
    // char divides exponent: d/dx x^5 = 0
    CHECK(var(R, "x").pow(5).derivative(0).is_zero());
}
