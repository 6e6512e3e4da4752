#include <catch2/catch_amalgamated.hpp>

#include "wkac/poly.hpp"

using namespace wkac;

TEST_CASE("rational parsing and reduction") {
    CHECK(parse_rat("3/2") == rat(3, 2));
    CHECK(parse_rat("-1/8") == rat(-1, 8));
    CHECK(mod1(rat(-1, 8)) == rat(7, 8));
    CHECK(mod1(rat(9, 8)) == rat(1, 8));
    CHECK(mod1(Rat(1)) == 0);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and division") {
    Poly p = (poly_h() + poly_k()) * (poly_h() - poly_k());
    CHECK(p == poly_h() * poly_h() - poly_k() * poly_k());
    auto q = p.divide_exact(poly_h() + poly_k());
    REQUIRE(q.has_value());
    CHECK(*q == poly_h() - poly_k());
    CHECK_FALSE(p.divide_exact(poly_h() + Poly(1)).has_value());

    Poly r = Poly(rat(2, 3)) * poly_h() + Poly(rat(4, 3));
    CHECK(r.content() == rat(2, 3));
    CHECK(r.primitive() == poly_h() + Poly(2));
    CHECK((-r).primitive() == (-(poly_h() + Poly(2))).primitive());
}

TEST_CASE("zero-mode reduction") {
    Poly p = poly_g() * poly_g();
    CHECK(reduce_zero_mode(p) == poly_h() - Poly(rat(1, 24)) * poly_c());
    Poly odd = poly_g() * poly_g() * poly_g();
    CHECK(reduce_zero_mode(odd) ==
          (poly_h() - Poly(rat(1, 24)) * poly_c()) * poly_g());
}

TEST_CASE("rational functions in k normalize") {
    RatFunc a(poly_k() * Rat(2), poly_k() * Rat(2) + Poly(2));
    RatFunc b(poly_k(), poly_k() + Poly(1));
    CHECK(a == b);
    RatFunc c = RatFunc(poly_k(), poly_k() + Poly(rat(3, 2))) - RatFunc(Rat(6)) * RatFunc::k();
    CHECK(c.eval(rat(1, 2)) == rat(1, 4) - 3);
    CHECK_THROWS_AS(c.eval(rat(-3, 2)), std::domain_error);
}

TEST_CASE("fraction substitution clears denominators") {
    Poly p = poly_c() * poly_c() + Poly(1);
    auto [num, d] = p.substitute_fraction(VC, poly_k(), poly_k() + Poly(1));
    CHECK(d == 2);
    Poly kp1 = poly_k() + Poly(1);
    CHECK(num == poly_k() * poly_k() + kp1 * kp1);
}
