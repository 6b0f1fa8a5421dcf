#include <doctest.h>

#include <grwalk/poly.hpp>

#include "test_util.hpp"

using namespace grwalk;
using testutil::ip;
using testutil::qf;
using testutil::qp;
using testutil::Rng;

TEST_CASE("rational polynomial basics") {
    RatPoly z = RatPoly::zero();
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.str() == "0");

    // trailing zeros are stripped on construction
    RatPoly squashed({Rational(3), Rational(0), Rational(0)});
    CHECK(squashed.degree() == 0);
    CHECK(RatPoly({Rational(0)}).is_zero());

    RatPoly f = qp({1, -1, 2}); // 2x^2 - x + 1
    CHECK(f.degree() == 2);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(2) == 2);
    CHECK(f.coeff(5) == 0);  // outside the stored range
    CHECK(f.coeff(-1) == 0);
    CHECK(f.leading() == 2);
    CHECK_FALSE(f.is_monic());
    CHECK(f.monic().is_monic());
    CHECK(f.str() == "2*x^2 - x + 1");
    CHECK(qp({1, -1, 1}).str() == "x^2 - x + 1");
    CHECK(f.str("t") == "2*t^2 - t + 1");

    CHECK(f.eval(make_rational(2)) == 7);
    CHECK(f.eval(make_rational(-1, 2)) == 2);

    CHECK(RatPoly::monomial(3).str() == "x^3");
    CHECK(RatPoly::constant(make_rational(-2, 3)).str() == "-2/3");
}

TEST_CASE("rational polynomial arithmetic round trips") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        RatPoly a = rng.poly(6);
        RatPoly b = rng.poly(6);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) {
            auto q = (a * b).exact_divide(b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }

    // the underlying scalar type round-trips too
    for (int t = 0; t < 200; ++t) {
        Rational a = rng.rational();
        Rational b = rng.rational();
        Rational sum_back = (a + b) - b;
        CHECK(sum_back == a);
        if (b != 0) {
            Rational prod_back = (a * b) / b;
            CHECK(prod_back == a);
        }
    }
}

TEST_CASE("division with remainder") {
    RatPoly f = qp({-1, 0, 0, 1}); // x^3 - 1
    RatPoly g = qp({-1, 1});       // x - 1
    auto dm = f.divmod(g);
    CHECK(dm.quotient == qp({1, 1, 1}));
    CHECK(dm.remainder.is_zero());

    auto dm2 = f.divmod(qp({1, 0, 1})); // by x^2 + 1
    CHECK(dm2.quotient == qp({0, 1}));
    CHECK(dm2.remainder == qp({-1, -1}));
    CHECK(dm2.quotient * qp({1, 0, 1}) + dm2.remainder == f);

    CHECK(f.exact_divide(g).has_value());
    CHECK_FALSE(f.exact_divide(qp({1, 0, 1})).has_value());
    CHECK_FALSE(f.exact_divide(RatPoly::zero()).has_value());

    Rng rng(102);
    for (int t = 0; t < 40; ++t) {
        RatPoly a = rng.poly(7);
        RatPoly b = rng.poly(4);
        if (b.is_zero())
            continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd, lcm and the squarefree part") {
    RatPoly x = RatPoly::monomial(1);
    RatPoly a = qp({-1, 1});      // x - 1
    RatPoly b = qp({2, 1});       // x + 2
    RatPoly f = a * a * b;
    CHECK(squarefree_part(f) == a * b);
    CHECK(squarefree_part(a * b) == a * b);
    CHECK(squarefree_part(qp({7})) == RatPoly::one());

    CHECK(gcd(f, a * x) == a);
    CHECK(gcd(f, RatPoly::zero()) == f.monic());
    CHECK(gcd(RatPoly::zero(), f) == f.monic());
    CHECK(gcd(qp({1, 1}), qp({-1, 1})) == RatPoly::one()); // coprime

    RatPoly l = lcm(a * b, a * x);
    CHECK(l == (a * b * x).monic());
    CHECK(l.exact_divide(a * b).has_value());
    CHECK(l.exact_divide(a * x).has_value());

    Rng rng(103);
    for (int t = 0; t < 30; ++t) {
        RatPoly p = rng.poly(3);
        RatPoly q = rng.poly(3);
        RatPoly h = rng.poly(3);
        if (p.is_zero() || q.is_zero() || h.is_zero())
            continue;
        RatPoly g = gcd(p * h, q * h);
        CHECK(g.is_monic());
        // h divides both inputs, so it divides the gcd
        CHECK(g.exact_divide(h.monic()).has_value());
    }
}

TEST_CASE("derivative and scaling") {
    RatPoly f = qp({5, 0, -3, 1}); // x^3 - 3x^2 + 5
    CHECK(f.derivative() == qp({0, -6, 3}));
    CHECK(RatPoly::constant(make_rational(4)).derivative().is_zero());
    CHECK(f.scaled(make_rational(2)) == qp({10, 0, -6, 2}));
    CHECK(f.scaled(Rational(0)).is_zero());
    CHECK((-f) + f == RatPoly::zero());
}

TEST_CASE("integer polynomial conversions") {
    CHECK(try_to_int_poly(qp({2, -1, 1})).has_value());
    CHECK(*try_to_int_poly(qp({2, -1, 1})) == ip({2, -1, 1}));
    CHECK_FALSE(try_to_int_poly(qf({{1, 2}})).has_value());
    // zero maps to zero
    auto z = try_to_int_poly(RatPoly::zero());
    REQUIRE(z.has_value());
    CHECK(z->is_zero());

    // x^2/6 - 1/4 scales to 2x^2 - 3
    CHECK(primitive_integer_form(qf({{-1, 4}, {0, 1}, {1, 6}})) == ip({-3, 0, 2}));
    // sign is normalized to a positive leading coefficient
    CHECK(primitive_integer_form(qf({{1, 2}, {-1, 1}})) == ip({-1, 2}));
    // common content is removed
    CHECK(primitive_integer_form(qp({4, 0, 6})) == ip({2, 0, 3}));
}

TEST_CASE("integer polynomial division") {
    IntPoly f = ip({-1, 0, 1}); // x^2 - 1
    auto q = f.exact_divide(ip({-1, 1}));
    REQUIRE(q.has_value());
    CHECK(*q == ip({1, 1}));
    // leading coefficient 2 does not divide 1
    CHECK_FALSE(ip({1, 0, 1}).exact_divide(ip({0, 2})).has_value());
    CHECK_FALSE(ip({1, 1, 1}).exact_divide(ip({-1, 1})).has_value());

    CHECK(ip({4, -2, 6}).content() == 2);
    CHECK(IntPoly::zero().content() == 0);
    CHECK(ip({3, 5}).eval(Integer(2)) == 13);
    CHECK(ip({3, 5}).eval(make_rational(1, 5)) == 4);
    CHECK(ip({-1, 0, 2}).str() == "2*x^2 - 1");
    CHECK(ip({-1, 0, 2}).to_rat() == qp({-1, 0, 2}));
}

TEST_CASE("polynomial powers") {
    RatPoly f = qp({1, 1});
    CHECK(pow(f, 0) == RatPoly::one());
    CHECK(pow(f, 1) == f);
    CHECK(pow(f, 3) == qp({1, 3, 3, 1}));
    CHECK(pow(RatPoly::zero(), 2).is_zero());
}
