// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discroot/tate.hpp"

using namespace discroot;

namespace {

Rational coeff(const LaurentSeries& s, long e)
{
    const auto c = s.coefficient(e);
    REQUIRE(c.is_rational());
    return c.re();
}

}  // namespace

TEST_CASE("multiplicative model coefficients match the known expansions")
{
    const auto m = tate_model(Cyclotomic::Kind::Rat, 1, 21);
    const auto& e = m.curve;

    CHECK(coeff(e.a4(), 1) == Rational{-5});
    CHECK(coeff(e.a4(), 2) == Rational{-45});
    CHECK(coeff(e.a4(), 3) == Rational{-140});

    CHECK(coeff(e.a6(), 1) == Rational{-1});
    CHECK(coeff(e.a6(), 2) == Rational{-23});
    CHECK(coeff(e.a6(), 3) == Rational{-154});

    const auto d = tate_delta(m);
    CHECK(d.valuation() == 1);
    CHECK(coeff(d, 1) == Rational{1});
    CHECK(coeff(d, 2) == Rational{-24});
    CHECK(coeff(d, 3) == Rational{252});
    CHECK(coeff(d, 4) == Rational{-1472});
}

TEST_CASE("model discriminant equals the product expansion through order twenty")
{
    const auto cases = std::vector<std::pair<Cyclotomic::Kind, int>>{
        {Cyclotomic::Kind::Rat, 1},
        {Cyclotomic::Kind::Eisenstein, 3},
        {Cyclotomic::Kind::Gauss, 4},
    };
    for (const auto& [kind, step] : cases)
    {
        const auto m = tate_model(kind, step, 21);
        CHECK(m.curve.discriminant().agrees_with(tate_delta(m)));
    }
}

TEST_CASE("parameter expansions lie on the curve and respect inversion")
{
    const auto m4 = tate_model(Cyclotomic::Kind::Gauss, 4, 12);
    const auto params4 = std::vector<std::pair<int, long>>{
        {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}, {3, 3}};
    for (const auto& [a, b] : params4)
    {
        const auto x = tate_x(m4, a, b);
        const auto y = tate_y(m4, a, b);
        CHECK_FALSE(m4.curve.equation_residual(x, y).known_nonzero());
        CHECK_FALSE((x - tate_x(m4, -a, -b)).known_nonzero());
    }

    const auto m3 = tate_model(Cyclotomic::Kind::Eisenstein, 3, 12);
    const auto params3 =
        std::vector<std::pair<int, long>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (const auto& [a, b] : params3)
    {
        const auto x = tate_x(m3, a, b);
        const auto y = tate_y(m3, a, b);
        CHECK_FALSE(m3.curve.equation_residual(x, y).known_nonzero());
        CHECK_FALSE((x - tate_x(m3, -a, -b)).known_nonzero());
    }
}

TEST_CASE("the leading x coefficients match the direct expansion")
{
    const auto m = tate_model(Cyclotomic::Kind::Gauss, 4, 9);
    const auto x = tate_x(m, 0, 1);
    CHECK(x.valuation() == 1);
    CHECK(coeff(x, 1) == Rational{1});
    CHECK(coeff(x, 2) == Rational{2});
    CHECK(coeff(x, 3) == Rational{4});
    CHECK(coeff(x, 4) == Rational{2});
    CHECK(coeff(x, 5) == Rational{6});
}

TEST_CASE("the parametrization is a group homomorphism")
{
    const auto m4 = tate_model(Cyclotomic::Kind::Gauss, 4, 12);
    const auto& e4 = m4.curve;
    CHECK(e4.add(tate_point(m4, 0, 1), tate_point(m4, 1, 1)) == tate_point(m4, 1, 2));
    CHECK(e4.add(tate_point(m4, 1, 0), tate_point(m4, 0, 1)) == tate_point(m4, 1, 1));
    CHECK(e4.mul(2, tate_point(m4, 0, 1)) == tate_point(m4, 0, 2));
    CHECK(e4.mul(2, tate_point(m4, 1, 0)) == tate_point(m4, 2, 0));
    CHECK(e4.mul(2, tate_point(m4, 3, 3)) == tate_point(m4, 2, 2));
    CHECK(e4.mul(4, tate_point(m4, 0, 1)).is_infinity());
    CHECK(e4.mul(4, tate_point(m4, 3, 3)).is_infinity());

    const auto m3 = tate_model(Cyclotomic::Kind::Eisenstein, 3, 12);
    const auto& e3 = m3.curve;
    CHECK(e3.add(tate_point(m3, 0, 1), tate_point(m3, 1, 0)) == tate_point(m3, 1, 1));
    CHECK(e3.mul(3, tate_point(m3, 0, 1)).is_infinity());
    CHECK(e3.mul(3, tate_point(m3, 1, 1)).is_infinity());
}

TEST_CASE("canonical root expansions have the stated product form")
{
    const auto d4 = delta_map(4, 0, 10);
    CHECK(d4.valuation() == 1);
    CHECK(coeff(d4, 1) == Rational{1});
    for (long e : {2, 3, 4, 6, 7, 8})
        CHECK(coeff(d4, e) == Rational{0});
    CHECK(coeff(d4, 5) == Rational{-6});
    CHECK(coeff(d4, 9) == Rational{9});

    const auto d3 = delta_map(3, 0, 8);
    CHECK(coeff(d3, 1) == Rational{1});
    CHECK(coeff(d3, 4) == Rational{-8});
    CHECK(coeff(d3, 7) == Rational{20});
    for (long e : {2, 3, 5, 6})
        CHECK(coeff(d3, e) == Rational{0});

    CHECK(delta_map(4, 1, 6).coefficient(1) == Cyclotomic::i());
    CHECK(delta_map(3, 2, 6).coefficient(1) == Cyclotomic::zeta3().pow(2));
    CHECK_THROWS_AS(delta_map(5, 0, 6), std::invalid_argument);
}

TEST_CASE("canonical roots raised to the n-th power give the discriminant")
{
    for (int n : {3, 4})
    {
        const auto kind =
            n == 3 ? Cyclotomic::Kind::Eisenstein : Cyclotomic::Kind::Gauss;
        const auto m = tate_model(kind, n, 20);
        const auto d = delta_map(n, 0, 20);
        CHECK(d.pow(static_cast<unsigned>(n)).agrees_with(tate_delta(m)));
    }
}

TEST_CASE("torsion root series equal the canonical torsor values")
{
    const auto w3 = tate_w3_series(8);
    CHECK(w3.agrees_with(delta_map(3, 0, 8)));

    const auto w4 = tate_w4_series(8);
    CHECK(w4.valuation() == 1);
    CHECK(w4.coefficient(1) == Cyclotomic{1});
    CHECK(w4.agrees_with(delta_map(4, 0, 8)));
}

TEST_CASE("the full verification report is clean for both torsion levels")
{
    for (int n : {3, 4})
    {
        const auto rep = tate_root_check(n, 8);
        CAPTURE(n);
        for (const auto& f : rep.failures)
            MESSAGE(f);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        CHECK(rep.properties.size() == (n == 3 ? 6 : 7));
        for (const auto& [name, pass] : rep.properties)
        {
            CAPTURE(name);
            CHECK(pass);
        }
    }
    CHECK_THROWS_AS(tate_root_check(5, 8), std::invalid_argument);
}

TEST_CASE("degenerate parameters are rejected")
{
    const auto m = tate_model(Cyclotomic::Kind::Gauss, 4, 8);
    CHECK_THROWS_AS(tate_x(m, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(tate_x(m, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(tate_model(Cyclotomic::Kind::Rat, 1, 1), std::invalid_argument);
}
