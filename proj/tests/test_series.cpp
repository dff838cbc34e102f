// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discroot/series.hpp"

using namespace discroot;

TEST_CASE("cyclotomic units satisfy their defining relations")
{
    const auto i = Cyclotomic::i();
    CHECK(i * i == Cyclotomic{-1});
    CHECK(i.pow(4) == Cyclotomic{1});
    CHECK(i.inv() == -i);

    const auto w = Cyclotomic::zeta3();
    CHECK(w.pow(3) == Cyclotomic{1});
    CHECK(Cyclotomic{1} + w + w * w == Cyclotomic{0});
    CHECK(w.inv() == w * w);
    CHECK(w.norm() == Rational{1});
    CHECK((w - w * w).pow(2) == Cyclotomic{-3});  // (zeta - zeta^2)^2 = -3

    const Cyclotomic half{Rational{1} / 2};
    CHECK(half + half == Cyclotomic{1});
    CHECK_THROWS(static_cast<void>(i * w));
}

TEST_CASE("geometric series inversion")
{
    const long n = 12;
    const auto one = LaurentSeries::constant(1, n);
    const auto z = LaurentSeries::monomial(1, 1, n);
    const auto g = (one - z).inv();
    for (long e = 0; e < n; ++e)
        CHECK(g.coefficient(e) == Cyclotomic{1});

    // z/(1-z)^2 = sum m z^m
    const auto f = z * (one - z).inv().pow(2);
    for (long e = 1; e < n; ++e)
        CHECK(f.coefficient(e) == Cyclotomic{e});
    CHECK(f.coefficient(0) == Cyclotomic{0});
    CHECK_THROWS(static_cast<void>(f.coefficient(n)));
}

TEST_CASE("precision propagation follows the weakest input")
{
    const auto a = LaurentSeries::monomial(1, 1, 3);    // z + O(z^3)
    const auto b = LaurentSeries::monomial(1, -1, 0);   // z^-1 + O(z^0)
    CHECK((a * b).prec() == 1);
    CHECK((a + b).prec() == 0);
    CHECK((a * b).coefficient(0) == Cyclotomic{1});

    // inversion doubles the valuation penalty
    const auto c = LaurentSeries::monomial(1, 2, 7);    // z^2 + O(z^7)
    CHECK(c.inv().prec() == 3);
    CHECK(c.inv().coefficient(-2) == Cyclotomic{1});

    // exact monomials invert exactly
    const auto m = LaurentSeries::monomial(Cyclotomic::i(), 5);
    CHECK(m.inv().is_exact());
    CHECK(m.inv().coefficient(-5) == -Cyclotomic::i());
    CHECK_THROWS(static_cast<void>((LaurentSeries::constant(1) -
                                    LaurentSeries::monomial(1, 1))
                                       .inv()));

    // unknown windows refuse to talk
    CHECK_THROWS(static_cast<void>(a.coefficient(3)));
    CHECK_NOTHROW(static_cast<void>(a.coefficient(-10)));
}

TEST_CASE("discriminant eta product has the right first coefficients")
{
    const long n = 8;
    const auto d = eta_power_product(1, 24, n).shifted(1).truncated(n);
    const long expected[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744};
    for (long e = 1; e < n; ++e)
        CHECK(d.coefficient(e) == Cyclotomic{expected[e]});
}

TEST_CASE("eta product with step 3 and weight 8")
{
    const auto s = eta_power_product(3, 8, 7);
    CHECK(s.coefficient(0) == Cyclotomic{1});
    CHECK(s.coefficient(1) == Cyclotomic{0});
    CHECK(s.coefficient(2) == Cyclotomic{0});
    CHECK(s.coefficient(3) == Cyclotomic{-8});
    CHECK(s.coefficient(6) == Cyclotomic{20});
    // negative weight gives the reciprocal
    const auto t = eta_power_product(3, -8, 7);
    CHECK((s * t).coefficient(0) == Cyclotomic{1});
    CHECK((s * t).coefficient(3) == Cyclotomic{0});
    CHECK((s * t).coefficient(6) == Cyclotomic{0});
}

TEST_CASE("monomial substitution scales exponents and powers the unit")
{
    const auto one = LaurentSeries::constant(1, 5);
    const auto z = LaurentSeries::monomial(1, 1, 5);
    const auto f = (one - z).inv();                         // 1 + z + z^2 + ...
    const auto g = f.compose_monomial(Cyclotomic::i(), 2);  // z -> i z^2
    CHECK(g.prec() == 10);
    CHECK(g.coefficient(0) == Cyclotomic{1});
    CHECK(g.coefficient(1) == Cyclotomic{0});
    CHECK(g.coefficient(2) == Cyclotomic::i());
    CHECK(g.coefficient(4) == Cyclotomic{-1});
    CHECK(g.coefficient(6) == -Cyclotomic::i());
    CHECK(g.coefficient(8) == Cyclotomic{1});
}

TEST_CASE("divisor power sums")
{
    CHECK(sigma_power(3, 1) == Rational{1});
    CHECK(sigma_power(3, 2) == Rational{9});
    CHECK(sigma_power(3, 3) == Rational{28});
    CHECK(sigma_power(3, 4) == Rational{73});
    CHECK(sigma_power(5, 2) == Rational{33});
    CHECK(sigma_power(1, 6) == Rational{12});
}

TEST_CASE("series agreement on the common window")
{
    const auto a = LaurentSeries::monomial(1, 1, 4);
    const auto b = LaurentSeries::monomial(1, 1, 9);
    CHECK(a.agrees_with(b));
    const auto c = b + LaurentSeries::monomial(1, 5, 9);
    CHECK(a.agrees_with(c));   // difference is beyond a's window
    CHECK(!((b + LaurentSeries::monomial(1, 3, 9)).agrees_with(a * LaurentSeries::constant(1, 9))));
}
