// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discroot/torsion.hpp"

using namespace discroot;

namespace {

Curve<FieldElement> short_curve(const FieldPtr& f, long long a, long long b)
{
    return {f->zero(), f->zero(), f->zero(), f->from_int(a), f->from_int(b)};
}

void check_module_invariants(const TorsionModule& tm)
{
    const int n = tm.n();
    const auto& e = tm.curve();
    const auto pts = tm.all_points();
    REQUIRE(pts.size() == static_cast<size_t>(n * n));
    for (const auto& pt : pts)
    {
        CHECK(e.contains(pt));
        CHECK(e.mul(n, pt).is_infinity());
    }
    // coordinates round-trip and respect the group operation
    const torsor::Space sp{n};
    for (const auto v : sp.all())
    {
        const auto pt = tm.point_of(v);
        CHECK(tm.coords_of(pt) == v);
        for (const auto w : sp.all())
        {
            const auto sum = e.add(tm.point_of(v), tm.point_of(w));
            CHECK(tm.coords_of(sum) == sp.add(v, w));
        }
    }
    // Frobenius respects the group structure and has determinant q mod n
    const auto m = tm.frobenius_matrix();
    const int q_mod = static_cast<int>(tm.base_field()->order() % static_cast<u64>(n));
    CHECK(sp.mod(m.a * m.d - m.b * m.c) == sp.mod(q_mod));
    for (const auto v : sp.all())
    {
        const auto lhs = tm.frobenius_point(tm.point_of(v));
        CHECK(tm.coords_of(lhs) == sp.apply(m, v));
    }
}

}  // namespace

TEST_CASE("full 3-torsion of y^2 = x^3 + 1 over F_7 needs a cubic extension")
{
    const auto f7 = Field::prime(7);
    const TorsionModule tm(short_curve(f7, 0, 1), 3);
    CHECK(tm.ext_degree_over_base() == 3);
    check_module_invariants(tm);
}

TEST_CASE("3-torsion modules over F_5 for every nonsingular short curve")
{
    const auto f5 = Field::prime(5);
    int checked = 0;
    for (long long a = 0; a < 5; ++a)
        for (long long b = 0; b < 5; ++b)
        {
            const auto e = short_curve(f5, a, b);
            if (e.discriminant().is_zero())
                continue;
            const TorsionModule tm(e, 3);
            check_module_invariants(tm);
            ++checked;
        }
    CHECK(checked == 20);
}

TEST_CASE("4-torsion modules over small fields")
{
    const auto f5 = Field::prime(5);
    const auto f13 = Field::prime(13);
    for (const auto& e : {short_curve(f5, -1, 0), short_curve(f5, 1, 2),
                          short_curve(f13, 3, 0), short_curve(f13, 1, 1)})
    {
        if (e.discriminant().is_zero())
            continue;
        const TorsionModule tm(e, 4);
        check_module_invariants(tm);
    }
}

TEST_CASE("curves with nonzero a1, a2, a3 coefficients work unchanged")
{
    const auto f13 = Field::prime(13);
    const Curve<FieldElement> e{f13->from_int(1), f13->from_int(2), f13->from_int(3),
                                f13->from_int(4), f13->from_int(5)};
    REQUIRE(!e.discriminant().is_zero());
    for (const int n : {3, 4})
    {
        const TorsionModule tm(e, n);
        check_module_invariants(tm);
    }
}

TEST_CASE("extension base fields search in degree multiples of the base")
{
    const auto f25 = Field::extension(5, 2);
    const auto g = f25->generator();
    const Curve<FieldElement> e{f25->zero(), f25->zero(), f25->zero(), g, f25->one()};
    REQUIRE(!e.discriminant().is_zero());
    const TorsionModule tm(e, 3);
    CHECK(tm.field()->degree() % 2 == 0);
    check_module_invariants(tm);
}

TEST_CASE("rational full torsion stays in the base field")
{
    // find one curve over F_13 whose full 3-torsion is rational, if any;
    // the search is over j-like twists y^2 = x^3 + a x + b
    const auto f13 = Field::prime(13);
    bool found_rational = false;
    for (long long a = 0; a < 13 && !found_rational; ++a)
        for (long long b = 0; b < 13 && !found_rational; ++b)
        {
            const auto e = short_curve(f13, a, b);
            if (e.discriminant().is_zero())
                continue;
            const TorsionModule tm(e, 3);
            if (tm.ext_degree_over_base() == 1)
            {
                found_rational = true;
                check_module_invariants(tm);
            }
        }
    CHECK(found_rational);
}

TEST_CASE("point lifting returns canonical pairs")
{
    const auto f13 = Field::prime(13);
    const auto e = short_curve(f13, -1, 0);  // y^2 = x^3 - x
    const auto pts = lift_x(e, f13->from_int(2));  // y^2 = 6, QR? 6 = 8^2? squares mod 13
    // squares mod 13: 1,4,9,3,12,10; 6 is not among them
    CHECK(pts.empty());
    const auto pts2 = lift_x(e, f13->from_int(4));  // y^2 = 60 = 8; not a square either
    CHECK(pts2.empty());
    const auto pts3 = lift_x(e, f13->from_int(5));  // y^2 = 120 = 3 = 4^2 and 9^2
    REQUIRE(pts3.size() == 2);
    CHECK(pts3[0].y().residue() == 4);
    CHECK(pts3[1].y().residue() == 9);
    const auto pts4 = lift_x(e, f13->zero());  // y = 0, double root
    REQUIRE(pts4.size() == 1);
    CHECK(pts4[0].y().is_zero());
}
