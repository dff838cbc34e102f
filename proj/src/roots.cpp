// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/roots.hpp"

#include <numeric>

namespace discroot {

namespace {

using Pt = Point<FieldElement>;
using Ec = Curve<FieldElement>;

void require_square_model(const Ec& e)
{
    if (!e.a1().is_zero() || !e.a3().is_zero())
        throw std::invalid_argument("model must have a1 = a3 = 0");
}

FieldElement w3_from_xs(const Ec& e, const FieldElement& x1, const FieldElement& x2,
                        const FieldElement& x3, const FieldElement& x4)
{
    const auto& f = x1.field();
    return e.b4() - f->from_int(3) * (x1 * x2 + x3 * x4);
}

FieldElement w4_tilde_from_points(const Ec& e, const Pt& p, const Pt& q, const Pt& r)
{
    const auto slope = [&](const Pt& a, const Pt& b) { return e.chord_slope(a, b); };
    const auto pp = e.add(p, e.mul(2, q));
    const auto qq = e.add(q, e.mul(2, r));
    const auto rr = e.add(r, e.mul(2, p));
    const auto& f = e.a1().field();
    return f->from_int(2) * slope(p, pp) * slope(q, qq) * slope(r, rr);
}

}  // namespace

Transform<FieldElement> square_completion(const Ec& e)
{
    const auto& f = e.a1().field();
    if (f->characteristic() == 2)
        throw std::invalid_argument("square completion needs odd characteristic");
    const auto half = f->from_int(2).inv();
    return {f->one(), f->zero(), -e.a1() * half, -e.a3() * half};
}

Curve<FieldElement> completed_square(const Ec& e)
{
    return e.transformed(square_completion(e));
}

RootValue w3_root(const TorsionModule& tm, const torsor::Partition22& t)
{
    if (tm.n() != 3)
        throw std::invalid_argument("w3 needs a 3-torsion module");
    const auto x = [&](torsor::Vec2 v) { return tm.point_of(v).x(); };
    return {3, w3_from_xs(tm.curve(), x(t[0]), x(t[1]), x(t[2]), x(t[3])), tm.curve()};
}

std::vector<RootValue> w3_all(const TorsionModule& tm)
{
    std::vector<RootValue> out;
    for (const auto& t : torsor::Space{3}.all_partitions())
        out.push_back(w3_root(tm, t));
    return out;
}

RootValue w2_root(const TorsionModule& tm, const std::array<torsor::Vec2, 3>& cyc)
{
    if (tm.n() != 4)
        throw std::invalid_argument("w2 takes 2-torsion coordinates in a 4-torsion module");
    require_square_model(tm.curve());
    const torsor::Space sp{4};
    for (const auto v : cyc)
        if (v == torsor::Vec2{0, 0} || !(sp.smul(2, v) == torsor::Vec2{0, 0}))
            throw std::invalid_argument("entries must be nonzero 2-torsion");
    if (cyc[0] == cyc[1] || cyc[1] == cyc[2] || cyc[0] == cyc[2])
        throw std::invalid_argument("entries must be the three distinct 2-torsion classes");
    const auto x = [&](torsor::Vec2 v) { return tm.point_of(v).x(); };
    const auto xa = x(cyc[0]), xb = x(cyc[1]), xc = x(cyc[2]);
    const auto& f = tm.field();
    return {2, f->from_int(4) * (xa - xb) * (xb - xc) * (xc - xa), tm.curve()};
}

RootValue w4_tilde_root(const TorsionModule& tm, const torsor::Triple& s)
{
    if (tm.n() != 4)
        throw std::invalid_argument("w4 needs a 4-torsion module");
    require_square_model(tm.curve());
    const torsor::Space sp{4};
    if (!sp.in_s4(s))
        throw std::invalid_argument("triple must halve the three nonzero 2-torsion points");
    const auto value = w4_tilde_from_points(tm.curve(), tm.point_of(s[0]), tm.point_of(s[1]),
                                            tm.point_of(s[2]));
    return {4, value, tm.curve()};
}

RootValue w4_root(const TorsionModule& tm, const torsor::Triple& t)
{
    return w4_tilde_root(tm, torsor::Space{4}.t4_rep(t));
}

std::vector<RootValue> w4_all(const TorsionModule& tm)
{
    std::vector<RootValue> out;
    for (const auto& t : torsor::Space{4}.t4_classes())
        out.push_back(w4_tilde_root(tm, t));
    return out;
}

int pairing_calibration(const TorsionModule& tm)
{
    const int n = tm.n();
    const torsor::Space sp{n};
    const auto zeta = weil_pairing(tm.curve(), tm.gen_p(), tm.gen_q(), n);
    bool plus = true;
    bool minus = true;
    const auto tally = [&](const FieldElement& moved, const FieldElement& base, int c) {
        plus = plus && moved == zeta.pow(static_cast<u128>(sp.mod(c))) * base;
        minus = minus && moved == zeta.pow(static_cast<u128>(sp.mod(-c))) * base;
    };
    if (n == 3)
        for (const auto& t : sp.all_partitions())
            for (int c = 0; c < n; ++c)
                tally(w3_root(tm, sp.wedge_on_partition(c, t)).value, w3_root(tm, t).value, c);
    else
        for (const auto& t : sp.t4_classes())
            for (int c = 0; c < n; ++c)
                tally(w4_root(tm, sp.wedge_on_t4(c, t)).value, w4_root(tm, t).value, c);
    if (plus == minus)
        throw std::runtime_error("no uniform pairing calibration sign");
    return plus ? 1 : -1;
}

std::pair<TorsionModule, TorsionModule> twelve_torsion_modules(const Ec& e)
{
    const auto sq = completed_square(e);
    const TorsionModule probe3(sq, 3);
    const TorsionModule probe4(sq, 4);
    const unsigned d3 = probe3.field()->degree();
    const unsigned d4 = probe4.field()->degree();
    const unsigned l = std::lcm(d3, d4);
    if (l == d3 && l == d4 && probe3.field()->same_as(*probe4.field()))
        return {probe3, probe4};
    const auto& base = e.a1().field();
    if (l / base->degree() * base->degree() != l || l > 16)
        throw std::runtime_error("no common torsion field of degree at most 16");
    const auto fl = Field::extension(base->characteristic(), l);
    const Embedding emb(base, fl);
    const auto el = embed_curve(sq, emb);
    return {TorsionModule(el, 3), TorsionModule(el, 4)};
}

W12Value w12_root(const TorsionModule& tm3, const TorsionModule& tm4,
                  const torsor::Partition22& t3, const torsor::Triple& t4)
{
    if (!tm3.field()->same_as(*tm4.field()))
        throw std::invalid_argument("modules must share one field");
    const auto& e3 = tm3.curve();
    const auto& e4 = tm4.curve();
    if (!(e3.a1() == e4.a1() && e3.a2() == e4.a2() && e3.a3() == e4.a3() &&
          e3.a4() == e4.a4() && e3.a6() == e4.a6()))
        throw std::invalid_argument("modules must share one model");
    auto r3 = w3_root(tm3, t3);
    auto r4 = w4_root(tm4, t4);
    const auto delta = e3.discriminant();
    const auto combined = r3.value * r4.value.pow(3) / delta;
    return {std::move(r3), std::move(r4), combined};
}

TransformReport transformation_check(const TorsionModule& tm, const Transform<FieldElement>& ch)
{
    TransformReport rep;
    const auto fail = [&rep](std::string what) {
        rep.ok = false;
        rep.failures.push_back(std::move(what));
    };
    const auto& ec = tm.curve();
    const auto& f = tm.field();
    const auto e2 = ec.transformed(ch);
    const auto u2 = ch.u * ch.u;
    const auto u4 = u2 * u2;
    const auto u6 = u4 * u2;
    const auto u8 = u4 * u4;
    const auto u12 = u6 * u6;
    const auto twelve = f->from_int(12);
    const auto six = f->from_int(6);

    if (!(u2 * e2.b2() == ec.b2() + twelve * ch.r))
        fail("b2 law");
    if (!(u4 * e2.b4() == ec.b4() + ch.r * ec.b2() + six * ch.r * ch.r))
        fail("b4 law");
    if (!(u6 * e2.b6() ==
          ec.b6() + f->from_int(2) * ch.r * ec.b4() + ch.r * ch.r * ec.b2() +
              f->from_int(4) * ch.r * ch.r * ch.r))
        fail("b6 law");
    if (!(u8 * e2.b8() ==
          ec.b8() + f->from_int(3) * ch.r * ec.b6() + f->from_int(3) * ch.r * ch.r * ec.b4() +
              ch.r * ch.r * ch.r * ec.b2() + f->from_int(3) * ch.r * ch.r * ch.r * ch.r))
        fail("b8 law");
    if (!(u12 * e2.discriminant() == ec.discriminant()))
        fail("discriminant law");

    if (tm.n() == 3)
    {
        const torsor::Space sp{3};
        for (const auto& t : sp.all_partitions())
        {
            const auto x2 = [&](torsor::Vec2 v) {
                return ec.map_point(ch, tm.point_of(v)).x();
            };
            const auto w = w3_root(tm, t).value;
            const auto w2v = w3_from_xs(e2, x2(t[0]), x2(t[1]), x2(t[2]), x2(t[3]));
            if (!(w == u4 * w2v))
                fail("w3 covariance");
        }
    }
    else
    {
        if (!ch.s.is_zero() || !ch.t.is_zero())
            throw std::invalid_argument("4-torsion checks need a change with s = t = 0");
        require_square_model(ec);
        const torsor::Space sp{4};
        const auto u3 = u2 * ch.u;
        for (const auto& t : sp.t4_classes())
        {
            const auto pt2 = [&](torsor::Vec2 v) { return ec.map_point(ch, tm.point_of(v)); };
            const auto w = w4_tilde_root(tm, t).value;
            const auto w2v = w4_tilde_from_points(e2, pt2(t[0]), pt2(t[1]), pt2(t[2]));
            if (!(w == u3 * w2v))
                fail("w4 covariance");
        }
    }
    return rep;
}

}  // namespace discroot
