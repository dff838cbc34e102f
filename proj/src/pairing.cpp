// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/pairing.hpp"

namespace discroot {

namespace {

using Pt = Point<FieldElement>;
using Ec = Curve<FieldElement>;

/// Value at the affine point x of the line through a and b: the chord,
/// tangent, or vertical used by the group law at that configuration.
FieldElement line_eval(const Ec& e, const Pt& a, const Pt& b, const Pt& x)
{
    const auto& f = x.x().field();
    if (a.is_infinity() && b.is_infinity())
        return f->one();
    if (a.is_infinity())
        return x.x() - b.x();  // vertical through b
    if (b.is_infinity())
        return x.x() - a.x();

    if (a.x() == b.x())
    {
        const auto den = f->from_int(2) * a.y() + e.a1() * a.x() + e.a3();
        if (!(a.y() == b.y()) || den.is_zero())
            return x.x() - a.x();  // vertical: b = -a, or tangent at a 2-torsion point
        const auto lambda =
            (f->from_int(3) * a.x() * a.x() + f->from_int(2) * e.a2() * a.x() + e.a4() -
             e.a1() * a.y()) /
            den;
        return x.y() - a.y() - lambda * (x.x() - a.x());
    }
    const auto lambda = (b.y() - a.y()) / (b.x() - a.x());
    return x.y() - a.y() - lambda * (x.x() - a.x());
}

/// f_{n,p}(u) for the function with divisor n(p) - n(0), built from the
/// addition chain f_{m+1} = f_m * (line through mp and p) / (vertical at
/// (m+1)p). Every line in the chain meets the curve inside <p>, so the
/// evaluation cannot vanish when u lies outside that subgroup.
FieldElement miller(const Ec& e, const Pt& p, int n, const Pt& u)
{
    const auto& f = u.x().field();
    auto num = f->one();
    auto den = f->one();
    auto v = p;
    for (int m = 1; m < n; ++m)
    {
        const auto l = line_eval(e, v, p, u);
        if (l.is_zero())
            throw std::logic_error("pairing evaluation point on a chain line");
        num = num * l;
        const auto next = e.add(v, p);
        if (!next.is_infinity())
        {
            const auto vert = u.x() - next.x();
            if (vert.is_zero())
                throw std::logic_error("pairing evaluation point on a chain vertical");
            den = den * vert;
        }
        v = next;
    }
    return num / den;
}

}  // namespace

FieldElement weil_pairing(const Ec& e, const Pt& p, const Pt& q, int n)
{
    const auto& f = e.a1().field();
    if (p.is_infinity() || q.is_infinity())
        return f->one();
    if (!e.mul(n, p).is_infinity() || !e.mul(n, q).is_infinity())
        throw std::invalid_argument("pairing arguments must be n-torsion points");

    // Dependent points pair trivially; this also removes every configuration
    // in which the Miller chains could degenerate.
    for (int m = 0; m < n; ++m)
        if (e.mul(m, p) == q || e.mul(m, q) == p)
            return f->one();

    const auto value = miller(e, p, n, q) / miller(e, q, n, p);
    return n % 2 == 0 ? value : -value;
}

FieldElement pairing_of_wedge(const TorsionModule& tm, int c)
{
    const auto base = weil_pairing(tm.curve(), tm.gen_p(), tm.gen_q(), tm.n());
    const torsor::Space sp{tm.n()};
    return base.pow(static_cast<u128>(sp.mod(c)));
}

}  // namespace discroot
