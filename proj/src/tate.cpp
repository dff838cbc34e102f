// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/tate.hpp"

namespace discroot {

namespace {

int zeta_order(Cyclotomic::Kind kind)
{
    switch (kind)
    {
    case Cyclotomic::Kind::Gauss:
        return 4;
    case Cyclotomic::Kind::Eisenstein:
        return 3;
    default:
        return 1;
    }
}

Cyclotomic zeta_pow(Cyclotomic::Kind kind, int a)
{
    const int ord = zeta_order(kind);
    a %= ord;
    if (a < 0)
        a += ord;
    if (kind == Cyclotomic::Kind::Gauss)
        return Cyclotomic::i().pow(static_cast<unsigned>(a));
    if (kind == Cyclotomic::Kind::Eisenstein)
        return Cyclotomic::zeta3().pow(static_cast<unsigned>(a));
    return {1};
}

// sum_{j >= 1} j c^j z^{d j}, coefficients of t/(1-t)^2 at t = c z^d
LaurentSeries f_tail(const Cyclotomic& c, long d, long prec)
{
    auto s = LaurentSeries::zero(prec);
    auto cp = Cyclotomic{1};
    for (long j = 1; d * j < prec; ++j)
    {
        cp = cp * c;
        s = s + LaurentSeries::monomial(cp * Cyclotomic{j}, d * j);
    }
    return s;
}

// sum_{j >= 2} (j(j-1)/2) c^j z^{d j}, coefficients of t^2/(1-t)^3
LaurentSeries g_tail(const Cyclotomic& c, long d, long prec)
{
    auto s = LaurentSeries::zero(prec);
    auto cp = c;
    for (long j = 2; d * j < prec; ++j)
    {
        cp = cp * c;
        s = s + LaurentSeries::monomial(cp * Cyclotomic{j * (j - 1) / 2}, d * j);
    }
    return s;
}

Cyclotomic f_const(const Cyclotomic& c)
{
    const auto onem = Cyclotomic{1} - c;
    return c / (onem * onem);
}

Cyclotomic g_const(const Cyclotomic& c)
{
    const auto onem = Cyclotomic{1} - c;
    return c * c / (onem * onem * onem);
}

struct Parameter {
    Cyclotomic u;        // zeta^a, the unit part
    Cyclotomic ui;       // zeta^{-a}
    long b;              // z-exponent reduced into [0, step)
    bool constant;       // b == 0
};

Parameter reduce_parameter(const TateModel& m, int a, long b)
{
    Parameter p;
    p.u = zeta_pow(m.kind, a);
    p.ui = zeta_pow(m.kind, -a);
    p.b = b % m.step;
    if (p.b < 0)
        p.b += m.step;
    p.constant = p.b == 0;
    if (p.constant && p.u == Cyclotomic{1})
        throw std::invalid_argument("parameter lies in q^Z and names the origin");
    return p;
}

}  // namespace

TateModel tate_model(Cyclotomic::Kind kind, int step, long prec)
{
    if (step < 1 || prec < 2)
        throw std::invalid_argument("model needs step >= 1 and precision >= 2");
    auto a4 = LaurentSeries::zero(prec);
    auto a6 = LaurentSeries::zero(prec);
    for (long m = 1; step * m < prec; ++m)
    {
        const auto s3 = sigma_power(3, static_cast<unsigned long>(m));
        const auto s5 = sigma_power(5, static_cast<unsigned long>(m));
        a4 = a4 + LaurentSeries::monomial(Cyclotomic{Rational{-5} * s3}, step * m);
        a6 = a6 + LaurentSeries::monomial(
                      Cyclotomic{(Rational{-7} * s5 - Rational{5} * s3) / 12}, step * m);
    }
    Curve<LaurentSeries> e{LaurentSeries::constant(Cyclotomic{1}), LaurentSeries{},
                           LaurentSeries{}, std::move(a4), std::move(a6)};
    return {kind, step, prec, std::move(e)};
}

LaurentSeries tate_delta(const TateModel& m)
{
    return eta_power_product(m.step, 24, m.prec).shifted(m.step);
}

LaurentSeries tate_x(const TateModel& m, int a, long b)
{
    const auto p = reduce_parameter(m, a, b);
    const long prec = m.prec;
    auto x = LaurentSeries::zero(prec);
    for (long k = 1; m.step * k < prec; ++k)
        x = x + LaurentSeries::monomial(Cyclotomic{Rational{-2} * sigma_power(1, k)},
                                        m.step * k);
    x = x + (p.constant ? LaurentSeries::constant(f_const(p.u), prec)
                        : f_tail(p.u, p.b, prec));
    for (long mm = 1; m.step * mm - p.b < prec; ++mm)
    {
        x = x + f_tail(p.u, m.step * mm + p.b, prec);
        x = x + f_tail(p.ui, m.step * mm - p.b, prec);
    }
    return x;
}

LaurentSeries tate_y(const TateModel& m, int a, long b)
{
    const auto p = reduce_parameter(m, a, b);
    const long prec = m.prec;
    auto y = LaurentSeries::zero(prec);
    for (long k = 1; m.step * k < prec; ++k)
        y = y + LaurentSeries::monomial(Cyclotomic{sigma_power(1, k)}, m.step * k);
    y = y + (p.constant ? LaurentSeries::constant(g_const(p.u), prec)
                        : g_tail(p.u, p.b, prec));
    for (long mm = 1; m.step * mm - p.b < prec; ++mm)
    {
        y = y + g_tail(p.u, m.step * mm + p.b, prec);
        const long d = m.step * mm - p.b;
        y = y - f_tail(p.ui, d, prec) - g_tail(p.ui, d, prec);
    }
    return y;
}

Point<LaurentSeries> tate_point(const TateModel& m, int a, long b)
{
    return Point<LaurentSeries>::affine(tate_x(m, a, b), tate_y(m, a, b));
}

LaurentSeries delta_map(int n, int a, long prec)
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("delta map is defined for n = 3 and n = 4");
    const auto kind = n == 3 ? Cyclotomic::Kind::Eisenstein : Cyclotomic::Kind::Gauss;
    const auto unit = LaurentSeries::monomial(zeta_pow(kind, a), 1);
    return unit * eta_power_product(n, 24 / n, prec);
}

LaurentSeries tate_w3_series(long prec)
{
    const long inner = prec + 8;
    const auto m = tate_model(Cyclotomic::Kind::Eisenstein, 3, inner);
    const auto xz = tate_x(m, 0, 1);
    const auto xzeta = tate_x(m, 1, 0);
    const auto xzz = tate_x(m, 1, 1);
    const auto xzz2 = tate_x(m, 1, 2);
    const auto w = m.curve.b4() - LaurentSeries::constant(Cyclotomic{3}) *
                                      (xzeta * xz + xzz * xzz2);
    if (w.prec() < prec)
        throw std::logic_error("precision margin too small");
    return w.truncated(prec);
}

LaurentSeries tate_w4_series(long prec)
{
    const long inner = prec + 8;
    const auto m = tate_model(Cyclotomic::Kind::Gauss, 4, inner);
    const auto half = Cyclotomic{Rational{1} / 2};
    const auto yy = [&](int a, long b) {
        return tate_y(m, a, b) + LaurentSeries::constant(half) * tate_x(m, a, b);
    };
    const auto slope = [&](int a1, long b1, int a2, long b2) {
        return (yy(a1, b1) - yy(a2, b2)) / (tate_x(m, a1, b1) - tate_x(m, a2, b2));
    };
    // triple (z, i, (iz)^{-1}) with companions (-z, -i z^2, -i z)
    const auto w = LaurentSeries::constant(Cyclotomic{2}) * slope(0, 1, 2, 1) *
                   slope(1, 0, 3, 2) * slope(3, 3, 3, 1);
    if (w.prec() < prec)
        throw std::logic_error("precision margin too small");
    return w.truncated(prec);
}

TateReport tate_root_check(int n, long prec)
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("the check covers n = 3 and n = 4");
    if (prec < 2)
        throw std::invalid_argument("precision must separate the sign of the leading term");
    TateReport rep;
    const auto note = [&rep](const std::string& name, bool pass, const char* detail) {
        rep.properties.emplace_back(name, pass);
        if (!pass)
        {
            rep.ok = false;
            rep.failures.push_back(name + ": " + detail);
        }
    };

    const long inner = prec + 8;
    const auto kind = n == 3 ? Cyclotomic::Kind::Eisenstein : Cyclotomic::Kind::Gauss;
    const auto m = tate_model(kind, n, inner);
    const auto& e = m.curve;

    note("discriminant-series", e.discriminant().agrees_with(tate_delta(m)),
         "model discriminant differs from the product expansion");

    const std::vector<std::pair<int, long>> params =
        n == 3 ? std::vector<std::pair<int, long>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}
               : std::vector<std::pair<int, long>>{{0, 1}, {1, 0}, {3, 3},
                                                   {2, 1}, {3, 2}, {3, 1}};
    bool membership = true;
    bool torsion = true;
    for (const auto& [a, b] : params)
    {
        const auto residual = e.equation_residual(tate_x(m, a, b), tate_y(m, a, b));
        membership = membership && !residual.known_nonzero();
        torsion = torsion && e.mul(n, tate_point(m, a, b)).is_infinity();
    }
    note("curve-membership", membership, "parametrized point misses the curve");
    note("torsion-order", torsion, "parametrized point is not n-torsion");

    if (n == 4)
    {
        // doubling the triple must land on the three 2-torsion points
        const std::array<std::array<long, 4>, 3> doubles{{
            {0, 1, 0, 2},  // z -> z^2
            {1, 0, 2, 0},  // i -> -1
            {3, 3, 2, 2},  // (iz)^{-1} -> -z^2
        }};
        bool structure = true;
        for (const auto& d : doubles)
        {
            const auto lhs = e.mul(2, tate_point(m, static_cast<int>(d[0]), d[1]));
            const auto rhs = tate_point(m, static_cast<int>(d[2]), d[3]);
            structure = structure && lhs == rhs;
        }
        note("torsion-structure", structure,
             "doubled triple entry is not the expected 2-torsion point");
    }

    const auto w = n == 3 ? tate_w3_series(prec) : tate_w4_series(prec);
    const auto expected = delta_map(n, 0, prec);
    note("root-series", w.agrees_with(expected),
         "root series differs from the canonical torsor value");
    note("leading-term", w.valuation() == 1 && w.coefficient(1) == Cyclotomic{1},
         "root series does not start with z");
    note("root-power", w.pow(static_cast<unsigned>(n)).agrees_with(tate_delta(m)),
         "root series to the n-th power misses the discriminant");

    return rep;
}

}  // namespace discroot
