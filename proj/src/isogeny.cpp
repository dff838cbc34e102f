// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/isogeny.hpp"

#include <random>
#include <stdexcept>

namespace discroot {

namespace {

bool is_small_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_cubic_model(const Curve<FieldElement>& e)
{
    const auto p = e.a1().field()->characteristic();
    if (p == 2 || p == 3)
        throw std::invalid_argument("the quotient construction needs characteristic > 3");
    if (!e.a1().is_zero() || !e.a2().is_zero() || !e.a3().is_zero())
        throw std::invalid_argument("the quotient construction needs y^2 = cubic form");
}

/// Reduce a point of l-power order to exact order ell.
Point<FieldElement> reduce_to_order(const Curve<FieldElement>& e,
                                    Point<FieldElement> t, long long ell)
{
    while (!t.is_infinity() && !e.mul(ell, t).is_infinity())
        t = e.mul(ell, t);
    return t;
}

}  // namespace

long long group_order(const Curve<FieldElement>& e)
{
    const auto f = e.a1().field();
    if (f->characteristic() == 2)
        throw std::invalid_argument("point count by quadratic character needs odd characteristic");
    if (!f->order_fits_u128() || f->order() > 10000)
        throw std::invalid_argument("exhaustive point count is limited to 10^4 elements");
    long long count = 1;  // infinity
    const auto four = f->from_int(4);
    for (const auto& x : f->all_elements())
    {
        // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
        const auto lin = e.a1() * x + e.a3();
        const auto rhs =
            four * ((x + e.a2()) * x * x + e.a4() * x + e.a6()) + lin * lin;
        if (rhs.is_zero())
            count += 1;
        else if (nth_power_class(rhs, 2))
            count += 2;
    }
    return count;
}

long long group_order_power(long long n1, long long q, unsigned k)
{
    if (k == 0 || q < 2)
        throw std::invalid_argument("need a prime power q and k >= 1");
    const long long a = q + 1 - n1;  // Frobenius trace
    long long qk = 1;
    long long s_prev = 2, s = a;  // power sums of the Frobenius eigenvalues
    for (unsigned i = 1; i <= k; ++i)
    {
        if (qk > (1LL << 60) / q)
            throw std::overflow_error("field too large for the trace recurrence");
        qk *= q;
        if (i == 1)
            continue;
        const long long next = a * s - q * s_prev;
        s_prev = s;
        s = next;
    }
    return qk + 1 - s;
}

std::optional<Point<FieldElement>> find_kernel_point(const Curve<FieldElement>& e,
                                                     long long ell)
{
    if (!is_small_prime(ell))
        throw std::invalid_argument("kernel order must be prime");
    const long long n = group_order(e);
    if (n % ell != 0)
        return std::nullopt;
    long long cofactor = n;
    while (cofactor % ell == 0)
        cofactor /= ell;
    const auto f = e.a1().field();
    for (const auto& x : f->all_elements())
    {
        for (const auto& p : lift_x(e, x))
        {
            const auto t = reduce_to_order(e, e.mul(cofactor, p), ell);
            if (!t.is_infinity())
                return t;
        }
    }
    return std::nullopt;
}

Isogeny velu_isogeny(const Curve<FieldElement>& e, const Point<FieldElement>& kernel,
                     long long ell)
{
    require_cubic_model(e);
    if (!is_small_prime(ell))
        throw std::invalid_argument("kernel order must be prime");
    if (kernel.is_infinity() || !e.mul(ell, kernel).is_infinity())
        throw std::invalid_argument("kernel point does not have the claimed order");
    if (!e.contains(kernel))
        throw std::invalid_argument("kernel point is not on the curve");

    std::vector<Point<FieldElement>> kernel_points;
    auto q = kernel;
    for (long long m = 1; m < ell; ++m)
    {
        kernel_points.push_back(q);
        q = e.add(q, kernel);
    }

    // codomain coefficients from the even kernel sums
    const auto f = e.a1().field();
    const auto& a = e.a4();
    const auto& b = e.a6();
    auto t = f->zero();
    auto w = f->zero();
    const auto three = f->from_int(3);
    std::vector<bool> used(kernel_points.size(), false);
    for (std::size_t i = 0; i < kernel_points.size(); ++i)
    {
        if (used[i])
            continue;
        const auto& pt = kernel_points[i];
        const bool order2 = e.mul(2, pt).is_infinity();
        // pair pt with -pt; an order-2 point is its own negative
        for (std::size_t j = i + 1; j < kernel_points.size(); ++j)
            if (kernel_points[j] == e.neg(pt))
                used[j] = true;
        const auto x = pt.x();
        const auto y = pt.y();
        const auto tq = order2 ? three * x * x + a
                               : f->from_int(6) * x * x + f->from_int(2) * a;
        const auto uq = f->from_int(4) * y * y;
        t = t + tq;
        w = w + uq + tq * x;
    }
    Curve<FieldElement> codomain{f->zero(), f->zero(), f->zero(),
                                 a - f->from_int(5) * t, b - f->from_int(7) * w};
    if (codomain.discriminant().is_zero())
        throw std::logic_error("quotient curve is singular");
    return {e, std::move(codomain), kernel, ell, std::move(kernel_points)};
}

Point<FieldElement> isogeny_image(const Isogeny& phi, const Point<FieldElement>& p)
{
    if (p.is_infinity())
        return Point<FieldElement>::infinity();
    for (const auto& q : phi.kernel_points)
        if (p == q)
            return Point<FieldElement>::infinity();
    auto x = p.x();
    auto y = p.y();
    for (const auto& q : phi.kernel_points)
    {
        const auto s = phi.domain.add(p, q);
        x = x + s.x() - q.x();
        y = y + s.y() - q.y();
    }
    return Point<FieldElement>::affine(x, y);
}

Isogeny embed_isogeny(const Isogeny& phi, const Embedding& emb)
{
    const auto lift = [&emb](const Point<FieldElement>& p) {
        if (p.is_infinity())
            return Point<FieldElement>::infinity();
        return Point<FieldElement>::affine(emb(p.x()), emb(p.y()));
    };
    std::vector<Point<FieldElement>> kernel_points;
    for (const auto& q : phi.kernel_points)
        kernel_points.push_back(lift(q));
    return {embed_curve(phi.domain, emb), embed_curve(phi.codomain, emb),
            lift(phi.kernel_generator), phi.degree, std::move(kernel_points)};
}

std::optional<Isogeny> dual_isogeny(const Isogeny& phi, unsigned max_degree)
{
    const auto base = phi.domain.a1().field();
    if (!base->order_fits_u128() || base->order() > 10000)
        throw std::invalid_argument("dual search is limited to base fields of at most 10^4 elements");
    const auto q = static_cast<long long>(base->order());
    const long long n1 = group_order(phi.domain);
    const auto ell = phi.degree;
    for (unsigned k = 1; k <= max_degree; ++k)
    {
        const auto ext_degree = k * base->degree();
        if (ext_degree > 16)
            break;
        long long nk = 0;
        try
        {
            nk = group_order_power(n1, q, k);
        }
        catch (const std::overflow_error&)
        {
            break;
        }
        if (nk % (ell * ell) != 0)
            continue;
        const auto ext = k == 1 ? base
                                : Field::extension(base->characteristic(), ext_degree);
        const Embedding emb{base, ext};
        const auto lifted = embed_isogeny(phi, emb);
        long long cofactor = nk;
        while (cofactor % ell == 0)
            cofactor /= ell;
        const auto field_order = ext->order();
        // deterministic x walk; the independent direction appears quickly
        for (u128 i = 0; i < field_order; ++i)
        {
            for (const auto& p : lift_x(lifted.domain, ext->element_at(i)))
            {
                const auto t =
                    reduce_to_order(lifted.domain, lifted.domain.mul(cofactor, p), ell);
                if (t.is_infinity())
                    continue;
                const auto img = isogeny_image(lifted, t);
                if (img.is_infinity())
                    continue;  // t generates the kernel itself
                return velu_isogeny(lifted.codomain, img, ell);
            }
        }
    }
    return std::nullopt;
}

bool dual_composes_to_scalar(const Isogeny& phi, const Isogeny& psi, int samples,
                             unsigned long long seed)
{
    const auto f = phi.domain.a1().field();
    if (!f->same_as(*psi.domain.a1().field()))
        throw std::invalid_argument("the two isogenies must live over one field");
    if (!(phi.codomain.a4() == psi.domain.a4()) ||
        !(phi.codomain.a6() == psi.domain.a6()))
        throw std::invalid_argument("psi must start where phi lands");

    // candidate isomorphisms (x, y) -> (u^2 x, u^3 y) from psi's codomain
    const auto& a = phi.domain.a4();
    const auto& b = phi.domain.a6();
    const auto& ad = psi.codomain.a4();
    const auto& bd = psi.codomain.a6();
    if (a.is_zero() != ad.is_zero() || b.is_zero() != bd.is_zero())
        return false;
    std::vector<FieldElement> units;
    if (!a.is_zero() && !b.is_zero())
    {
        const auto u2 = (b * ad) / (bd * a);
        for (const auto& u : field_sqrt(u2))
            if (u.pow(4) * ad == a && u.pow(6) * bd == b)
                units.push_back(u);
    }
    else
    {
        const unsigned exp = a.is_zero() ? 6 : 4;
        const auto target = a.is_zero() ? b / bd : a / ad;
        std::vector<FieldElement> coeffs(exp + 1, f->zero());
        coeffs[0] = -target;
        coeffs[exp] = f->one();
        for (const auto& u : poly_roots(Polynomial{f, coeffs}))
            units.push_back(u);
    }
    if (units.empty())
        return false;

    std::mt19937_64 rng{seed};
    const auto order = f->order();
    std::vector<Point<FieldElement>> pts;
    while (pts.size() < static_cast<std::size_t>(samples))
    {
        const auto x = f->element_at(rng() % static_cast<unsigned long long>(order));
        for (const auto& p : lift_x(phi.domain, x))
            if (pts.size() < static_cast<std::size_t>(samples))
                pts.push_back(p);
    }

    for (const auto& u : units)
    {
        const auto u2 = u * u;
        const auto u3 = u2 * u;
        bool all = true;
        for (const auto& p : pts)
        {
            const auto through = isogeny_image(psi, isogeny_image(phi, p));
            const auto pulled =
                through.is_infinity()
                    ? Point<FieldElement>::infinity()
                    : Point<FieldElement>::affine(u2 * through.x(), u3 * through.y());
            if (!(pulled == phi.domain.mul(phi.degree, p)))
            {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

std::optional<bool> coates_class(const Curve<FieldElement>& e, long long ell)
{
    const auto kernel = find_kernel_point(e, ell);
    if (!kernel)
        return std::nullopt;
    const auto phi = velu_isogeny(e, *kernel, ell);
    const auto ratio =
        e.discriminant() / phi.codomain.discriminant().pow(static_cast<u128>(ell));
    return nth_power_class(ratio, 12);
}

CoatesSweep coates_sweep(long long p, long long ell)
{
    const auto f = Field::prime(static_cast<u64>(p));
    CoatesSweep sweep;
    sweep.p = p;
    sweep.degree = ell;
    for (long long a = 0; a < p; ++a)
    {
        for (long long b = 0; b < p; ++b)
        {
            const Curve<FieldElement> e{f->zero(), f->zero(), f->zero(),
                                        f->from_int(a), f->from_int(b)};
            if (e.discriminant().is_zero())
                continue;
            sweep.curves_total += 1;
            const auto verdict = coates_class(e, ell);
            if (!verdict)
                continue;
            sweep.curves_with_isogeny += 1;
            (*verdict ? sweep.holds : sweep.fails) += 1;
        }
    }
    return sweep;
}

}  // namespace discroot
