// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/torsion.hpp"

#include <algorithm>

namespace discroot {

std::vector<Point<FieldElement>> lift_x(const Curve<FieldElement>& e, const FieldElement& x)
{
    const auto& f = x.field();
    if (f->characteristic() == 2)
        throw std::domain_error("point lifting requires odd characteristic");
    // y^2 + (a1 x + a3) y = rhs(x); complete the square in y
    const auto lin = e.a1() * x + e.a3();
    const auto rhs = x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
    const auto disc = lin * lin + f->from_int(4) * rhs;
    const auto half = f->from_int(2).inv();
    std::vector<Point<FieldElement>> out;
    for (const auto& s : field_sqrt(disc))
        out.push_back(Point<FieldElement>::affine(x, (s - lin) * half));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.y() < b.y();
    });
    return out;
}

Curve<FieldElement> embed_curve(const Curve<FieldElement>& e, const Embedding& emb)
{
    return {emb(e.a1()), emb(e.a2()), emb(e.a3()), emb(e.a4()), emb(e.a6())};
}

namespace {

using Pt = Point<FieldElement>;

/// Distinct solutions x of x(2P) = target, i.e. the x coordinates of the
/// halves of the point with x coordinate `target`.
std::vector<FieldElement> halving_xs(const Curve<FieldElement>& e, const FieldElement& target)
{
    const auto& f = target.field();
    const auto one = f->one();
    // x^4 - b4 x^2 - 2 b6 x - b8 - target (4 x^3 + b2 x^2 + 2 b4 x + b6)
    const auto b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
    const Polynomial num(f, {-b8, -f->from_int(2) * b6, -b4, f->zero(), one});
    const Polynomial den(f, {b6, f->from_int(2) * b4, b2, f->from_int(4)});
    const auto quartic = num - den * target;
    auto roots = poly_roots(quartic);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All points of E[n] if the full n-torsion is rational over the coefficient
/// field; empty otherwise. n is 3 or 4, characteristic at least 5.
std::vector<Pt> collect_torsion(const Curve<FieldElement>& e, int n)
{
    const auto& f = e.a1().field();
    std::vector<Pt> pts{Pt::infinity()};
    if (n == 3)
    {
        const auto cs = three_division_coeffs(e);
        auto xs = poly_roots(Polynomial(f, {cs[0], cs[1], cs[2], cs[3], cs[4]}));
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        if (xs.size() != 4)
            return {};
        for (const auto& x : xs)
        {
            const auto lifts = lift_x(e, x);
            if (lifts.size() != 2)
                return {};
            pts.insert(pts.end(), lifts.begin(), lifts.end());
        }
    }
    else
    {
        auto two_xs = poly_roots(
            Polynomial(f, {e.b6(), f->from_int(2) * e.b4(), e.b2(), f->from_int(4)}));
        two_xs.erase(std::unique(two_xs.begin(), two_xs.end()), two_xs.end());
        if (two_xs.size() != 3)
            return {};
        for (const auto& x : two_xs)
        {
            const auto lifts = lift_x(e, x);
            if (lifts.size() != 1)
                return {};
            pts.push_back(lifts.front());
        }
        for (const auto& x2 : two_xs)
        {
            std::vector<Pt> halves;
            for (const auto& xt : halving_xs(e, x2))
                for (const auto& pt : lift_x(e, xt))
                    halves.push_back(pt);
            if (halves.size() != 4)
                return {};
            pts.insert(pts.end(), halves.begin(), halves.end());
        }
    }
    if (pts.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        return {};
    for (const auto& pt : pts)
        if (!e.contains(pt) || !e.mul(n, pt).is_infinity())
            return {};
    return pts;
}

bool point_less(const Pt& a, const Pt& b)
{
    if (a.is_infinity() || b.is_infinity())
        return !b.is_infinity() && a.is_infinity();
    if (!(a.x() == b.x()))
        return a.x() < b.x();
    return a.y() < b.y();
}

}  // namespace

TorsionModule::TorsionModule(Curve<FieldElement> base_curve, int n) : n_{n}
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("torsion level must be 3 or 4");
    base_field_ = base_curve.a1().field();
    if (base_field_->characteristic() < 5)
        throw std::invalid_argument("torsion search requires characteristic at least 5");
    if (ring_is_zero(base_curve.discriminant()))
        throw std::invalid_argument("curve is singular");
    const auto p = base_field_->characteristic();
    const auto kb = base_field_->degree();

    std::vector<Pt> pts;
    for (unsigned m = kb; m <= 16; m += kb)
    {
        auto cand = m == kb ? base_field_ : Field::extension(p, m);
        if (!cand->order_fits_u128())
            break;
        const Embedding emb(base_field_, cand);
        auto lifted = embed_curve(base_curve, emb);
        pts = collect_torsion(lifted, n);
        if (!pts.empty())
        {
            field_ = std::move(cand);
            curve_.emplace(std::move(lifted));
            break;
        }
    }
    if (pts.empty())
        throw std::runtime_error("full torsion not found within the supported extensions");

    std::sort(pts.begin(), pts.end(), point_less);

    // deterministic basis: smallest point of exact order n, then the smallest
    // partner spanning all n^2 combinations
    const auto& ec = *curve_;
    auto exact_order = [&](const Pt& pt) {
        if (pt.is_infinity())
            return false;
        for (int k = 1; k < n_; ++k)
            if (ec.mul(k, pt).is_infinity())
                return false;
        return true;
    };
    bool found = false;
    for (const auto& cp : pts)
    {
        if (!exact_order(cp))
            continue;
        for (const auto& cq : pts)
        {
            if (!exact_order(cq))
                continue;
            std::vector<PointKey> span;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    span.push_back(key_of(ec.add(ec.mul(a, cp), ec.mul(b, cq))));
            std::sort(span.begin(), span.end());
            if (std::adjacent_find(span.begin(), span.end()) == span.end())
            {
                p_ = cp;
                q_ = cq;
                found = true;
                break;
            }
        }
        if (found)
            break;
    }
    if (!found)
        throw std::logic_error("no basis found in collected torsion");
    index_points();
}

TorsionModule::PointKey TorsionModule::key_of(const Pt& pt)
{
    if (pt.is_infinity())
        return {};
    return {pt.x().coeffs(), pt.y().coeffs()};
}

void TorsionModule::index_points()
{
    table_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), Pt::infinity());
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
        {
            const auto pt = curve_->add(curve_->mul(a, p_), curve_->mul(b, q_));
            table_[static_cast<size_t>(a * n_ + b)] = pt;
            index_[key_of(pt)] = torsor::Vec2{a, b};
        }
}

Pt TorsionModule::point_of(torsor::Vec2 v) const
{
    const torsor::Space sp{n_};
    const auto w = torsor::Vec2{sp.mod(v.a), sp.mod(v.b)};
    return table_[static_cast<size_t>(w.a * n_ + w.b)];
}

torsor::Vec2 TorsionModule::coords_of(const Pt& pt) const
{
    const auto it = index_.find(key_of(pt));
    if (it == index_.end())
        throw std::invalid_argument("point is not in the torsion subgroup");
    return it->second;
}

std::vector<Pt> TorsionModule::all_points() const
{
    auto out = table_;
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

Pt TorsionModule::frobenius_point(const Pt& pt) const
{
    if (pt.is_infinity())
        return pt;
    auto x = pt.x();
    auto y = pt.y();
    for (unsigned i = 0; i < base_field_->degree(); ++i)
    {
        x = x.frobenius();
        y = y.frobenius();
    }
    return Pt::affine(x, y);
}

torsor::Mat2 TorsionModule::frobenius_matrix() const
{
    const auto fp = coords_of(frobenius_point(p_));
    const auto fq = coords_of(frobenius_point(q_));
    return {fp.a, fq.a, fp.b, fq.b};
}

}  // namespace discroot
