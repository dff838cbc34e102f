// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "discroot/field.hpp"

#include <optional>
#include <utility>

namespace discroot {

// Ring adaptors used by the generic curve code. A coefficient ring supplies
// +, -, *, /, unary -, and these three hooks (extendable through overloads).
inline bool ring_is_zero(const FieldElement& x)
{
    return x.is_zero();
}

inline FieldElement ring_from_int(const FieldElement& exemplar, long long v)
{
    return exemplar.field()->from_int(v);
}

inline bool ring_eq(const FieldElement& a, const FieldElement& b)
{
    return a == b;
}

/// Point on a Weierstrass curve, affine or the point at infinity.
template <typename R>
class Point {
public:
    Point() = default;
    static Point infinity() { return {}; }
    static Point affine(R x, R y) { return Point(std::move(x), std::move(y)); }

    bool is_infinity() const { return !xy_.has_value(); }
    const R& x() const { return xy_->first; }
    const R& y() const { return xy_->second; }

    friend bool operator==(const Point& a, const Point& b)
    {
        if (a.is_infinity() || b.is_infinity())
            return a.is_infinity() == b.is_infinity();
        return ring_eq(a.x(), b.x()) && ring_eq(a.y(), b.y());
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    Point(R x, R y) : xy_{std::in_place, std::move(x), std::move(y)} {}
    std::optional<std::pair<R, R>> xy_;
};

/// Change of variables x = u^2 X + r, y = u^3 Y + s u^2 X + t with u a unit.
template <typename R>
struct Transform {
    R u, r, s, t;
};

/// Elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a
/// commutative ring with the division the group law requires.
template <typename R>
class Curve {
public:
    Curve(R a1, R a2, R a3, R a4, R a6)
      : a1_{std::move(a1)}, a2_{std::move(a2)}, a3_{std::move(a3)}, a4_{std::move(a4)},
        a6_{std::move(a6)}
    {}

    const R& a1() const { return a1_; }
    const R& a2() const { return a2_; }
    const R& a3() const { return a3_; }
    const R& a4() const { return a4_; }
    const R& a6() const { return a6_; }

    R c(long long v) const { return ring_from_int(a1_, v); }

    R b2() const { return a1_ * a1_ + c(4) * a2_; }
    R b4() const { return c(2) * a4_ + a1_ * a3_; }
    R b6() const { return a3_ * a3_ + c(4) * a6_; }
    R b8() const
    {
        return a1_ * a1_ * a6_ + c(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
               a4_ * a4_;
    }
    R discriminant() const
    {
        const R B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - c(8) * B4 * B4 * B4 - c(27) * B6 * B6 + c(9) * B2 * B4 * B6;
    }

    bool contains(const Point<R>& p) const
    {
        if (p.is_infinity())
            return true;
        return ring_is_zero(equation_residual(p.x(), p.y()));
    }

    R equation_residual(const R& x, const R& y) const
    {
        return y * y + a1_ * x * y + a3_ * y - (x * x * x + a2_ * x * x + a4_ * x + a6_);
    }

    Point<R> neg(const Point<R>& p) const
    {
        if (p.is_infinity())
            return p;
        return Point<R>::affine(p.x(), -p.y() - a1_ * p.x() - a3_);
    }

    Point<R> add(const Point<R>& p, const Point<R>& q) const
    {
        if (p.is_infinity())
            return q;
        if (q.is_infinity())
            return p;
        const R &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
        R lambda = c(0), nu = c(0);
        if (ring_eq(x1, x2))
        {
            if (!ring_eq(y1, y2))
                return Point<R>::infinity();  // q = -p
            const R den = c(2) * y1 + a1_ * x1 + a3_;
            if (ring_is_zero(den))
                return Point<R>::infinity();  // 2-torsion doubling
            lambda = (c(3) * x1 * x1 + c(2) * a2_ * x1 + a4_ - a1_ * y1) / den;
            nu = (-(x1 * x1 * x1) + a4_ * x1 + c(2) * a6_ - a3_ * y1) / den;
        }
        else
        {
            const R den = x2 - x1;
            lambda = (y2 - y1) / den;
            nu = (y1 * x2 - y2 * x1) / den;
        }
        const R x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
        const R y3 = -(lambda + a1_) * x3 - nu - a3_;
        return Point<R>::affine(x3, y3);
    }

    /// Slope of the line through two distinct affine points.
    R chord_slope(const Point<R>& p, const Point<R>& q) const
    {
        if (p.is_infinity() || q.is_infinity() || ring_eq(p.x(), q.x()))
            throw std::invalid_argument("chord slope needs distinct affine x coordinates");
        return (q.y() - p.y()) / (q.x() - p.x());
    }

    Point<R> mul(long long k, Point<R> p) const
    {
        if (k < 0)
        {
            p = neg(p);
            k = -k;
        }
        auto acc = Point<R>::infinity();
        while (k != 0)
        {
            if (k & 1)
                acc = add(acc, p);
            p = add(p, p);
            k >>= 1;
        }
        return acc;
    }

    /// x(2P) as a rational function of x(P).
    R duplication_x(const R& x) const
    {
        const R num = x * x * x * x - b4() * x * x - c(2) * b6() * x - b8();
        const R den = c(4) * x * x * x + b2() * x * x + c(2) * b4() * x + b6();
        return num / den;
    }

    /// Image curve under x = u^2 X + r, y = u^3 Y + s u^2 X + t.
    Curve transformed(const Transform<R>& v) const
    {
        const R &u = v.u, &r = v.r, &s = v.s, &t = v.t;
        const R ui = c(1) / u;
        const R ui2 = ui * ui;
        const R ui3 = ui2 * ui;
        const R ui4 = ui2 * ui2;
        const R ui6 = ui3 * ui3;
        const R na1 = (a1_ + c(2) * s) * ui;
        const R na2 = (a2_ - s * a1_ + c(3) * r - s * s) * ui2;
        const R na3 = (a3_ + r * a1_ + c(2) * t) * ui3;
        const R na4 = (a4_ - s * a3_ + c(2) * r * a2_ - (t + r * s) * a1_ + c(3) * r * r -
                       c(2) * s * t) *
                      ui4;
        const R na6 =
            (a6_ + r * a4_ + r * r * a2_ + r * r * r - t * a3_ - t * t - r * t * a1_) * ui6;
        return Curve(na1, na2, na3, na4, na6);
    }

    /// Point map (x, y) -> (X, Y) matching transformed().
    Point<R> map_point(const Transform<R>& v, const Point<R>& p) const
    {
        if (p.is_infinity())
            return p;
        const R ui2 = c(1) / (v.u * v.u);
        const R ui3 = ui2 / v.u;
        const R X = (p.x() - v.r) * ui2;
        const R Y = (p.y() - v.s * (p.x() - v.r) - v.t) * ui3;
        return Point<R>::affine(X, Y);
    }

    /// Inverse point map (X, Y) -> (x, y).
    Point<R> unmap_point(const Transform<R>& v, const Point<R>& p) const
    {
        if (p.is_infinity())
            return p;
        const R u2 = v.u * v.u;
        const R u3 = u2 * v.u;
        const R x = u2 * p.x() + v.r;
        const R y = u3 * p.y() + v.s * u2 * p.x() + v.t;
        return Point<R>::affine(x, y);
    }

private:
    R a1_, a2_, a3_, a4_, a6_;
};

/// Quartic in x whose roots are the x coordinates of the nonzero 3-torsion:
/// 3 x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
template <typename R>
std::vector<R> three_division_coeffs(const Curve<R>& e)
{
    return {e.b8(), e.c(3) * e.b6(), e.c(3) * e.b4(), e.b2(), e.c(3)};
}

}  // namespace discroot
