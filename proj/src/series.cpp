// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/series.hpp"

#include <algorithm>
#include <sstream>

namespace discroot {

namespace {

Cyclotomic::Kind join_kinds(Cyclotomic::Kind a, Cyclotomic::Kind b)
{
    if (a == b)
        return a;
    if (a == Cyclotomic::Kind::Rat)
        return b;
    if (b == Cyclotomic::Kind::Rat)
        return a;
    throw std::invalid_argument("cannot mix Gauss and Eisenstein coefficients");
}

}  // namespace

Cyclotomic::Cyclotomic(Kind k, Rational a, Rational b)
  : kind_{k}, a_{std::move(a)}, b_{std::move(b)}
{
    if (b_ == 0)
        kind_ = Kind::Rat;
    else if (kind_ == Kind::Rat)
        throw std::invalid_argument("rational value cannot carry an imaginary part");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const
{
    return {join_kinds(kind_, o.kind_), a_ + o.a_, b_ + o.b_};
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const
{
    return {join_kinds(kind_, o.kind_), a_ - o.a_, b_ - o.b_};
}

Cyclotomic Cyclotomic::operator-() const
{
    return {kind_, -a_, -b_};
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const
{
    const auto k = join_kinds(kind_, o.kind_);
    switch (k)
    {
    case Kind::Rat:
        return {a_ * o.a_};
    case Kind::Gauss:
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        return {k, a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    case Kind::Eisenstein:
        // zeta^2 = -zeta - 1
        return {k, a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_ - b_ * o.b_};
    }
    throw std::logic_error("unreachable");
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    if (a_ != o.a_ || b_ != o.b_)
        return false;
    return b_ == 0 || kind_ == o.kind_;
}

Rational Cyclotomic::norm() const
{
    switch (kind_)
    {
    case Kind::Rat:
        return a_ * a_;
    case Kind::Gauss:
        return a_ * a_ + b_ * b_;
    case Kind::Eisenstein:
        return a_ * a_ - a_ * b_ + b_ * b_;
    }
    throw std::logic_error("unreachable");
}

Cyclotomic Cyclotomic::conj() const
{
    switch (kind_)
    {
    case Kind::Rat:
        return *this;
    case Kind::Gauss:
        return {kind_, a_, -b_};
    case Kind::Eisenstein:
        // conj(zeta) = zeta^2 = -1 - zeta
        return {kind_, a_ - b_, -b_};
    }
    throw std::logic_error("unreachable");
}

Cyclotomic Cyclotomic::inv() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero coefficient");
    const auto n = norm();
    const auto c = conj();
    return {c.kind_, c.a_ / n, c.b_ / n};
}

Cyclotomic Cyclotomic::pow(unsigned e) const
{
    Cyclotomic r{1};
    auto b = *this;
    while (e != 0)
    {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string Cyclotomic::str() const
{
    std::ostringstream os;
    if (b_ == 0)
    {
        os << a_;
        return os.str();
    }
    const char* unit = kind_ == Kind::Gauss ? "i" : "w";
    if (a_ != 0)
        os << a_ << (b_ > 0 ? "+" : "");
    if (b_ == 1)
        os << unit;
    else if (b_ == -1)
        os << '-' << unit;
    else
        os << b_ << '*' << unit;
    return os.str();
}

namespace {

long add_prec(long a, long b)
{
    if (a == LaurentSeries::kExact || b == LaurentSeries::kExact)
        return LaurentSeries::kExact;
    return a + b;
}

}  // namespace

void LaurentSeries::normalize()
{
    // drop unknown coefficients
    if (prec_ != kExact)
    {
        const long upper = prec_ - val_;
        if (upper <= 0)
            c_.clear();
        else if (static_cast<long>(c_.size()) > upper)
            c_.resize(static_cast<size_t>(upper));
    }
    // trim zero edges
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead == c_.size())
    {
        c_.clear();
        val_ = 0;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<long>(lead);
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

LaurentSeries LaurentSeries::zero(long prec)
{
    LaurentSeries s;
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::constant(Cyclotomic c, long prec)
{
    return monomial(std::move(c), 0, prec);
}

LaurentSeries LaurentSeries::monomial(Cyclotomic c, long e, long prec)
{
    LaurentSeries s;
    s.prec_ = prec;
    s.val_ = e;
    s.c_ = {std::move(c)};
    s.normalize();
    return s;
}

long LaurentSeries::valuation() const
{
    if (c_.empty())
        throw std::logic_error("valuation of a series with no known nonzero coefficient");
    return val_;
}

Cyclotomic LaurentSeries::coefficient(long e) const
{
    if (e >= prec_)
        throw std::out_of_range("coefficient beyond known precision");
    if (c_.empty() || e < val_ || e >= val_ + static_cast<long>(c_.size()))
        return {};
    return c_[static_cast<size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const
{
    LaurentSeries r;
    r.prec_ = std::min(prec_, o.prec_);
    if (c_.empty() && o.c_.empty())
    {
        r.normalize();
        return r;
    }
    const long lo = c_.empty() ? o.val_ : (o.c_.empty() ? val_ : std::min(val_, o.val_));
    const long hi_a = c_.empty() ? lo : val_ + static_cast<long>(c_.size());
    const long hi_b = o.c_.empty() ? lo : o.val_ + static_cast<long>(o.c_.size());
    const long hi = std::max(hi_a, hi_b);
    r.val_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo), {});
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[static_cast<size_t>(val_ - lo) + i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
    {
        auto& slot = r.c_[static_cast<size_t>(o.val_ - lo) + i];
        slot = slot + o.c_[i];
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const
{
    auto r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const
{
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const
{
    LaurentSeries r;
    r.prec_ = std::min(add_prec(order_bound(), o.prec_), add_prec(o.order_bound(), prec_));
    if (c_.empty() || o.c_.empty())
    {
        r.normalize();
        return r;
    }
    r.val_ = val_ + o.val_;
    r.c_.assign(c_.size() + o.c_.size() - 1, {});
    for (size_t i = 0; i < c_.size(); ++i)
    {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator*(const Cyclotomic& s) const
{
    if (s.is_zero())
        return zero(prec_ == kExact ? kExact : prec_);
    auto r = *this;
    for (auto& x : r.c_)
        x = x * s;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inv() const
{
    if (c_.empty())
        throw std::domain_error("inverse of a series with no known nonzero coefficient");
    if (prec_ == kExact && c_.size() > 1)
        throw std::logic_error("inverse of an exact non-monomial series; truncate first");
    if (c_.size() == 1)
        return monomial(c_[0].inv(), -val_, prec_ == kExact ? kExact : prec_ - 2 * val_);

    const long terms = prec_ - val_;
    std::vector<Cyclotomic> e(static_cast<size_t>(terms));
    const auto d0_inv = c_[0].inv();
    e[0] = d0_inv;
    for (long j = 1; j < terms; ++j)
    {
        Cyclotomic acc;
        const long known = std::min<long>(j, static_cast<long>(c_.size()) - 1);
        for (long i = 1; i <= known; ++i)
        {
            const auto& di = c_[static_cast<size_t>(i)];
            if (!di.is_zero())
                acc = acc + di * e[static_cast<size_t>(j - i)];
        }
        e[static_cast<size_t>(j)] = -(d0_inv * acc);
    }
    LaurentSeries r;
    r.val_ = -val_;
    r.c_ = std::move(e);
    r.prec_ = prec_ - 2 * val_;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::pow(unsigned e) const
{
    auto r = constant(1, prec_);
    auto b = *this;
    while (e != 0)
    {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

LaurentSeries LaurentSeries::shifted(long e) const
{
    auto r = *this;
    r.val_ += e;
    if (r.prec_ != kExact)
        r.prec_ += e;
    return r;
}

LaurentSeries LaurentSeries::truncated(long n) const
{
    auto r = *this;
    r.prec_ = std::min(r.prec_, n);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::compose_monomial(const Cyclotomic& c, long m) const
{
    if (m < 1)
        throw std::invalid_argument("monomial substitution needs a positive exponent");
    if (c.is_zero())
        throw std::invalid_argument("monomial substitution needs a nonzero scale");
    LaurentSeries r;
    r.prec_ = prec_ == kExact ? kExact : prec_ * m;  // next unknown exponent scales too
    if (c_.empty())
    {
        r.normalize();
        return r;
    }
    r.val_ = val_ * m;
    r.c_.assign(static_cast<size_t>((static_cast<long>(c_.size()) - 1) * m + 1), {});
    for (size_t i = 0; i < c_.size(); ++i)
    {
        const long e = val_ + static_cast<long>(i);
        // c^e, handling negative exponents through the inverse
        const auto scale = e >= 0 ? c.pow(static_cast<unsigned>(e))
                                  : c.inv().pow(static_cast<unsigned>(-e));
        r.c_[i * static_cast<size_t>(m)] = c_[i] * scale;
    }
    r.normalize();
    return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const
{
    const long p = std::min(prec_, o.prec_);
    const long lo = std::min(order_bound(), o.order_bound());
    if (lo >= p)
        return true;  // both are zero on the whole common window
    if (p == kExact)
    {
        // both exact: plain coefficient comparison
        return val_ == o.val_ && c_ == o.c_;
    }
    for (long e = lo; e < p; ++e)
        if (coefficient(e) != o.coefficient(e))
            return false;
    return true;
}

std::string LaurentSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i)
    {
        if (c_[i].is_zero())
            continue;
        const long e = val_ + static_cast<long>(i);
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c_[i].str() << ')';
        if (e != 0)
            os << "*z^" << e;
    }
    if (first)
        os << '0';
    if (prec_ != kExact)
        os << " + O(z^" << prec_ << ')';
    return os.str();
}

LaurentSeries eta_power_product(long e, long w, long n_prec)
{
    if (e < 1 || n_prec == LaurentSeries::kExact)
        throw std::invalid_argument("eta product needs e >= 1 and a finite precision");
    auto acc = LaurentSeries::constant(1, n_prec);
    const unsigned aw = static_cast<unsigned>(w < 0 ? -w : w);
    for (long m = 1; e * m < n_prec; ++m)
    {
        auto factor = (LaurentSeries::constant(1, n_prec) -
                       LaurentSeries::monomial(1, e * m, n_prec))
                          .pow(aw);
        if (w < 0)
            factor = factor.inv();
        acc = acc * factor;
    }
    return acc;
}

Rational sigma_power(unsigned k, unsigned long m)
{
    Rational s = 0;
    for (unsigned long d = 1; d <= m; ++d)
    {
        if (m % d != 0)
            continue;
        Rational t = 1;
        for (unsigned i = 0; i < k; ++i)
            t *= d;
        s += t;
    }
    return s;
}

}  // namespace discroot
