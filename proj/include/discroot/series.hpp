// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace discroot {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q, Q(i), or Q(zeta) with zeta a primitive cube root of unity
/// (zeta^2 = -zeta - 1). Values are a + b*i or a + b*zeta; plain rationals
/// combine with either extension, the two extensions never mix.
class Cyclotomic {
public:
    enum class Kind { Rat, Gauss, Eisenstein };

    Cyclotomic() : kind_{Kind::Rat} {}
    Cyclotomic(Rational a) : kind_{Kind::Rat}, a_{std::move(a)} {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(long long a) : kind_{Kind::Rat}, a_{a} {}            // NOLINT(google-explicit-constructor)
    Cyclotomic(Kind k, Rational a, Rational b);
    static Cyclotomic i() { return {Kind::Gauss, 0, 1}; }
    static Cyclotomic zeta3() { return {Kind::Eisenstein, 0, 1}; }

    Kind kind() const { return kind_; }
    const Rational& re() const { return a_; }   // coefficient of 1
    const Rational& im() const { return b_; }   // coefficient of i or zeta
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }
    Cyclotomic operator-() const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inv() const;
    Cyclotomic conj() const;
    Cyclotomic pow(unsigned e) const;
    /// a^2 + b^2 for Gauss, a^2 - a*b + b^2 for Eisenstein, a^2 for Rat.
    Rational norm() const;

    std::string str() const;

private:
    // normalized: b_ == 0 collapses kind_ to Rat
    Kind kind_;
    Rational a_{0};
    Rational b_{0};
};

/// Truncated Laurent series with explicit precision tracking. Coefficients of
/// z^e are known exactly for all e < prec(); prec() == kExact means the series
/// is known in full (a Laurent polynomial). Every operation propagates the
/// weakest precision of its inputs; reading a coefficient at or beyond prec()
/// throws.
class LaurentSeries {
public:
    static constexpr long kExact = std::numeric_limits<long>::max();

    LaurentSeries() = default;  // exact zero
    static LaurentSeries zero(long prec = kExact);
    static LaurentSeries constant(Cyclotomic c, long prec = kExact);
    static LaurentSeries monomial(Cyclotomic c, long e, long prec = kExact);

    long prec() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    /// True if some known coefficient is nonzero.
    bool known_nonzero() const { return !c_.empty(); }
    /// Exponent of the lowest known nonzero coefficient; throws when none.
    long valuation() const;
    /// Lower bound for the order: valuation if known nonzero, else prec.
    long order_bound() const { return c_.empty() ? prec_ : val_; }
    /// Coefficient of z^e; throws std::out_of_range for e >= prec().
    Cyclotomic coefficient(long e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Cyclotomic& s) const;
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
    LaurentSeries operator-() const;

    /// Multiplicative inverse. Exact input must be a single monomial;
    /// otherwise truncate first so the result precision is defined.
    LaurentSeries inv() const;
    LaurentSeries pow(unsigned e) const;
    /// Multiply by z^e.
    LaurentSeries shifted(long e) const;
    /// Forget coefficients at exponents >= n.
    LaurentSeries truncated(long n) const;
    /// Substitute z -> c * z^m, m >= 1.
    LaurentSeries compose_monomial(const Cyclotomic& c, long m) const;

    /// Equality of all coefficients below min(prec, o.prec); throws if the
    /// common window is empty.
    bool agrees_with(const LaurentSeries& o) const;
    bool operator==(const LaurentSeries& o) const
    {
        return prec_ == o.prec_ && val_ == o.val_ && c_ == o.c_;
    }

    std::string str() const;

private:
    void normalize();
    long val_ = 0;                // exponent of c_[0] when c_ is nonempty
    std::vector<Cyclotomic> c_;   // trimmed at both ends, c_.front() != 0
    long prec_ = kExact;
};

/// prod_{m >= 1, e*m < n_prec} (1 - z^(e*m))^w truncated to precision n_prec.
/// Negative w uses the inverse factor.
LaurentSeries eta_power_product(long e, long w, long n_prec);

/// Divisor power sum sigma_k(m) = sum over d | m of d^k.
Rational sigma_power(unsigned k, unsigned long m);

}  // namespace discroot
