// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace discroot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class FieldElement;

/// A finite field F_p or F_{p^k}, k >= 1, represented as F_p[x]/(modulus).
/// Desk-scale only: p < 2^16 and k <= 16. Towers are always flattened to a
/// single extension of the prime field; see embed_field().
class Field : public std::enable_shared_from_this<Field> {
public:
    static std::shared_ptr<const Field> prime(u64 p);
    /// F_{p^k} with the lexicographically smallest monic irreducible modulus.
    static std::shared_ptr<const Field> extension(u64 p, unsigned k);
    /// F_p[x]/(modulus) for a caller-supplied monic irreducible modulus.
    static std::shared_ptr<const Field> extension(u64 p, std::vector<u64> modulus);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    /// p^k; throws std::domain_error if it does not fit in 127 bits.
    u128 order() const;
    bool order_fits_u128() const;
    /// Monic modulus, coefficient i of x^i, size k+1. For k=1 this is x.
    const std::vector<u64>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long v) const;
    /// Element with the given coefficient vector (reduced mod p, padded to k).
    FieldElement element(std::vector<u64> coeffs) const;
    /// The class of x (requires k >= 2).
    FieldElement generator() const;
    /// All p^k elements in canonical order. Throws if the field has more
    /// than 2^20 elements.
    std::vector<FieldElement> all_elements() const;
    /// Element at position idx in canonical order, 0 <= idx < p^k.
    FieldElement element_at(u128 idx) const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    Field(u64 p, unsigned k, std::vector<u64> modulus);
    u64 p_;
    unsigned k_;
    std::vector<u64> modulus_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Immutable element of a Field in canonical (fully reduced) representation.
/// Canonical ordering: lexicographic on the coefficient vector (c_0, c_1, ...),
/// which for prime fields is the integer representative order.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<u64> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    /// Integer representative for prime-field elements (k = 1 only).
    u64 residue() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Canonical ordering (used everywhere a deterministic choice is needed).
    bool operator<(const FieldElement& o) const;

    FieldElement inv() const;
    FieldElement pow(u128 e) const;
    /// x -> x^p, the absolute Frobenius.
    FieldElement frobenius() const;
    /// Constant of the same field.
    FieldElement from_int(long long v) const { return field_->from_int(v); }
    /// Multiplicative order (element must be nonzero; field order must fit).
    u128 multiplicative_order() const;

    std::string str() const;

private:
    void check_same_field(const FieldElement& o) const;
    FieldPtr field_;
    std::vector<u64> c_;  // size k, canonical
};

/// Dense univariate polynomial over a Field. Zero polynomial has empty
/// coefficient vector; degree() is then -1.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);
    static Polynomial from_ints(const FieldPtr& field, const std::vector<long long>& coeffs);
    /// x^d
    static Polynomial x_power(const FieldPtr& field, unsigned d);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement lead() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial mod(const Polynomial& d) const { return divmod(d).second; }
    Polynomial gcd(const Polynomial& o) const;  // monic gcd
    Polynomial derivative() const;
    FieldElement eval(const FieldElement& x) const;
    /// this^e mod m
    Polynomial pow_mod(u128 e, const Polynomial& m) const;

    std::string str() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

/// True iff f is irreducible over its (prime or extension) coefficient field.
bool is_irreducible(const Polynomial& f);

/// Lexicographically smallest monic irreducible of degree k over F_p,
/// scanning the non-leading coefficient vector with the constant term
/// varying fastest. k = 1 gives x.
Polynomial find_irreducible(u64 p, unsigned k);

/// All roots of f in its coefficient field, with multiplicity, in canonical
/// order. Exhaustive scan when |F| <= 2^16, otherwise gcd with x^|F| - x
/// followed by equal-degree splitting.
std::vector<FieldElement> poly_roots(const Polynomial& f);

/// True iff x is an n-th power in F_q^*, i.e. x^((q-1)/gcd(n,q-1)) = 1.
/// Throws on x = 0.
bool nth_power_class(const FieldElement& x, u64 n);

/// Square roots of x in its field (0, 1, or 2 results, canonical order).
std::vector<FieldElement> field_sqrt(const FieldElement& x);

/// Embedding of F_{p^a} into F_{p^b} for a | b, sending the generator of the
/// subfield to the smallest root of the subfield modulus in the superfield.
class Embedding {
public:
    Embedding(FieldPtr sub, FieldPtr super);
    FieldElement operator()(const FieldElement& e) const;
    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& super() const { return super_; }

private:
    FieldPtr sub_, super_;
    std::vector<FieldElement> gen_powers_;  // image of x^i, i < deg(sub)
};

}  // namespace discroot
