// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace discroot::torsor {

/// Element of (Z/n)^2 with entries reduced to [0, n).
struct Vec2 {
    int a = 0, b = 0;
    friend bool operator==(Vec2 x, Vec2 y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Vec2 x, Vec2 y) { return !(x == y); }
    friend bool operator<(Vec2 x, Vec2 y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }
};

/// Permutation of {0,1,2}; img[i] is the image of slot i.
struct Perm {
    std::array<int, 3> img{0, 1, 2};
    friend bool operator==(const Perm& x, const Perm& y) { return x.img == y.img; }
};

const std::array<Perm, 6>& all_perms();
bool is_even(const Perm& s);
Perm compose(const Perm& s, const Perm& t);  // s after t

/// 2x2 matrix over Z/n, columns are the images of the standard basis.
struct Mat2 {
    int a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
};

/// Partition of the projective line of (Z/3)^2 into two 2-element blocks.
/// Stored canonically: each block sorted, blocks ordered by first element.
using Partition22 = std::array<Vec2, 4>;

/// Ordered triple from S_4(V) or its class in T_4(V).
using Triple = std::array<Vec2, 3>;

/// All arithmetic of the rank-2 module V = (Z/n)^2 together with the
/// associated structures: the 2-2 partitions for n = 3, the flag triples and
/// their quotient for n = 4, the wedge-power action, and extension data.
class Space {
public:
    explicit Space(int n);

    int n() const { return n_; }
    Vec2 add(Vec2 x, Vec2 y) const { return red(x.a + y.a, x.b + y.b); }
    Vec2 sub(Vec2 x, Vec2 y) const { return red(x.a - y.a, x.b - y.b); }
    Vec2 neg(Vec2 x) const { return red(-x.a, -x.b); }
    Vec2 smul(int k, Vec2 x) const { return red(k * x.a, k * x.b); }
    int det(Vec2 x, Vec2 y) const { return mod(x.a * y.b - x.b * y.a); }
    bool is_basis(Vec2 x, Vec2 y) const;
    Vec2 apply(const Mat2& m, Vec2 x) const
    {
        return red(m.a * x.a + m.b * x.b, m.c * x.a + m.d * x.b);
    }
    Mat2 mat_of_basis(Vec2 p, Vec2 q) const;        // columns p, q
    Mat2 mat_mul(const Mat2& x, const Mat2& y) const;
    Mat2 mat_inv(const Mat2& m) const;              // det must be a unit
    /// The map fixing p and sending q to p + q, expressed on coordinates.
    Mat2 shear(Vec2 p, Vec2 q) const;

    std::vector<Vec2> all() const;
    std::vector<Vec2> nonzero() const;
    std::vector<std::pair<Vec2, Vec2>> all_bases() const;

    // ---- n = 3: the projective line and its 2-2 partitions ----------------
    Vec2 pm_rep(Vec2 x) const;                      // min(x, -x)
    std::vector<Vec2> projective_line() const;      // 4 classes for n = 3
    std::vector<Partition22> all_partitions() const;
    Partition22 partition_of_basis(Vec2 p, Vec2 q) const;  // {{p,q},{p+q,p-q}}
    Partition22 apply_to_partition(const Mat2& m, const Partition22& t) const;

    // ---- n = 4: S_4(V), the group G, and T_4(V) ----------------------------
    bool in_s4(const Triple& t) const;
    const std::vector<Triple>& all_s4() const;      // 384 triples
    /// The commuting involution attached to a permutation slot choice.
    Triple involution(const Perm& s, Triple t) const;
    Triple apply_subset(std::uint8_t subset, Triple t) const;  // product over set bits
    Triple permute(const Perm& s, const Triple& t) const;      // out[s(i)] = in[i]
    /// g = (s, subset) acts as s after the subset product.
    Triple act_g(const Perm& s, std::uint8_t subset, Triple t) const;
    bool subset_in_n(std::uint8_t subset) const;    // even count of even perms
    /// Lexicographically smallest triple in the H-orbit (96 images).
    Triple t4_rep(const Triple& t) const;
    std::vector<Triple> t4_classes() const;         // 4 canonical representatives
    Triple apply_to_t4(const Mat2& m, const Triple& t) const;  // rep of m(t)
    Triple t4_negate(const Triple& t) const;        // rep of [-P,-Q,-R]

    // ---- wedge action ------------------------------------------------------
    /// Action of the wedge class c (coordinates fixed by the standard basis)
    /// on a partition (n = 3).
    Partition22 wedge_on_partition(int c, const Partition22& t) const;
    /// Same for a T_4 class (n = 4).
    Triple wedge_on_t4(int c, const Triple& t) const;

    // ---- extensions 0 -> L -> V -> Z/n -> 0 --------------------------------
    struct Extension {
        int c = 0, d = 0;  // the surjection v -> c v.a + d v.b
    };
    std::vector<Extension> all_extensions() const;
    int ext_apply(const Extension& e, Vec2 v) const { return mod(e.c * v.a + e.d * v.b); }
    std::vector<Vec2> kernel(const Extension& e) const;
    std::vector<Vec2> kernel_generators(const Extension& e) const;  // order-n elements
    std::vector<Vec2> fiber_one(const Extension& e) const;
    /// det(p, q) for q in the fiber over 1; independence of q is a tested
    /// property, the accessor just uses the smallest q.
    int epsilon(const Extension& e, Vec2 p) const;
    Partition22 tau3(const Extension& e, Vec2 q) const;
    Triple tau4(const Extension& e, Vec2 q) const;

    int mod(int v) const
    {
        v %= n_;
        return v < 0 ? v + n_ : v;
    }

private:
    Vec2 red(int a, int b) const { return {mod(a), mod(b)}; }
    int n_;
    mutable std::vector<Triple> s4_cache_;
};

}  // namespace discroot::torsor
