// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/torsor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace discroot::torsor {

const std::array<Perm, 6>& all_perms()
{
    static const std::array<Perm, 6> perms = {
        Perm{{0, 1, 2}}, Perm{{1, 0, 2}}, Perm{{2, 1, 0}},
        Perm{{0, 2, 1}}, Perm{{1, 2, 0}}, Perm{{2, 0, 1}},
    };
    return perms;
}

bool is_even(const Perm& s)
{
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (s.img[i] > s.img[j])
                ++inv;
    return inv % 2 == 0;
}

Perm compose(const Perm& s, const Perm& t)
{
    Perm r;
    for (int i = 0; i < 3; ++i)
        r.img[i] = s.img[t.img[i]];
    return r;
}

Space::Space(int n) : n_{n}
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("space level must be 3 or 4");
}

namespace {

int gcd_int(int a, int b)
{
    return std::gcd(a, b);
}

}  // namespace

bool Space::is_basis(Vec2 x, Vec2 y) const
{
    return gcd_int(det(x, y), n_) == 1;
}

Mat2 Space::mat_of_basis(Vec2 p, Vec2 q) const
{
    return {p.a, q.a, p.b, q.b};
}

Mat2 Space::mat_mul(const Mat2& x, const Mat2& y) const
{
    return {mod(x.a * y.a + x.b * y.c), mod(x.a * y.b + x.b * y.d),
            mod(x.c * y.a + x.d * y.c), mod(x.c * y.b + x.d * y.d)};
}

Mat2 Space::mat_inv(const Mat2& m) const
{
    const int dt = mod(m.a * m.d - m.b * m.c);
    int dt_inv = -1;
    for (int v = 0; v < n_; ++v)
        if (mod(dt * v) == 1)
            dt_inv = v;
    if (dt_inv < 0)
        throw std::invalid_argument("matrix determinant is not a unit");
    return {mod(m.d * dt_inv), mod(-m.b * dt_inv), mod(-m.c * dt_inv), mod(m.a * dt_inv)};
}

Mat2 Space::shear(Vec2 p, Vec2 q) const
{
    if (!is_basis(p, q))
        throw std::invalid_argument("shear needs a basis");
    const auto b = mat_of_basis(p, q);
    const Mat2 unipotent{1, 1, 0, 1};  // fixes e1, sends e2 to e1 + e2
    return mat_mul(mat_mul(b, unipotent), mat_inv(b));
}

std::vector<Vec2> Space::all() const
{
    std::vector<Vec2> out;
    out.reserve(static_cast<size_t>(n_ * n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            out.push_back({a, b});
    return out;
}

std::vector<Vec2> Space::nonzero() const
{
    auto out = all();
    out.erase(std::remove(out.begin(), out.end(), Vec2{0, 0}), out.end());
    return out;
}

std::vector<std::pair<Vec2, Vec2>> Space::all_bases() const
{
    std::vector<std::pair<Vec2, Vec2>> out;
    for (const auto p : nonzero())
        for (const auto q : nonzero())
            if (is_basis(p, q))
                out.emplace_back(p, q);
    return out;
}

Vec2 Space::pm_rep(Vec2 x) const
{
    return std::min(red(x.a, x.b), neg(x));
}

std::vector<Vec2> Space::projective_line() const
{
    std::vector<Vec2> out;
    for (const auto v : nonzero())
    {
        const auto r = pm_rep(v);
        if (std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Partition22 canonical_partition(Vec2 x0, Vec2 x1, Vec2 x2, Vec2 x3)
{
    if (x1 < x0)
        std::swap(x0, x1);
    if (x3 < x2)
        std::swap(x2, x3);
    if (x2 < x0)
    {
        std::swap(x0, x2);
        std::swap(x1, x3);
    }
    return {x0, x1, x2, x3};
}

}  // namespace

std::vector<Partition22> Space::all_partitions() const
{
    const auto line = projective_line();
    if (line.size() != 4)
        throw std::logic_error("projective line needs exactly 4 classes");
    std::vector<Partition22> out;
    // partner of line[0] picks the partition
    for (int partner = 1; partner < 4; ++partner)
    {
        std::array<Vec2, 2> rest{};
        int k = 0;
        for (int i = 1; i < 4; ++i)
            if (i != partner)
                rest[static_cast<size_t>(k++)] = line[static_cast<size_t>(i)];
        out.push_back(canonical_partition(line[0], line[static_cast<size_t>(partner)], rest[0],
                                          rest[1]));
    }
    return out;
}

Partition22 Space::partition_of_basis(Vec2 p, Vec2 q) const
{
    if (!is_basis(p, q))
        throw std::invalid_argument("partition needs a basis");
    return canonical_partition(pm_rep(p), pm_rep(q), pm_rep(add(p, q)), pm_rep(sub(p, q)));
}

Partition22 Space::apply_to_partition(const Mat2& m, const Partition22& t) const
{
    return canonical_partition(pm_rep(apply(m, t[0])), pm_rep(apply(m, t[1])),
                               pm_rep(apply(m, t[2])), pm_rep(apply(m, t[3])));
}

bool Space::in_s4(const Triple& t) const
{
    const Vec2 a = smul(2, t[0]), b = smul(2, t[1]), c = smul(2, t[2]);
    if (a == Vec2{0, 0} || b == Vec2{0, 0} || c == Vec2{0, 0})
        return false;
    return a != b && a != c && b != c;
}

const std::vector<Triple>& Space::all_s4() const
{
    if (s4_cache_.empty())
    {
        for (const auto p : all())
            for (const auto q : all())
                for (const auto r : all())
                {
                    const Triple t{p, q, r};
                    if (in_s4(t))
                        s4_cache_.push_back(t);
                }
    }
    return s4_cache_;
}

Triple Space::involution(const Perm& s, Triple t) const
{
    const auto i = static_cast<size_t>(s.img[0]);
    const auto j = static_cast<size_t>(s.img[1]);
    t[j] = add(t[j], smul(2, t[i]));
    return t;
}

Triple Space::apply_subset(std::uint8_t subset, Triple t) const
{
    for (size_t i = 0; i < 6; ++i)
        if (subset & (1u << i))
            t = involution(all_perms()[i], t);
    return t;
}

Triple Space::permute(const Perm& s, const Triple& t) const
{
    Triple r;
    for (int i = 0; i < 3; ++i)
        r[static_cast<size_t>(s.img[i])] = t[static_cast<size_t>(i)];
    return r;
}

Triple Space::act_g(const Perm& s, std::uint8_t subset, Triple t) const
{
    return permute(s, apply_subset(subset, t));
}

bool Space::subset_in_n(std::uint8_t subset) const
{
    int even_perms = 0;
    for (size_t i = 0; i < 6; ++i)
        if ((subset & (1u << i)) && is_even(all_perms()[i]))
            ++even_perms;
    return even_perms % 2 == 0;
}

Triple Space::t4_rep(const Triple& t) const
{
    Triple best = t;
    bool first = true;
    for (const auto& rho : all_perms())
    {
        if (!is_even(rho))
            continue;
        for (unsigned subset = 0; subset < 64; ++subset)
        {
            if (!subset_in_n(static_cast<std::uint8_t>(subset)))
                continue;
            const auto img = act_g(rho, static_cast<std::uint8_t>(subset), t);
            if (first || img < best)
            {
                best = img;
                first = false;
            }
        }
    }
    return best;
}

std::vector<Triple> Space::t4_classes() const
{
    std::vector<Triple> out;
    for (const auto& t : all_s4())
    {
        const auto r = t4_rep(t);
        if (std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Triple Space::apply_to_t4(const Mat2& m, const Triple& t) const
{
    return t4_rep({apply(m, t[0]), apply(m, t[1]), apply(m, t[2])});
}

Triple Space::t4_negate(const Triple& t) const
{
    return t4_rep({neg(t[0]), neg(t[1]), neg(t[2])});
}

Partition22 Space::wedge_on_partition(int c, const Partition22& t) const
{
    const Mat2 gen{1, 1, 0, 1};  // the shear of the standard basis
    auto r = t;
    for (int i = 0; i < mod(c); ++i)
        r = apply_to_partition(gen, r);
    return r;
}

Triple Space::wedge_on_t4(int c, const Triple& t) const
{
    const Mat2 gen{1, 1, 0, 1};
    auto r = t;
    for (int i = 0; i < mod(c); ++i)
        r = apply_to_t4(gen, r);
    return r;
}

std::vector<Space::Extension> Space::all_extensions() const
{
    std::vector<Extension> out;
    for (int c = 0; c < n_; ++c)
        for (int d = 0; d < n_; ++d)
            if (gcd_int(gcd_int(c, d), n_) == 1)
                out.push_back({c, d});
    return out;
}

std::vector<Vec2> Space::kernel(const Extension& e) const
{
    std::vector<Vec2> out;
    for (const auto v : all())
        if (ext_apply(e, v) == 0)
            out.push_back(v);
    return out;
}

std::vector<Vec2> Space::kernel_generators(const Extension& e) const
{
    std::vector<Vec2> out;
    for (const auto v : kernel(e))
    {
        bool full_order = true;
        for (int k = 1; k < n_; ++k)
            if (smul(k, v) == Vec2{0, 0})
                full_order = false;
        if (full_order)
            out.push_back(v);
    }
    return out;
}

std::vector<Vec2> Space::fiber_one(const Extension& e) const
{
    std::vector<Vec2> out;
    for (const auto v : all())
        if (ext_apply(e, v) == 1)
            out.push_back(v);
    return out;
}

int Space::epsilon(const Extension& e, Vec2 p) const
{
    const auto fiber = fiber_one(e);
    if (fiber.empty())
        throw std::logic_error("extension has an empty fiber over 1");
    return det(p, fiber.front());
}

Partition22 Space::tau3(const Extension& e, Vec2 q) const
{
    const auto gens = kernel_generators(e);
    if (gens.empty())
        throw std::logic_error("extension kernel has no generator");
    return partition_of_basis(gens.front(), q);
}

Triple Space::tau4(const Extension& e, Vec2 q) const
{
    const auto gens = kernel_generators(e);
    if (gens.empty())
        throw std::logic_error("extension kernel has no generator");
    const auto p = gens.front();
    return t4_rep({q, p, neg(add(p, q))});
}

}  // namespace discroot::torsor
