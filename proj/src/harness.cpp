// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include "discroot/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "discroot/isogeny.hpp"
#include "discroot/pairing.hpp"
#include "discroot/roots.hpp"
#include "discroot/tate.hpp"
#include "discroot/torsion.hpp"
#include "discroot/torsor.hpp"

namespace discroot {

namespace {

using torsor::Mat2;
using torsor::Partition22;
using torsor::Perm;
using torsor::Space;
using torsor::Triple;
using torsor::Vec2;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

/// Run one named check; exceptions become failures with the message as witness.
template <typename F>
void checked(SuiteReport& rep, const std::string& curve, const std::string& property,
             F&& f)
{
    Timer timer;
    std::string witness;
    bool pass = false;
    try
    {
        pass = f(witness);
    }
    catch (const std::exception& ex)
    {
        witness = ex.what();
        pass = false;
    }
    rep.results.push_back({curve, property, pass, std::move(witness), timer.ms()});
}

/// Portable deterministic shuffle (std::shuffle is not pinned across runtimes).
template <typename T>
void mix(std::vector<T>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

/// Raw mod-p arithmetic for the enumeration sweep; p stays below 10^4 so
/// every product fits in a u64 before reduction.
struct RawField {
    unsigned long long p;
    std::vector<char> square;  // quadratic residue table, square[0] = 1

    explicit RawField(unsigned long long p_) : p{p_}, square(p_, 0)
    {
        for (unsigned long long v = 0; v < p; ++v)
            square[v * v % p] = 1;
    }
    unsigned long long mul(unsigned long long a, unsigned long long b) const
    {
        return a * b % p;
    }
    unsigned long long add(unsigned long long a, unsigned long long b) const
    {
        return (a + b) % p;
    }
    unsigned long long sub(unsigned long long a, unsigned long long b) const
    {
        return (a + p - b % p) % p;
    }
    unsigned long long pow(unsigned long long a, unsigned long long e) const
    {
        unsigned long long r = 1;
        for (a %= p; e != 0; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    }
    unsigned long long cubic(unsigned long long a, unsigned long long b,
                             unsigned long long x) const
    {
        return add(mul(add(mul(x, x), a), x), b);  // x^3 + a x + b
    }
};

/// Rational points of order dividing 3: 1 + 2 #{x : psi3(x) = 0, x^3+ax+b a
/// nonzero square} with psi3 = 3x^4 + 6ax^2 + 12bx - a^2.
long raw_torsion3_count(const RawField& f, unsigned long long a, unsigned long long b)
{
    long count = 1;
    for (unsigned long long x = 0; x < f.p; ++x)
    {
        const auto x2 = f.mul(x, x);
        const auto psi = f.add(f.add(f.mul(3, f.mul(x2, x2)), f.mul(6, f.mul(a, x2))),
                               f.sub(f.mul(12, f.mul(b, x)), f.mul(a, a)));
        if (psi != 0)
            continue;
        const auto rhs = f.cubic(a, b, x);
        if (rhs != 0 && f.square[rhs])
            count += 2;
    }
    return count;
}

/// Rational points of order dividing 4: affine 2-torsion has rhs = 0; an
/// affine point of order 4 doubles onto the cubic's root locus, detected by
/// clearing denominators in x(2P) = ((x^2-a)^2 - 8bx) / (4 rhs).
long raw_torsion4_count(const RawField& f, unsigned long long a, unsigned long long b)
{
    long count = 1;
    for (unsigned long long x = 0; x < f.p; ++x)
    {
        const auto rhs = f.cubic(a, b, x);
        if (rhs == 0)
        {
            count += 1;
            continue;
        }
        if (!f.square[rhs])
            continue;
        const auto num = f.sub(f.mul(f.sub(f.mul(x, x), a), f.sub(f.mul(x, x), a)),
                               f.mul(8, f.mul(b, x)));
        const auto den = f.mul(4, rhs);
        const auto lifted = f.add(f.mul(f.mul(num, num), num),
                                  f.add(f.mul(a, f.mul(num, f.mul(den, den))),
                                        f.mul(b, f.mul(den, f.mul(den, den)))));
        if (lifted == 0)
            count += 2;
    }
    return count;
}

long raw_group_order(const RawField& f, unsigned long long a, unsigned long long b)
{
    long count = 1;
    for (unsigned long long x = 0; x < f.p; ++x)
    {
        const auto rhs = f.cubic(a, b, x);
        count += rhs == 0 ? 1 : (f.square[rhs] ? 2 : 0);
    }
    return count;
}

std::string fe(const FieldElement& v) { return v.str(); }

/// Curves from config: an explicit list, or a seeded shuffle of an enumeration.
std::vector<CurveSpec> selection(const SuiteConfig& cfg, const std::string& filter)
{
    if (cfg.curves)
        return *cfg.curves;
    auto list = enumerate_curves(cfg.p, filter);
    if (!cfg.all_curves)
    {
        std::mt19937_64 rng{cfg.seed};
        mix(list, rng);
    }
    return list;
}

long quota(const SuiteConfig& cfg)
{
    return cfg.all_curves ? std::numeric_limits<long>::max() : cfg.sample;
}

/// Base-field Frobenius on a value of the torsion field.
FieldElement base_frobenius(const TorsionModule& tm, FieldElement v)
{
    for (unsigned i = 0; i < tm.base_field()->degree(); ++i)
        v = v.frobenius();
    return v;
}

// ---- torsor-selftest --------------------------------------------------------

void selftest_extensions(SuiteReport& rep, const Space& sp)
{
    const int n = sp.n();
    checked(rep, "", "extension-compatibility", [&](std::string& w) {
        const auto exts = sp.all_extensions();
        if (exts.size() != static_cast<std::size_t>(n == 3 ? 8 : 12))
        {
            w = "unexpected extension count";
            return false;
        }
        for (const auto& e : exts)
        {
            const auto kernel = sp.kernel(e);
            const auto fiber = sp.fiber_one(e);
            const auto gens = sp.kernel_generators(e);
            if (kernel.size() != static_cast<std::size_t>(n) ||
                fiber.size() != static_cast<std::size_t>(n) || gens.size() != 2)
            {
                w = "kernel or fiber has the wrong size";
                return false;
            }
            for (const auto p : kernel)
                for (const auto q : fiber)
                    if (sp.det(p, q) != sp.epsilon(e, p))
                    {
                        w = "epsilon depends on the fiber point";
                        return false;
                    }
            // tau must not depend on the kernel generator and must be onto
            if (n == 3)
            {
                std::set<Partition22> image;
                for (const auto q : fiber)
                {
                    if (sp.partition_of_basis(gens[0], q) !=
                        sp.partition_of_basis(gens[1], q))
                    {
                        w = "tau depends on the kernel generator";
                        return false;
                    }
                    image.insert(sp.tau3(e, q));
                }
                if (image.size() != 3)
                {
                    w = "tau is not bijective";
                    return false;
                }
                for (const auto q : fiber)
                    for (const auto p : kernel)
                        if (sp.tau3(e, sp.add(q, p)) !=
                            sp.wedge_on_partition(sp.epsilon(e, p), sp.tau3(e, q)))
                        {
                            w = "tau does not intertwine translation and wedge";
                            return false;
                        }
            }
            else
            {
                std::set<Triple> image;
                for (const auto q : fiber)
                    image.insert(sp.tau4(e, q));
                if (image.size() != 4)
                {
                    w = "tau is not bijective";
                    return false;
                }
                for (const auto q : fiber)
                    for (const auto p : kernel)
                        if (sp.tau4(e, sp.add(q, p)) !=
                            sp.wedge_on_t4(sp.epsilon(e, p), sp.tau4(e, q)))
                        {
                            w = "tau does not intertwine translation and wedge";
                            return false;
                        }
            }
        }
        w = "all extensions";
        return true;
    });
}

void suite_torsor_selftest(SuiteReport& rep)
{
    const int n = rep.config.n;
    const Space sp{n};

    if (n == 3)
    {
        checked(rep, "", "projective-line-count", [&](std::string& w) {
            w = std::to_string(sp.projective_line().size());
            return sp.projective_line().size() == 4;
        });
        checked(rep, "", "partition-count", [&](std::string& w) {
            w = std::to_string(sp.all_partitions().size());
            return sp.all_partitions().size() == 3;
        });
        checked(rep, "", "wedge-simple-transitivity", [&](std::string& w) {
            const auto parts = sp.all_partitions();
            const std::set<Partition22> all(parts.begin(), parts.end());
            for (const auto& t : parts)
            {
                std::set<Partition22> orbit;
                for (int c = 0; c < 3; ++c)
                    orbit.insert(sp.wedge_on_partition(c, t));
                if (orbit != all)
                    return false;
            }
            w = "orbit of size 3 from every element";
            return true;
        });
        checked(rep, "", "basis-independence", [&](std::string& w) {
            long cases = 0;
            for (const auto& [p, q] : sp.all_bases())
            {
                const auto m = sp.shear(p, q);
                const int c = sp.det(p, q);
                for (const auto& t : sp.all_partitions())
                {
                    if (sp.apply_to_partition(m, t) != sp.wedge_on_partition(c, t))
                        return false;
                    ++cases;
                }
            }
            w = std::to_string(cases) + " exhaustive cases";
            return true;
        });
    }
    else
    {
        checked(rep, "", "flag-count", [&](std::string& w) {
            w = std::to_string(sp.all_s4().size());
            return sp.all_s4().size() == 384;
        });
        checked(rep, "", "class-count", [&](std::string& w) {
            w = std::to_string(sp.t4_classes().size());
            return sp.t4_classes().size() == 4;
        });
        checked(rep, "", "group-simple-transitivity", [&](std::string& w) {
            const auto& s4 = sp.all_s4();
            const std::set<Triple> all(s4.begin(), s4.end());
            std::set<Triple> images;
            for (const auto& perm : torsor::all_perms())
                for (unsigned subset = 0; subset < 64; ++subset)
                    images.insert(
                        sp.act_g(perm, static_cast<std::uint8_t>(subset), s4[0]));
            w = std::to_string(images.size()) + " distinct images of one flag";
            return images == all;
        });
        checked(rep, "", "involution-bijection", [&](std::string& w) {
            // order-4 cyclic subgroups of the symmetric group on 4 letters
            // biject with the fixed-point-free involutions via squaring
            std::array<int, 4> perm{0, 1, 2, 3};
            std::vector<std::array<int, 4>> order4;
            std::set<std::array<int, 4>> fpf;
            const auto times = [](const std::array<int, 4>& f,
                                  const std::array<int, 4>& g) {
                std::array<int, 4> h{};
                for (int i = 0; i < 4; ++i)
                    h[i] = f[g[i]];
                return h;
            };
            do
            {
                auto p2 = times(perm, perm);
                const auto p4 = times(p2, p2);
                const bool is_order4 =
                    p4 == std::array<int, 4>{0, 1, 2, 3} &&
                    p2 != std::array<int, 4>{0, 1, 2, 3};
                if (is_order4)
                    order4.push_back(perm);
                bool fixed = false;
                for (int i = 0; i < 4; ++i)
                    fixed = fixed || perm[i] == i;
                if (!fixed && p2 == std::array<int, 4>{0, 1, 2, 3})
                    fpf.insert(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (order4.size() != 6 || fpf.size() != 3)
            {
                w = "wrong element counts";
                return false;
            }
            // group the order-4 elements into subgroups by their square
            std::map<std::array<int, 4>, std::set<std::array<int, 4>>> by_square;
            for (const auto& g : order4)
                by_square[times(g, g)].insert(g);
            if (by_square.size() != 3)
            {
                w = "squaring is not 2-to-1 onto three involutions";
                return false;
            }
            for (const auto& [tau, gens] : by_square)
            {
                if (fpf.count(tau) == 0 || gens.size() != 2)
                {
                    w = "square of an order-4 element must be fixed-point-free";
                    return false;
                }
                // the cyclic subgroup acts simply transitively on the 4 letters
                const auto g = *gens.begin();
                std::set<int> orbit{0};
                int x = 0;
                for (int i = 0; i < 3; ++i)
                {
                    x = g[x];
                    orbit.insert(x);
                }
                if (orbit.size() != 4)
                {
                    w = "cyclic subgroup is not transitive";
                    return false;
                }
            }
            w = "3 subgroups, 3 involutions, bijective correspondence";
            return true;
        });
        checked(rep, "", "basis-independence", [&](std::string& w) {
            std::mt19937_64 rng{rep.config.seed};
            const auto bases = sp.all_bases();
            const auto classes = sp.t4_classes();
            const long samples = std::max<long>(500, rep.config.sample);
            for (long i = 0; i < samples; ++i)
            {
                const auto& [p, q] = bases[rng() % bases.size()];
                const auto& t = classes[rng() % classes.size()];
                if (sp.apply_to_t4(sp.shear(p, q), t) !=
                    sp.wedge_on_t4(sp.det(p, q), t))
                    return false;
            }
            w = std::to_string(samples) + " sampled cases";
            return true;
        });
        checked(rep, "", "wedge-simple-transitivity", [&](std::string& w) {
            const auto classes = sp.t4_classes();
            const std::set<Triple> all(classes.begin(), classes.end());
            for (const auto& t : classes)
            {
                std::set<Triple> orbit;
                for (int c = 0; c < 4; ++c)
                    orbit.insert(sp.wedge_on_t4(c, t));
                if (orbit != all)
                    return false;
            }
            w = "orbit of size 4 from every class";
            return true;
        });
    }
    selftest_extensions(rep, sp);
}

// ---- cube-product -----------------------------------------------------------

void suite_cube_product(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    std::vector<CurveSpec> list;
    if (cfg.curves)
    {
        list = *cfg.curves;
    }
    else
    {
        // every curve with rational full 3-torsion, then extension-field ones
        list = enumerate_curves(cfg.p, "full-3-torsion");
        auto proper = enumerate_curves(cfg.p, "proper-3-torsion-field");
        if (!cfg.all_curves)
        {
            std::mt19937_64 rng{cfg.seed};
            mix(proper, rng);
            if (proper.size() > static_cast<std::size_t>(cfg.sample))
                proper.resize(cfg.sample);
        }
        list.insert(list.end(), proper.begin(), proper.end());
    }

    for (const auto& spec : list)
    {
        const auto label = curve_label(spec);
        std::optional<TorsionModule> tm;
        try
        {
            tm.emplace(realize(spec), 3);
        }
        catch (const std::exception&)
        {
            rep.skipped += 1;
            continue;
        }
        const auto delta = tm->curve().discriminant();
        const auto roots = w3_all(*tm);
        checked(rep, label, "cube-sum", [&](std::string& w) {
            const auto s = roots[0].value + roots[1].value + roots[2].value;
            w = "sum=" + fe(s);
            return s.is_zero();
        });
        checked(rep, label, "cube-pair-sum", [&](std::string& w) {
            const auto s = roots[0].value * roots[1].value +
                           roots[0].value * roots[2].value +
                           roots[1].value * roots[2].value;
            w = "pairsum=" + fe(s);
            return s.is_zero();
        });
        checked(rep, label, "cube-product", [&](std::string& w) {
            const auto prod = roots[0].value * roots[1].value * roots[2].value;
            w = "prod=" + fe(prod) + ",delta=" + fe(delta);
            return prod == delta;
        });
    }
}

// ---- quartic-root -----------------------------------------------------------

void suite_quartic_root(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const auto list = selection(cfg, "");
    const Space sp{4};
    std::mt19937_64 rng{cfg.seed + 1};
    long done = 0;
    for (const auto& spec : list)
    {
        if (done >= quota(cfg))
            break;
        const auto label = curve_label(spec);
        std::optional<TorsionModule> tm;
        try
        {
            tm.emplace(realize(spec), 4);
        }
        catch (const std::exception&)
        {
            rep.skipped += 1;
            continue;
        }
        const auto delta = tm->curve().discriminant();

        checked(rep, label, "fourth-power", [&](std::string& w) {
            for (const auto& r : w4_all(*tm))
                if (!(r.value.pow(4) == delta))
                {
                    w = "w=" + fe(r.value);
                    return false;
                }
            w = "all four classes";
            return true;
        });
        checked(rep, label, "distinct-roots", [&](std::string& w) {
            const auto vals = w4_all(*tm);
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (std::size_t j = i + 1; j < vals.size(); ++j)
                    if (vals[i].value == vals[j].value)
                        return false;
            w = "w0=" + fe(vals[0].value);
            return vals.size() == 4;  // four distinct fourth roots exhaust them
        });
        checked(rep, label, "squaring-diagram", [&](std::string& w) {
            for (const auto& t : sp.t4_classes())
            {
                const auto v = w4_root(*tm, t).value;
                const std::array<Vec2, 3> half{sp.smul(2, t[0]), sp.smul(2, t[1]),
                                               sp.smul(2, t[2])};
                if (!(v * v == w2_root(*tm, half).value))
                    return false;
            }
            w = "squares match the 2-torsion value";
            return true;
        });
        checked(rep, label, "sign-law", [&](std::string& w) {
            const auto& s4 = sp.all_s4();
            const auto& s = s4[rng() % s4.size()];
            const auto v = w4_tilde_root(*tm, s).value;
            for (const auto& perm : torsor::all_perms())
            {
                const auto moved = w4_tilde_root(*tm, sp.involution(perm, s)).value;
                if (!(moved == (torsor::is_even(perm) ? -v : v)))
                    return false;
            }
            const Triple neg{sp.neg(s[0]), s[1], s[2]};
            if (!(w4_tilde_root(*tm, neg).value == -v))
                return false;
            const Triple shift{sp.add(s[0], sp.smul(2, s[1])), s[1], s[2]};
            if (!(w4_tilde_root(*tm, shift).value == v))
                return false;
            w = "six involutions, negation, shift";
            return true;
        });
        if (done < 3)
        {
            checked(rep, label, "orbit-constancy", [&](std::string& w) {
                long images = 0;
                for (const auto& t : sp.t4_classes())
                {
                    const auto v = w4_root(*tm, t).value;
                    for (const auto& perm : torsor::all_perms())
                    {
                        if (!torsor::is_even(perm))
                            continue;
                        for (unsigned subset = 0; subset < 64; ++subset)
                        {
                            if (!sp.subset_in_n(static_cast<std::uint8_t>(subset)))
                                continue;
                            const auto img =
                                sp.act_g(perm, static_cast<std::uint8_t>(subset), t);
                            if (!(w4_tilde_root(*tm, img).value == v))
                                return false;
                            ++images;
                        }
                    }
                }
                w = std::to_string(images) + " orbit images";
                return images == 384;
            });
        }
        ++done;
    }
}

// ---- torsor-compat ----------------------------------------------------------

void suite_torsor_compat(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const int n = cfg.n;
    const auto list = selection(cfg, "");
    const Space sp{n};
    long done = 0;
    for (const auto& spec : list)
    {
        if (done >= quota(cfg))
            break;
        const auto label = curve_label(spec);
        std::optional<TorsionModule> tm;
        try
        {
            tm.emplace(realize(spec), n);
        }
        catch (const std::exception&)
        {
            rep.skipped += 1;
            continue;
        }
        checked(rep, label, "wedge-equivariance", [&](std::string& w) {
            const int eps = pairing_calibration(*tm);
            if (rep.calibration == 0)
                rep.calibration = eps;
            w = std::string("epsilon=") + (eps > 0 ? "+1" : "-1");
            if (n == 3)
            {
                for (const auto& t : sp.all_partitions())
                {
                    const auto base = w3_root(*tm, t).value;
                    for (int c = 0; c < 3; ++c)
                        if (!(w3_root(*tm, sp.wedge_on_partition(c, t)).value ==
                              pairing_of_wedge(*tm, eps * c) * base))
                            return false;
                }
            }
            else
            {
                for (const auto& t : sp.t4_classes())
                {
                    const auto base = w4_root(*tm, t).value;
                    for (int c = 0; c < 4; ++c)
                        if (!(w4_root(*tm, sp.wedge_on_t4(c, t)).value ==
                              pairing_of_wedge(*tm, eps * c) * base))
                            return false;
                }
            }
            return true;
        });
        checked(rep, label, "calibration-uniform", [&](std::string& w) {
            const int eps = pairing_calibration(*tm);
            w = std::string("epsilon=") + (eps > 0 ? "+1" : "-1");
            return eps == rep.calibration;
        });
        ++done;
    }
}

// ---- transform ---------------------------------------------------------------

void suite_transform(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const auto list = selection(cfg, "");
    std::optional<TorsionModule> tm;
    std::string label;
    for (const auto& spec : list)
    {
        try
        {
            tm.emplace(realize(spec), cfg.n);
            label = curve_label(spec);
            break;
        }
        catch (const std::exception&)
        {
            rep.skipped += 1;
        }
    }
    if (!tm)
        throw std::runtime_error("no curve in range supports the torsion level");

    const auto f = tm->field();
    std::mt19937_64 rng{cfg.seed};
    const auto order = static_cast<unsigned long long>(f->order());
    const auto random_element = [&] { return f->element_at(rng() % order); };
    for (long i = 0; i < cfg.sample; ++i)
    {
        auto u = random_element();
        while (u.is_zero())
            u = random_element();
        const auto r = random_element();
        const auto s = cfg.n == 3 ? random_element() : f->zero();
        const auto t = cfg.n == 3 ? random_element() : f->zero();
        const Transform<FieldElement> ch{u, r, s, t};
        checked(rep, label, "change-of-variables", [&](std::string& w) {
            w = "u=" + fe(u) + ",r=" + fe(r) + ",s=" + fe(s) + ",t=" + fe(t);
            const auto report = transformation_check(*tm, ch);
            if (!report.ok)
                for (const auto& msg : report.failures)
                    w += ";" + msg;
            return report.ok;
        });
    }
}

// ---- tate ---------------------------------------------------------------------

void suite_tate(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const auto label =
        "n=" + std::to_string(cfg.n) + ",prec=" + std::to_string(cfg.precision);
    const auto tate = tate_root_check(cfg.n, cfg.precision);
    for (const auto& [name, pass] : tate.properties)
    {
        std::string witness;
        for (const auto& msg : tate.failures)
            if (msg.rfind(name + ":", 0) == 0)
                witness = msg;
        rep.results.push_back({label, name, pass, witness, 0.0});
    }
}

// ---- coates --------------------------------------------------------------------

void suite_coates(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const auto list =
        cfg.curves ? *cfg.curves : enumerate_curves(cfg.p, "");  // full sweep order
    long found = 0;
    for (const auto& spec : list)
    {
        if (cfg.budget > 0 && found >= cfg.budget)
            break;
        const auto e = realize(spec);
        const auto verdict = coates_class(e, cfg.degree);
        if (!verdict)
            continue;
        ++found;
        checked(rep, curve_label(spec), "twelfth-power-class", [&](std::string& w) {
            w = "delta=" + fe(e.discriminant()) +
                ",degree=" + std::to_string(cfg.degree);
            return *verdict;
        });
    }
    checked(rep, "", "isogeny-coverage", [&](std::string& w) {
        w = std::to_string(found) + " isogenies over p=" + std::to_string(cfg.p);
        return cfg.budget > 0 || found > 0;
    });
}

// ---- galois ---------------------------------------------------------------------

void suite_galois(SuiteReport& rep)
{
    const auto& cfg = rep.config;
    const int n = cfg.n;
    const auto filter =
        n == 3 ? "proper-3-torsion-field" : "proper-4-torsion-field";
    const auto list = selection(cfg, filter);
    const Space sp{n};
    long done = 0;
    for (const auto& spec : list)
    {
        if (done >= quota(cfg))
            break;
        const auto label = curve_label(spec);
        std::optional<TorsionModule> tm;
        try
        {
            tm.emplace(realize(spec), n);
        }
        catch (const std::exception&)
        {
            rep.skipped += 1;
            continue;
        }
        const auto m = tm->frobenius_matrix();
        checked(rep, label, "root-equivariance", [&](std::string& w) {
            w = "ext_degree=" + std::to_string(tm->ext_degree_over_base());
            if (n == 3)
            {
                for (const auto& t : sp.all_partitions())
                    if (!(w3_root(*tm, sp.apply_to_partition(m, t)).value ==
                          base_frobenius(*tm, w3_root(*tm, t).value)))
                        return false;
            }
            else
            {
                for (const auto& t : sp.t4_classes())
                    if (!(w4_root(*tm, sp.apply_to_t4(m, t)).value ==
                          base_frobenius(*tm, w4_root(*tm, t).value)))
                        return false;
            }
            return true;
        });
        checked(rep, label, "pairing-equivariance", [&](std::string& w) {
            const auto& e = tm->curve();
            const auto zeta = weil_pairing(e, tm->gen_p(), tm->gen_q(), n);
            const auto moved = weil_pairing(e, tm->frobenius_point(tm->gen_p()),
                                            tm->frobenius_point(tm->gen_q()), n);
            const int det = sp.mod(m.a * m.d - m.b * m.c);
            w = "det=" + std::to_string(det);
            return moved == base_frobenius(*tm, zeta) &&
                   moved == zeta.pow(static_cast<u128>(det));
        });
        ++done;
    }
}

}  // namespace

// ---- public surface -----------------------------------------------------------

Curve<FieldElement> realize(const CurveSpec& spec)
{
    if (spec.p < 2)
        throw std::invalid_argument("curve needs a prime characteristic");
    const auto f = spec.ext_degree <= 1
                       ? Field::prime(static_cast<u64>(spec.p))
                       : Field::extension(static_cast<u64>(spec.p), spec.ext_degree);
    const Curve<FieldElement> e{f->from_int(spec.a[0]), f->from_int(spec.a[1]),
                                f->from_int(spec.a[2]), f->from_int(spec.a[3]),
                                f->from_int(spec.a[4])};
    if (e.discriminant().is_zero())
        throw std::invalid_argument("curve is singular");
    return e;
}

std::string curve_label(const CurveSpec& spec)
{
    std::ostringstream os;
    os << "p=" << spec.p << ",k=" << spec.ext_degree << ",a=[" << spec.a[0];
    for (std::size_t i = 1; i < spec.a.size(); ++i)
        os << "," << spec.a[i];
    os << "]";
    return os.str();
}

std::vector<CurveSpec> enumerate_curves(long long p, const std::string& filter)
{
    if (p < 5 || p > 10000)
        throw std::invalid_argument("enumeration covers 5 <= p <= 10^4");
    const bool need_full3 = filter == "full-3-torsion";
    const bool need_full4 = filter == "full-4-torsion";
    const bool need_proper3 = filter == "proper-3-torsion-field";
    const bool need_proper4 = filter == "proper-4-torsion-field";
    const bool need_5 = filter == "rational-5-torsion";
    const bool need_7 = filter == "rational-7-torsion";
    const bool need_12th = filter == "twelfth-power-discriminant";
    if (!filter.empty() && !need_full3 && !need_full4 && !need_proper3 &&
        !need_proper4 && !need_5 && !need_7 && !need_12th)
        throw std::invalid_argument("unknown curve filter: " + filter);

    const RawField f{static_cast<unsigned long long>(p)};
    const auto gcd12 = std::gcd(static_cast<unsigned long long>(12), f.p - 1);
    std::vector<CurveSpec> out;
    for (unsigned long long a = 0; a < f.p; ++a)
    {
        for (unsigned long long b = 0; b < f.p; ++b)
        {
            // delta = -16 (4a^3 + 27b^2)
            const auto delta = f.mul(
                f.p - 16 % f.p,
                f.add(f.mul(4, f.mul(a, f.mul(a, a))), f.mul(27, f.mul(b, b))));
            if (delta == 0)
                continue;
            bool keep = true;
            if (need_full3)
                keep = raw_torsion3_count(f, a, b) == 9;
            else if (need_full4)
                keep = raw_torsion4_count(f, a, b) == 16;
            else if (need_proper3)
                keep = raw_torsion3_count(f, a, b) < 9;
            else if (need_proper4)
                keep = raw_torsion4_count(f, a, b) < 16;
            else if (need_5)
                keep = raw_group_order(f, a, b) % 5 == 0;
            else if (need_7)
                keep = raw_group_order(f, a, b) % 7 == 0;
            else if (need_12th)
                keep = f.pow(delta, (f.p - 1) / gcd12) == 1;
            if (keep)
                out.push_back({p, 1,
                               {0, 0, 0, static_cast<long long>(a),
                                static_cast<long long>(b)}});
        }
    }
    return out;
}

long SuiteReport::failures() const
{
    long n = 0;
    for (const auto& r : results)
        if (!r.pass)
            ++n;
    return n;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "torsor-selftest", "cube-product", "quartic-root", "torsor-compat",
        "transform",       "tate",         "coates",       "galois"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config)
{
    SuiteReport rep;
    rep.suite = name;
    rep.config = config;
    if (config.n != 3 && config.n != 4)
        throw std::invalid_argument("torsion level must be 3 or 4");
    if (name == "torsor-selftest")
        suite_torsor_selftest(rep);
    else if (name == "cube-product")
        suite_cube_product(rep);
    else if (name == "quartic-root")
        suite_quartic_root(rep);
    else if (name == "torsor-compat")
        suite_torsor_compat(rep);
    else if (name == "transform")
        suite_transform(rep);
    else if (name == "tate")
        suite_tate(rep);
    else if (name == "coates")
        suite_coates(rep);
    else if (name == "galois")
        suite_galois(rep);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return rep;
}

void write_report(const SuiteReport& rep, std::ostream& os, bool timings)
{
    using json = nlohmann::ordered_json;
    for (const auto& r : rep.results)
    {
        json line;
        line["suite"] = rep.suite;
        line["curve"] = r.curve;
        line["property"] = r.property;
        line["pass"] = r.pass;
        line["witness"] = r.witness;
        if (timings)
            line["millis"] = r.millis;
        os << line.dump() << "\n";
    }
    json summary;
    summary["suite"] = rep.suite;
    summary["config"] = {{"p", rep.config.p},
                         {"n", rep.config.n},
                         {"all_curves", rep.config.all_curves},
                         {"sample", rep.config.sample},
                         {"seed", rep.config.seed},
                         {"precision", rep.config.precision},
                         {"degree", rep.config.degree},
                         {"budget", rep.config.budget}};
    summary["properties"] = rep.results.size();
    summary["failures"] = rep.failures();
    summary["skipped"] = rep.skipped;
    if (rep.calibration != 0)
        summary["calibration"] = rep.calibration;
    summary["ok"] = rep.ok();
    os << summary.dump() << "\n";
}

std::vector<CurveSpec> parse_curve_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open curve file: " + path);
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_array())
        throw std::invalid_argument("curve file must hold a JSON array");
    std::vector<CurveSpec> out;
    for (const auto& item : doc)
    {
        CurveSpec spec;
        spec.p = item.at("p").get<long long>();
        spec.ext_degree = item.value("ext_degree", 1U);
        const auto& a = item.at("a");
        if (!a.is_array() || a.size() != 5)
            throw std::invalid_argument("curve entry needs a = [a1,a2,a3,a4,a6]");
        for (std::size_t i = 0; i < 5; ++i)
            spec.a[i] = a[i].get<long long>();
        out.push_back(spec);
    }
    return out;
}

}  // namespace discroot
