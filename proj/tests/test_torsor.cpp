// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discroot/torsor.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace discroot::torsor;

TEST_CASE("permutation helpers")
{
    CHECK(all_perms().size() == 6);
    int even = 0;
    for (const auto& s : all_perms())
        if (is_even(s))
            ++even;
    CHECK(even == 3);
    // compose is a left action on slots
    const Perm s{{1, 2, 0}};
    const Perm t{{1, 0, 2}};
    const auto st = compose(s, t);
    for (int i = 0; i < 3; ++i)
        CHECK(st.img[i] == s.img[t.img[i]]);
}

TEST_CASE("projective line and partitions for level 3")
{
    const Space v{3};
    const auto line = v.projective_line();
    CHECK(line.size() == 4);
    const auto parts = v.all_partitions();
    CHECK(parts.size() == 3);

    // every basis produces one of the three partitions, and a fixed basis
    // walks through all of them as [P,Q], [P,P+Q], [P,2P+Q]
    for (const auto& [p, q] : v.all_bases())
    {
        const auto t = v.partition_of_basis(p, q);
        CHECK(std::find(parts.begin(), parts.end(), t) != parts.end());
    }
    const Vec2 p{1, 0}, q{0, 1};
    std::set<Partition22> seen;
    for (int i = 0; i < 3; ++i)
        seen.insert(v.partition_of_basis(p, v.add(v.smul(i, p), q)));
    CHECK(seen.size() == 3);
}

TEST_CASE("flag triples: counts and the group action")
{
    const Space v{4};
    const auto& s4 = v.all_s4();
    CHECK(s4.size() == 384);

    // involutions square to the identity and commute with each other
    std::mt19937_64 rng{5};
    for (int it = 0; it < 50; ++it)
    {
        const auto& t = s4[rng() % s4.size()];
        for (const auto& a : all_perms())
        {
            CHECK(v.involution(a, v.involution(a, t)) == t);
            CHECK(v.in_s4(v.involution(a, t)));
            for (const auto& b : all_perms())
                CHECK(v.involution(a, v.involution(b, t)) ==
                      v.involution(b, v.involution(a, t)));
        }
        // semidirect relation: conjugating an involution relabels its slots
        for (const auto& tau : all_perms())
            for (const auto& sig : all_perms())
            {
                const auto lhs = v.permute(tau, v.involution(sig, t));
                const auto rhs = v.involution(compose(tau, sig), v.permute(tau, t));
                CHECK(lhs == rhs);
            }
    }

    // the quotient has 4 classes of 96 triples each
    const auto classes = v.t4_classes();
    CHECK(classes.size() == 4);
    std::map<Triple, int> sizes;
    for (const auto& t : s4)
        ++sizes[v.t4_rep(t)];
    for (const auto& [rep, count] : sizes)
        CHECK(count == 96);

    // a class equals {t, -t, swap(t), -swap(t)}
    const Triple t0 = s4[7];
    const std::set<Triple> orbit{v.t4_rep(t0), v.t4_negate(v.t4_rep(t0)),
                                 v.t4_rep({t0[1], t0[0], t0[2]}),
                                 v.t4_negate(v.t4_rep({t0[1], t0[0], t0[2]}))};
    std::set<Triple> all(classes.begin(), classes.end());
    CHECK(orbit == all);
}

TEST_CASE("negation is the square of the wedge generator on flags")
{
    const Space v{4};
    for (const auto& t : v.t4_classes())
    {
        CHECK(v.wedge_on_t4(2, t) == v.t4_negate(t));
        CHECK(v.t4_negate(t) != t);  // -1 acts without fixed points
        CHECK(v.t4_negate(v.t4_negate(t)) == t);
    }
}

TEST_CASE("wedge action is simply transitive")
{
    {
        const Space v{3};
        for (const auto& t : v.all_partitions())
        {
            std::set<Partition22> orbit;
            for (int c = 0; c < 3; ++c)
                orbit.insert(v.wedge_on_partition(c, t));
            CHECK(orbit.size() == 3);
        }
    }
    {
        const Space v{4};
        for (const auto& t : v.t4_classes())
        {
            std::set<Triple> orbit;
            for (int c = 0; c < 4; ++c)
                orbit.insert(v.wedge_on_t4(c, t));
            CHECK(orbit.size() == 4);
        }
    }
}

TEST_CASE("shear of a basis acts as the wedge class of its determinant")
{
    for (const int n : {3, 4})
    {
        const Space v{n};
        std::mt19937_64 rng{99};
        const auto bases = v.all_bases();
        for (int it = 0; it < 60; ++it)
        {
            const auto& [p, q] = bases[rng() % bases.size()];
            const auto m = v.shear(p, q);
            const int c = v.det(p, q);
            if (n == 3)
                for (const auto& t : v.all_partitions())
                    CHECK(v.apply_to_partition(m, t) == v.wedge_on_partition(c, t));
            else
                for (const auto& t : v.t4_classes())
                    CHECK(v.apply_to_t4(m, t) == v.wedge_on_t4(c, t));
        }
    }
}

TEST_CASE("extension data: kernels, fibers, epsilon, tau")
{
    for (const int n : {3, 4})
    {
        const Space v{n};
        const auto exts = v.all_extensions();
        CHECK(exts.size() == (n == 3 ? 8 : 12));
        for (const auto& e : exts)
        {
            const auto l = v.kernel(e);
            const auto t = v.fiber_one(e);
            CHECK(l.size() == static_cast<size_t>(n));
            CHECK(t.size() == static_cast<size_t>(n));
            const auto gens = v.kernel_generators(e);
            CHECK(gens.size() == 2);

            // epsilon does not depend on the fiber point used
            for (const auto p : l)
                for (const auto q : t)
                    CHECK(v.det(p, q) == v.epsilon(e, p));

            // tau is well defined for either kernel generator and bijective
            if (n == 3)
            {
                std::set<Partition22> image;
                for (const auto q : t)
                {
                    CHECK(v.partition_of_basis(gens[0], q) ==
                          v.partition_of_basis(gens[1], q));
                    image.insert(v.tau3(e, q));
                }
                CHECK(image.size() == 3);
            }
            else
            {
                std::set<Triple> image;
                for (const auto q : t)
                {
                    CHECK(v.t4_rep({q, gens[0], v.neg(v.add(gens[0], q))}) ==
                          v.t4_rep({q, gens[1], v.neg(v.add(gens[1], q))}));
                    image.insert(v.tau4(e, q));
                }
                CHECK(image.size() == 4);
            }

            // tau intertwines translation by L with the wedge action
            for (const auto q : t)
                for (const auto p : l)
                {
                    const int c = v.epsilon(e, p);
                    if (n == 3)
                        CHECK(v.tau3(e, v.add(q, p)) == v.wedge_on_partition(c, v.tau3(e, q)));
                    else
                        CHECK(v.tau4(e, v.add(q, p)) == v.wedge_on_t4(c, v.tau4(e, q)));
                }
        }
    }
}
