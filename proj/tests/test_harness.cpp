// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "discroot/field.hpp"
#include "discroot/harness.hpp"

using namespace discroot;

namespace {

SuiteConfig quick(long long p, int n, long sample, unsigned long long seed = 1)
{
    SuiteConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.sample = sample;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("curve enumeration counts and rejects out-of-range input")
{
    CHECK(enumerate_curves(5, "").size() == 20);  // 25 pairs minus 5 singular
    CHECK(enumerate_curves(7, "").size() == 42);
    CHECK_THROWS_AS(enumerate_curves(3, ""), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_curves(20011, ""), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_curves(13, "torsion-free"), std::invalid_argument);
}

TEST_CASE("filters partition the enumeration consistently")
{
    const auto all = enumerate_curves(13, "");
    const auto full = enumerate_curves(13, "full-3-torsion");
    const auto proper = enumerate_curves(13, "proper-3-torsion-field");
    CHECK(full.size() + proper.size() == all.size());
    CHECK(!full.empty());

    const auto twelfth = enumerate_curves(13, "twelfth-power-discriminant");
    const auto f = Field::prime(13);
    std::set<std::pair<long long, long long>> marked;
    for (const auto& spec : twelfth)
        marked.insert({spec.a[3], spec.a[4]});
    for (const auto& spec : all)
    {
        const auto e = realize(spec);
        CHECK(nth_power_class(e.discriminant(), 12) ==
              (marked.count({spec.a[3], spec.a[4]}) == 1));
    }
}

TEST_CASE("curve realization round-trips through labels and files")
{
    const CurveSpec spec{13, 2, {0, 0, 0, 4, 3}};
    const auto e = realize(spec);
    CHECK(e.a4().field()->order() == static_cast<u128>(169));
    CHECK(curve_label(spec) == "p=13,k=2,a=[0,0,0,4,3]");
    CHECK_THROWS_AS(realize({5, 1, {0, 0, 0, 0, 0}}), std::invalid_argument);

    const std::string path = "harness_curves_test.json";
    {
        std::ofstream os(path);
        os << R"([{"p": 13, "a": [0,0,0,4,3]},
                  {"p": 11, "ext_degree": 2, "a": [0,0,0,1,3]}])";
    }
    const auto parsed = parse_curve_file(path);
    std::remove(path.c_str());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].p == 13);
    CHECK(parsed[0].ext_degree == 1);
    CHECK(parsed[1].ext_degree == 2);
    CHECK(realize(parsed[1]).a4().field()->order() == static_cast<u128>(121));
    CHECK_THROWS_AS(parse_curve_file("no_such_file.json"), std::invalid_argument);
}

TEST_CASE("the torsor selftest passes at both levels")
{
    for (int n : {3, 4})
    {
        const auto rep = run_suite("torsor-selftest", quick(13, n, 25));
        CHECK(rep.ok());
        CHECK(rep.results.size() == (n == 3 ? 5 : 7));
        for (const auto& r : rep.results)
            CHECK(r.pass);
    }
    CHECK_THROWS_AS(run_suite("torsor-selftest", quick(13, 5, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_suite("no-such-suite", quick(13, 3, 1)),
                    std::invalid_argument);
}

TEST_CASE("sampled arithmetic suites hold over a small prime")
{
    const auto cube = run_suite("cube-product", quick(13, 3, 4));
    CHECK(cube.ok());
    CHECK(cube.results.size() >= 3 * 4);  // full-torsion curves plus the sample

    const auto quartic = run_suite("quartic-root", quick(13, 4, 3));
    CHECK(quartic.ok());
    long orbit_rows = 0;
    for (const auto& r : quartic.results)
        if (r.property == "orbit-constancy")
            ++orbit_rows;
    CHECK(orbit_rows == 3);

    for (int n : {3, 4})
    {
        const auto compat = run_suite("torsor-compat", quick(13, n, 3));
        CHECK(compat.ok());
        CHECK((compat.calibration == 1 || compat.calibration == -1));

        const auto moved = run_suite("transform", quick(13, n, 8));
        CHECK(moved.ok());
        CHECK(moved.results.size() == 8);

        const auto frob = run_suite("galois", quick(11, n, 3));
        CHECK(frob.ok());
        CHECK(frob.results.size() == 6);
    }
}

TEST_CASE("the series suite mirrors the formal-model verification")
{
    auto cfg = quick(13, 4, 1);
    cfg.precision = 8;
    const auto rep = run_suite("tate", cfg);
    CHECK(rep.ok());
    CHECK(rep.results.size() == 7);
    cfg.n = 3;
    CHECK(run_suite("tate", cfg).ok());
}

TEST_CASE("isogeny discriminant classes hold for degree five and break for two")
{
    auto cfg = quick(13, 3, 1);
    cfg.degree = 5;
    cfg.budget = 10;
    const auto good = run_suite("coates", cfg);
    CHECK(good.ok());
    CHECK(good.results.size() == 11);  // ten isogenies plus the coverage row

    cfg.degree = 2;
    const auto bad = run_suite("coates", cfg);
    CHECK_FALSE(bad.ok());
    CHECK(bad.failures() > 0);
}

TEST_CASE("reports are byte-identical for identical configuration")
{
    const auto rep1 = run_suite("cube-product", quick(13, 3, 5, 9));
    const auto rep2 = run_suite("cube-product", quick(13, 3, 5, 9));
    std::ostringstream os1, os2, os3;
    write_report(rep1, os1, false);
    write_report(rep2, os2, false);
    CHECK(os1.str() == os2.str());
    CHECK(os1.str().find("\"millis\"") == std::string::npos);
    write_report(rep1, os3, true);
    CHECK(os3.str().find("\"millis\"") != std::string::npos);

    const auto other = run_suite("cube-product", quick(13, 3, 5, 10));
    std::ostringstream os4;
    write_report(other, os4, false);
    CHECK(os1.str() != os4.str());  // a different seed samples other curves
}

TEST_CASE("explicit curve lists override enumeration")
{
    auto cfg = quick(13, 3, 2);
    cfg.curves = std::vector<CurveSpec>{{13, 1, {0, 0, 0, 0, 1}},
                                        {13, 1, {0, 0, 0, 1, 0}}};
    const auto rep = run_suite("cube-product", cfg);
    CHECK(rep.ok());
    std::set<std::string> labels;
    for (const auto& r : rep.results)
        labels.insert(r.curve);
    CHECK(labels ==
          std::set<std::string>{"p=13,k=1,a=[0,0,0,0,1]", "p=13,k=1,a=[0,0,0,1,0]"});
}
