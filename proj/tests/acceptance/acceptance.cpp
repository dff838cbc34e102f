// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: eight criteria, each a hard pass/fail with a pinned time
// budget and exact (tolerance-zero) arithmetic throughout. Exit 0 iff all
// eight pass.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "discroot/harness.hpp"
#include "discroot/torsor.hpp"

using namespace discroot;

namespace {

struct Criterion {
    int index;
    std::string description;
    double budget_seconds;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

SuiteConfig base_config(long long p, int n, long sample, unsigned long long seed)
{
    SuiteConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.sample = sample;
    cfg.seed = seed;
    return cfg;
}

long count_rows(const SuiteReport& rep, const std::string& property)
{
    long n = 0;
    for (const auto& r : rep.results)
        if (r.property == property)
            ++n;
    return n;
}

long count_curves(const SuiteReport& rep)
{
    std::set<std::string> labels;
    for (const auto& r : rep.results)
        if (!r.curve.empty())
            labels.insert(r.curve);
    return static_cast<long>(labels.size());
}

// 1. Exhaustive combinatorial torsor checks at both levels: counts, simple
//    transitivity, the order-4-subgroup/involution bijection, basis
//    independence, and extension compatibility.
void torsor_combinatorics(Criterion& c)
{
    const torsor::Space s3{3};
    const torsor::Space s4{4};
    if (s3.projective_line().size() != 4 || s3.all_partitions().size() != 3 ||
        s4.all_s4().size() != 384 || s4.t4_classes().size() != 4)
    {
        c.detail = "wrong object counts";
        return;
    }
    const auto rep3 = run_suite("torsor-selftest", base_config(13, 3, 25, 1));
    const auto rep4 = run_suite("torsor-selftest", base_config(13, 4, 25, 1));
    c.pass = rep3.ok() && rep4.ok();
    c.detail = std::to_string(rep3.results.size() + rep4.results.size()) +
               " properties over both levels";
}

// 2. Monic cubic identity prod(T - w3(t)) = T^3 - Delta: every curve with
//    full rational 3-torsion over five primes, plus curves needing their
//    minimal 3-torsion extension fields, at least 200 curves in all.
void cube_product_sweep(Criterion& c)
{
    long curves = 0;
    long failures = 0;
    long skipped = 0;
    for (long long p : {13, 37, 73, 97, 109})
    {
        auto cfg = base_config(p, 3, 40, 2);
        const auto rep = run_suite("cube-product", cfg);
        curves += count_curves(rep);
        failures += rep.failures();
        skipped += rep.skipped;
        const auto full = enumerate_curves(p, "full-3-torsion");
        if (count_curves(rep) < static_cast<long>(full.size()))
        {
            c.detail = "full-torsion coverage gap at p=" + std::to_string(p);
            return;
        }
    }
    c.pass = failures == 0 && skipped == 0 && curves >= 200;
    c.detail = std::to_string(curves) + " curves, " + std::to_string(failures) +
               " failures";
}

// 3. Fourth roots: w4~^4 = Delta with four pairwise distinct values (hence
//    all fourth roots), the squaring diagram onto the square root, the sign
//    law for all six commuting involutions on at least 50 curves, and
//    exhaustive orbit constancy (96 group elements per class) on 3 curves.
void quartic_root_sweep(Criterion& c)
{
    const auto rep = run_suite("quartic-root", base_config(13, 4, 50, 1));
    const auto curves = count_curves(rep);
    c.pass = rep.ok() && curves >= 50 && count_rows(rep, "sign-law") >= 50 &&
             count_rows(rep, "squaring-diagram") >= 50 &&
             count_rows(rep, "orbit-constancy") >= 3;
    c.detail = std::to_string(curves) + " curves, " +
               std::to_string(rep.failures()) + " failures";
}

// 4. Calibrated pairing compatibility w_n(v.t) = e_n(v) w_n(t) on at least
//    25 curves per torsion level, with one calibration sign across every
//    curve, both levels, and both primes used.
void pairing_compatibility(Criterion& c)
{
    std::vector<SuiteReport> reps;
    reps.push_back(run_suite("torsor-compat", base_config(13, 3, 25, 1)));
    reps.push_back(run_suite("torsor-compat", base_config(13, 4, 25, 1)));
    reps.push_back(run_suite("torsor-compat", base_config(11, 3, 5, 1)));
    reps.push_back(run_suite("torsor-compat", base_config(11, 4, 5, 1)));
    long failures = 0;
    bool enough = true;
    for (std::size_t i = 0; i < reps.size(); ++i)
    {
        failures += reps[i].failures();
        if (i < 2 && count_curves(reps[i]) < 25)
            enough = false;
    }
    const int eps = reps[0].calibration;
    bool uniform = eps == 1 || eps == -1;
    for (const auto& rep : reps)
        uniform = uniform && rep.calibration == eps;
    c.pass = failures == 0 && enough && uniform;
    c.detail = "calibration " + std::string(eps > 0 ? "+1" : "-1") + ", " +
               std::to_string(failures) + " failures";
}

// 5. Change of Weierstrass variables: the b-invariant laws, the discriminant
//    law, and the root covariance w3 = u^4 w3' and w4~ = u^3 w4~' over at
//    least 100 random variable changes.
void variable_changes(Criterion& c)
{
    const auto rep3 = run_suite("transform", base_config(13, 3, 60, 5));
    const auto rep4 = run_suite("transform", base_config(13, 4, 60, 5));
    const long changes = static_cast<long>(rep3.results.size() + rep4.results.size());
    c.pass = rep3.ok() && rep4.ok() && changes >= 100;
    c.detail = std::to_string(changes) + " variable changes, " +
               std::to_string(rep3.failures() + rep4.failures()) + " failures";
}

// 6. Exact formal-series model: the discriminant series equals the product
//    expansion, the parametrization satisfies the curve equation, and the
//    canonical torsion roots equal their product-form series (unit leading
//    term included), all to the default precision.
void formal_series(Criterion& c)
{
    auto cfg = base_config(13, 3, 1, 1);
    cfg.precision = 8;
    const auto rep3 = run_suite("tate", cfg);
    cfg.n = 4;
    const auto rep4 = run_suite("tate", cfg);
    c.pass = rep3.ok() && rep4.ok();
    c.detail = std::to_string(rep3.results.size() + rep4.results.size()) +
               " series properties";
}

// 7. Discriminant classes under isogeny: through every rational isogeny of
//    degree 5 or 7 found over F_13 and F_37, the discriminant ratio
//    Delta_E / Delta_E'^l is a 12th power. The excluded degrees 2 and 3
//    must each produce at least one violation.
void isogeny_classes(Criterion& c)
{
    long found = 0;
    for (long long p : {13, 37})
    {
        for (long long ell : {5, 7})
        {
            auto cfg = base_config(p, 3, 1, 1);
            cfg.degree = ell;
            const auto rep = run_suite("coates", cfg);
            const auto rows = count_rows(rep, "twelfth-power-class");
            if (!rep.ok() || rows == 0)
            {
                c.detail = "failure or empty sweep at p=" + std::to_string(p) +
                           ", degree=" + std::to_string(ell);
                return;
            }
            found += rows;
        }
    }
    for (long long d : {2, 3})
    {
        auto cfg = base_config(13, 3, 1, 1);
        cfg.degree = d;
        const auto rep = run_suite("coates", cfg);
        if (rep.failures() == 0)
        {
            c.detail = "excluded degree " + std::to_string(d) +
                       " produced no violation";
            return;
        }
    }
    c.pass = true;
    c.detail = std::to_string(found) +
               " isogenies hold; degrees 2 and 3 violate as required";
}

// 8. Galois equivariance: Frobenius commutes with the root maps and acts on
//    the pairing through the determinant, on at least 25 curves whose
//    torsion lives in a proper extension.
void galois_equivariance(Criterion& c)
{
    const auto rep3 = run_suite("galois", base_config(13, 3, 13, 1));
    const auto rep4 = run_suite("galois", base_config(11, 4, 12, 1));
    const long curves = count_curves(rep3) + count_curves(rep4);
    c.pass = rep3.ok() && rep4.ok() && curves >= 25;
    c.detail = std::to_string(curves) + " extension-field curves, " +
               std::to_string(rep3.failures() + rep4.failures()) + " failures";
}

}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "torsor combinatorics, exhaustive at both levels", 10.0},
        {2, "cubic product identity across five primes", 60.0},
        {3, "fourth roots, sign law, orbit constancy", 120.0},
        {4, "calibrated pairing compatibility", 120.0},
        {5, "covariance under changes of variables", 30.0},
        {6, "exact formal-series model", 30.0},
        {7, "discriminant classes under isogeny", 120.0},
        {8, "Galois equivariance of roots and pairing", 60.0},
    };
    void (*runners[])(Criterion&) = {
        torsor_combinatorics, cube_product_sweep, quartic_root_sweep,
        pairing_compatibility, variable_changes,  formal_series,
        isogeny_classes,      galois_equivariance,
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            runners[i](c);
        }
        catch (const std::exception& ex)
        {
            c.pass = false;
            c.detail = ex.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        if (c.seconds > c.budget_seconds)
        {
            c.pass = false;
            c.detail += " [over budget]";
        }
        all = all && c.pass;
        std::printf("criterion %d: %s — %s (%s; %.1fs, budget %.0fs)\n", c.index,
                    c.pass ? "PASS" : "FAIL", c.description.c_str(),
                    c.detail.c_str(), c.seconds, c.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
