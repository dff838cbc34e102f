// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "discroot/harness.hpp"

namespace {

struct Options {
    discroot::SuiteConfig config;
    std::string suite;
    std::string curve_file;
    std::string out;
    bool timings = false;
};

void add_output_flags(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--out", opt.out, "write the report to a file instead of stdout");
    cmd->add_flag("--timings", opt.timings, "include per-property timings");
}

int emit(const discroot::SuiteReport& rep, const Options& opt)
{
    if (opt.out.empty())
    {
        discroot::write_report(rep, std::cout, opt.timings);
    }
    else
    {
        std::ofstream os(opt.out);
        if (!os)
        {
            std::cerr << "cannot write " << opt.out << "\n";
            return 2;
        }
        discroot::write_report(rep, os, opt.timings);
    }
    return rep.ok() ? 0 : 1;
}

int run(const std::string& suite, Options& opt)
{
    if (!opt.curve_file.empty())
        opt.config.curves = discroot::parse_curve_file(opt.curve_file);
    return emit(discroot::run_suite(suite, opt.config), opt);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact n-th roots of elliptic curve discriminants from torsion points"};
    app.require_subcommand(1);
    Options opt;

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    std::string names;
    for (const auto& s : discroot::suite_names())
        names += (names.empty() ? "" : ", ") + s;
    verify->add_option("--suite", opt.suite, "one of: " + names)->required();
    verify->add_option("--p", opt.config.p, "prime for curve enumeration");
    verify->add_option("--n", opt.config.n, "torsion level, 3 or 4");
    auto* all = verify->add_flag("--all-curves", opt.config.all_curves,
                                 "use every enumerated curve");
    verify->add_option("--sample", opt.config.sample,
                       "curves (or variable changes) to sample")
        ->excludes(all);
    verify->add_option("--seed", opt.config.seed, "sampling seed");
    verify->add_option("--curves", opt.curve_file, "JSON file listing curves");
    verify->add_option("--precision", opt.config.precision, "series precision");
    verify->add_option("--degree", opt.config.degree, "isogeny degree");
    verify->add_option("--budget", opt.config.budget, "max isogenies, 0 = all");
    add_output_flags(verify, opt);

    auto* tate = app.add_subcommand("tate", "verify the formal-series model");
    tate->add_option("--n", opt.config.n, "torsion level, 3 or 4");
    tate->add_option("--precision", opt.config.precision, "series precision");
    add_output_flags(tate, opt);

    auto* coates = app.add_subcommand("coates", "discriminant classes under isogeny");
    coates->add_option("--p", opt.config.p, "prime for curve enumeration");
    coates->add_option("--degree", opt.config.degree, "isogeny degree");
    coates->add_option("--budget", opt.config.budget, "max isogenies, 0 = all");
    add_output_flags(coates, opt);

    auto* selftest = app.add_subcommand("torsor-selftest", "combinatorial torsor checks");
    selftest->add_option("--n", opt.config.n, "torsion level, 3 or 4");
    add_output_flags(selftest, opt);

    try
    {
        app.parse(argc, argv);
        if (verify->parsed())
            return run(opt.suite, opt);
        if (tate->parsed())
            return run("tate", opt);
        if (coates->parsed())
            return run("coates", opt);
        return run("torsor-selftest", opt);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
