// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "discroot/harness.hpp"
#include "discroot/isogeny.hpp"
#include "discroot/roots.hpp"
#include "discroot/tate.hpp"
#include "discroot/torsion.hpp"
#include "discroot/torsor.hpp"

namespace py = pybind11;
using namespace discroot;

namespace {

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

CurveSpec make_spec(long long p, const std::vector<long long>& a, unsigned ext_degree)
{
    if (a.size() != 5)
        throw std::invalid_argument("a must hold [a1, a2, a3, a4, a6]");
    CurveSpec spec;
    spec.p = p;
    spec.ext_degree = ext_degree;
    std::copy(a.begin(), a.end(), spec.a.begin());
    return spec;
}

py::dict report_to_dict(const SuiteReport& rep)
{
    py::list rows;
    for (const auto& r : rep.results)
    {
        py::dict row;
        row["curve"] = r.curve;
        row["property"] = r.property;
        row["pass"] = r.pass;
        row["witness"] = r.witness;
        rows.append(row);
    }
    py::dict out;
    out["suite"] = rep.suite;
    out["ok"] = rep.ok();
    out["failures"] = rep.failures();
    out["skipped"] = rep.skipped;
    out["calibration"] = rep.calibration;
    out["results"] = rows;
    return out;
}

SuiteConfig make_config(long long p, int n, bool all_curves, long sample,
                        unsigned long long seed, long precision, long long degree,
                        long budget,
                        const std::optional<std::vector<CurveSpec>>& curves)
{
    SuiteConfig cfg;
    cfg.p = p;
    cfg.n = n;
    cfg.all_curves = all_curves;
    cfg.sample = sample;
    cfg.seed = seed;
    cfg.precision = precision;
    cfg.degree = degree;
    cfg.budget = budget;
    cfg.curves = curves;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact n-th roots of elliptic curve discriminants from torsion points";

    py::class_<CurveSpec>(m, "CurveSpec")
        .def(py::init(&make_spec), py::arg("p"), py::arg("a"),
             py::arg("ext_degree") = 1)
        .def_readonly("p", &CurveSpec::p)
        .def_readonly("ext_degree", &CurveSpec::ext_degree)
        .def_property_readonly(
            "a",
            [](const CurveSpec& s) {
                return std::vector<long long>(s.a.begin(), s.a.end());
            })
        .def("__repr__",
             [](const CurveSpec& s) { return "CurveSpec(" + curve_label(s) + ")"; });

    m.def("curve_label", &curve_label, py::arg("spec"));
    m.def("enumerate_curves", &enumerate_curves, py::arg("p"),
          py::arg("filter") = std::string{},
          "nonsingular short Weierstrass curves over F_p matching the filter");
    m.def("suite_names", [] { return suite_names(); });

    m.def(
        "run_suite",
        [](const std::string& name, long long p, int n, bool all_curves, long sample,
           unsigned long long seed, long precision, long long degree, long budget,
           const std::optional<std::vector<CurveSpec>>& curves) {
            return report_to_dict(run_suite(
                name, make_config(p, n, all_curves, sample, seed, precision, degree,
                                  budget, curves)));
        },
        py::arg("name"), py::arg("p") = 13, py::arg("n") = 3,
        py::arg("all_curves") = false, py::arg("sample") = 25, py::arg("seed") = 1,
        py::arg("precision") = 8, py::arg("degree") = 5, py::arg("budget") = 0,
        py::arg("curves") = std::nullopt,
        "run one verification suite and return its report as a dict");

    m.def(
        "report_lines",
        [](const std::string& name, long long p, int n, bool all_curves, long sample,
           unsigned long long seed, long precision, long long degree, long budget) {
            std::ostringstream os;
            write_report(run_suite(name,
                                   make_config(p, n, all_curves, sample, seed,
                                               precision, degree, budget,
                                               std::nullopt)),
                         os, false);
            return os.str();
        },
        py::arg("name"), py::arg("p") = 13, py::arg("n") = 3,
        py::arg("all_curves") = false, py::arg("sample") = 25, py::arg("seed") = 1,
        py::arg("precision") = 8, py::arg("degree") = 5, py::arg("budget") = 0,
        "run one suite and return the JSON-lines report text");

    m.def(
        "discriminant_roots",
        [](const CurveSpec& spec, int n) {
            const TorsionModule tm{realize(spec), n};
            std::vector<std::string> out;
            if (n == 3)
                for (const auto& r : w3_all(tm))
                    out.push_back(r.value.str());
            else
                for (const auto& r : w4_all(tm))
                    out.push_back(r.value.str());
            return out;
        },
        py::arg("spec"), py::arg("n"),
        "all n-th roots of the discriminant read off the n-torsion, as strings");

    m.def(
        "calibration",
        [](const CurveSpec& spec, int n) {
            return pairing_calibration(TorsionModule{realize(spec), n});
        },
        py::arg("spec"), py::arg("n"),
        "pairing sign making the wedge action match the root torsor");

    m.def(
        "group_order",
        [](const CurveSpec& spec) { return group_order(realize(spec)); },
        py::arg("spec"));

    m.def(
        "tate_check",
        [](int n, long precision) {
            const auto rep = tate_root_check(n, precision);
            py::dict out;
            for (const auto& [name, pass] : rep.properties)
                out[py::str(name)] = pass;
            return out;
        },
        py::arg("n"), py::arg("precision") = 8,
        "formal-series verification, property name to pass/fail");

    m.def(
        "coates_sweep",
        [](long long p, long long ell) {
            const auto s = coates_sweep(p, ell);
            py::dict out;
            out["p"] = s.p;
            out["degree"] = s.degree;
            out["curves_total"] = s.curves_total;
            out["curves_with_isogeny"] = s.curves_with_isogeny;
            out["holds"] = s.holds;
            out["fails"] = s.fails;
            return out;
        },
        py::arg("p"), py::arg("degree"),
        "12th-power discriminant classes across all rational isogenies over F_p");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
