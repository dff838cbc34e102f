// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISCROOT_HARNESS_HPP
#define DISCROOT_HARNESS_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "discroot/curve.hpp"
#include "discroot/field.hpp"

namespace discroot {

/// Short description of a curve over a prime field or an extension of one.
/// Coefficients are integers lifted through the prime subfield.
struct CurveSpec {
    long long p = 0;
    unsigned ext_degree = 1;
    std::array<long long, 5> a{};  // a1, a2, a3, a4, a6
};

Curve<FieldElement> realize(const CurveSpec& spec);
std::string curve_label(const CurveSpec& spec);

/// All nonsingular y^2 = x^3 + ax + b over F_p matching the filter, in
/// lexicographic (a, b) order. Filters: "" (everything), "full-3-torsion",
/// "full-4-torsion", "proper-3-torsion-field", "proper-4-torsion-field",
/// "rational-5-torsion", "rational-7-torsion", "twelfth-power-discriminant".
std::vector<CurveSpec> enumerate_curves(long long p, const std::string& filter);

/// One verified property on one curve (curve empty for global properties).
struct PropertyResult {
    std::string curve;
    std::string property;
    bool pass = true;
    std::string witness;
    double millis = 0.0;
};

struct SuiteConfig {
    long long p = 13;
    int n = 3;
    bool all_curves = false;
    long sample = 25;               // curves, or variable changes for transform
    unsigned long long seed = 1;
    long precision = 8;             // tate
    long long degree = 5;           // coates
    long budget = 0;                // coates: max isogenies checked, 0 = all
    std::optional<std::vector<CurveSpec>> curves;  // overrides enumeration
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<PropertyResult> results;
    int calibration = 0;  // pairing sign when the suite computes one
    long skipped = 0;     // curves whose torsion field exceeds the degree cap
    long failures() const;
    bool ok() const { return failures() == 0; }
};

/// torsor-selftest, cube-product, quartic-root, torsor-compat, transform,
/// tate, coates, galois.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// JSON lines, one object per (curve, property), then one summary object.
/// Byte-identical for identical config and seed; timings only on request.
void write_report(const SuiteReport& rep, std::ostream& os, bool timings);

/// JSON array of {"p": int, "ext_degree": int optional, "a": [5 ints]}.
std::vector<CurveSpec> parse_curve_file(const std::string& path);

}  // namespace discroot

#endif  // DISCROOT_HARNESS_HPP
