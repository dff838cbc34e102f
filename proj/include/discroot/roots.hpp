// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "discroot/pairing.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace discroot {

/// An n-th root of the discriminant, remembering the Weierstrass model it was
/// computed from: value^n equals that model's discriminant. Cross-model
/// comparisons must go through the u-power covariance laws explicitly.
struct RootValue {
    int n;
    FieldElement value;
    Curve<FieldElement> model;
};

/// Change of variables y -> y + (a1 x + a3) / 2 killing a1 and a3. Odd
/// characteristic; leaves u = 1, so the discriminant is unchanged.
Transform<FieldElement> square_completion(const Curve<FieldElement>& e);
Curve<FieldElement> completed_square(const Curve<FieldElement>& e);

/// Cube root of the discriminant attached to a 2-2 partition of the
/// projective line of E[3]: b4 - 3(x1 x2 + x3 x4) with x1, x2 the
/// x-coordinates of the classes in one block and x3, x4 those of the other.
/// Any Weierstrass model works.
RootValue w3_root(const TorsionModule& tm, const torsor::Partition22& t);
/// Values over all three partitions, in the canonical partition order.
std::vector<RootValue> w3_all(const TorsionModule& tm);

/// Square root of the discriminant attached to a cyclic order on the three
/// nonzero 2-torsion points, given by their coordinates in a 4-torsion
/// module: 4 (xA - xB)(xB - xC)(xC - xA). Requires a model with a1 = a3 = 0.
RootValue w2_root(const TorsionModule& tm, const std::array<torsor::Vec2, 3>& cyc);

/// Fourth root of the discriminant attached to an ordered triple (P, Q, R)
/// halving the three nonzero 2-torsion points: twice the product of the
/// chord slopes from P to P + 2Q, Q to Q + 2R, and R to R + 2P. Requires a
/// model with a1 = a3 = 0.
RootValue w4_tilde_root(const TorsionModule& tm, const torsor::Triple& s);
/// The same value computed from the canonical representative of the triple's
/// class; constant on classes, so any member of the class may be passed.
RootValue w4_root(const TorsionModule& tm, const torsor::Triple& t);
/// Values over the four classes, in canonical class order.
std::vector<RootValue> w4_all(const TorsionModule& tm);

/// The sign s such that w_n(v.t) = e_n(v)^s w_n(t) holds for every wedge
/// power v and torsor element t of the module. Throws if neither sign works
/// uniformly.
int pairing_calibration(const TorsionModule& tm);

/// 3- and 4-torsion modules of one curve realized over a single common
/// field, both on the completed-square model, so that their root values
/// combine into twelfth roots.
std::pair<TorsionModule, TorsionModule> twelve_torsion_modules(const Curve<FieldElement>& e);

/// Twelfth root of the discriminant from a pair of torsor elements:
/// combined = w3 * w4^3 / Delta, so combined^12 = Delta exactly. Both
/// modules must share one field and one model.
struct W12Value {
    RootValue r3;
    RootValue r4;
    FieldElement combined;
};
W12Value w12_root(const TorsionModule& tm3, const TorsionModule& tm4,
                  const torsor::Partition22& t3, const torsor::Triple& t4);

/// Exact covariance report for a change of Weierstrass variables: checks the
/// b-invariant and discriminant laws and w3 = u^4 w3' (n = 3) or
/// w4~ = u^3 w4~' (n = 4, which requires s = t = 0) on transported torsion
/// data. Every failed identity is listed.
struct TransformReport {
    bool ok = true;
    std::vector<std::string> failures;
};
TransformReport transformation_check(const TorsionModule& tm, const Transform<FieldElement>& ch);

}  // namespace discroot
