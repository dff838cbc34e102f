// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "discroot/torsion.hpp"

namespace discroot {

/// Weil pairing e_n(p, q) of two n-torsion points: the signed ratio
/// (-1)^n f_p(q) / f_q(p) of the two Miller functions. Points generating the
/// same cyclic subgroup pair to one; all other configurations evaluate
/// without degeneracies. The value is an n-th root of unity.
FieldElement weil_pairing(const Curve<FieldElement>& e, const Point<FieldElement>& p,
                          const Point<FieldElement>& q, int n);

/// e_n evaluated on a wedge class: c times the wedge of the module basis maps
/// to e_n(P, Q)^c.
FieldElement pairing_of_wedge(const TorsionModule& tm, int c);

}  // namespace discroot
