// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DISCROOT_ISOGENY_HPP
#define DISCROOT_ISOGENY_HPP

#include <optional>
#include <vector>

#include "discroot/curve.hpp"
#include "discroot/field.hpp"
#include "discroot/torsion.hpp"

namespace discroot {

/// Separable isogeny of prime degree between curves in the y^2 = cubic model,
/// presented by its kernel. The point map is evaluated by isogeny_image.
struct Isogeny {
    Curve<FieldElement> domain;
    Curve<FieldElement> codomain;
    Point<FieldElement> kernel_generator;
    long long degree = 0;
    std::vector<Point<FieldElement>> kernel_points;  // the degree - 1 affine kernel points
};

/// Number of rational points including infinity, by exhaustive x sweep.
/// Requires odd characteristic and field order at most 10^4.
long long group_order(const Curve<FieldElement>& e);

/// |E(F_{q^k})| from n1 = |E(F_q)| through the Frobenius trace recurrence.
long long group_order_power(long long n1, long long q, unsigned k);

/// Point of exact order ell rational over the base field, if one exists.
/// Deterministic search: x sweep, cofactor scaling inside the l-primary part.
std::optional<Point<FieldElement>> find_kernel_point(const Curve<FieldElement>& e,
                                                     long long ell);

/// Quotient by the cyclic group generated by a point of exact prime order ell.
/// Requires a1 = a2 = a3 = 0 and characteristic not 2 or 3.
Isogeny velu_isogeny(const Curve<FieldElement>& e, const Point<FieldElement>& kernel,
                     long long ell);

/// Image of a point under the kernel-translation sum defining the isogeny.
Point<FieldElement> isogeny_image(const Isogeny& phi, const Point<FieldElement>& p);

/// The same isogeny with every coordinate pushed through a field embedding.
Isogeny embed_isogeny(const Isogeny& phi, const Embedding& emb);

/// Dual isogeny: the quotient of the codomain by the image of the full
/// degree-torsion subgroup, constructed over the smallest extension of degree
/// at most max_degree carrying an independent torsion point. The returned
/// isogeny has the embedded codomain of phi as its domain; its own codomain is
/// isomorphic to the domain of phi. Empty when no extension in range works.
std::optional<Isogeny> dual_isogeny(const Isogeny& phi, unsigned max_degree);

/// True when some isomorphism from psi's codomain onto phi's domain makes
/// psi after phi equal multiplication by the degree on `samples` points.
/// Both isogenies must live over the same field with psi.domain = phi.codomain.
bool dual_composes_to_scalar(const Isogeny& phi, const Isogeny& psi, int samples,
                             unsigned long long seed);

/// Whether the two discriminant classes agree modulo twelfth powers across a
/// rational degree-ell isogeny from e; empty when e admits none.
std::optional<bool> coates_class(const Curve<FieldElement>& e, long long ell);

/// Full short-Weierstrass sweep over F_p of the twelfth-power class relation.
struct CoatesSweep {
    long long p = 0;
    long long degree = 0;
    long curves_total = 0;         // nonsingular curves scanned
    long curves_with_isogeny = 0;  // curves with a rational degree-ell kernel
    long holds = 0;
    long fails = 0;
};
CoatesSweep coates_sweep(long long p, long long ell);

}  // namespace discroot

#endif  // DISCROOT_ISOGENY_HPP
