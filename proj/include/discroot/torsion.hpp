// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "discroot/curve.hpp"
#include "discroot/torsor.hpp"

#include <map>
#include <optional>
#include <vector>

namespace discroot {

/// Both points (x, y) of the curve above a given x, if any (0, 1, or 2,
/// sorted canonically). Characteristic must be odd.
std::vector<Point<FieldElement>> lift_x(const Curve<FieldElement>& e, const FieldElement& x);

/// Curve with every coefficient pushed through the embedding.
Curve<FieldElement> embed_curve(const Curve<FieldElement>& e, const Embedding& emb);

/// The n-torsion of a curve, realized over the smallest extension of the
/// curve's base field that contains all of E[n] (searched in degree steps of
/// the base degree, total degree at most 16). Provides the dictionary between
/// abstract coordinates in (Z/n)^2 and curve points.
class TorsionModule {
public:
    TorsionModule(Curve<FieldElement> base_curve, int n);

    int n() const { return n_; }
    const FieldPtr& field() const { return field_; }
    const FieldPtr& base_field() const { return base_field_; }
    unsigned ext_degree_over_base() const
    {
        return field_->degree() / base_field_->degree();
    }
    /// The base curve with coefficients in the torsion field.
    const Curve<FieldElement>& curve() const { return *curve_; }
    const Point<FieldElement>& gen_p() const { return p_; }
    const Point<FieldElement>& gen_q() const { return q_; }

    Point<FieldElement> point_of(torsor::Vec2 v) const;
    torsor::Vec2 coords_of(const Point<FieldElement>& pt) const;
    /// All n^2 points of E[n], the point at infinity first, the rest in
    /// canonical coordinate order.
    std::vector<Point<FieldElement>> all_points() const;

    /// Matrix of the base-field Frobenius acting on the chosen basis.
    torsor::Mat2 frobenius_matrix() const;
    /// Apply the base-field Frobenius to a point coordinatewise.
    Point<FieldElement> frobenius_point(const Point<FieldElement>& pt) const;

private:
    using PointKey = std::pair<std::vector<u64>, std::vector<u64>>;
    static PointKey key_of(const Point<FieldElement>& pt);
    void index_points();

    int n_;
    FieldPtr base_field_;
    FieldPtr field_;
    std::optional<Curve<FieldElement>> curve_;
    Point<FieldElement> p_, q_;
    std::map<PointKey, torsor::Vec2> index_;
    std::vector<Point<FieldElement>> table_;  // table_[a * n + b] = aP + bQ
};

}  // namespace discroot
