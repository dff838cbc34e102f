// discroot: explicit n-th roots of elliptic curve discriminants from torsion points
// Copyright 2026 The discroot Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "discroot/curve.hpp"
#include "discroot/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace discroot {

// Ring adaptors letting the generic curve code run on truncated series.
// Zero and equality are read off the known coefficient window, the
// conservative choice for branch decisions in the group law.
inline bool ring_is_zero(const LaurentSeries& s)
{
    return !s.known_nonzero();
}

inline LaurentSeries ring_from_int(const LaurentSeries&, long long v)
{
    return LaurentSeries::constant(Cyclotomic(v));
}

inline bool ring_eq(const LaurentSeries& a, const LaurentSeries& b)
{
    return !(a - b).known_nonzero();
}

/// Formal curve y^2 + xy = x^3 + a4(q) x + a6(q) over Q(zeta)((z)) with
/// q = z^step, every series carried to the same z-precision.
struct TateModel {
    Cyclotomic::Kind kind;
    int step;
    long prec;
    Curve<LaurentSeries> curve;
};

/// Model with a4 = -5 sum sigma_3(m) q^m and
/// a6 = -(1/12) sum (7 sigma_5(m) + 5 sigma_3(m)) q^m.
TateModel tate_model(Cyclotomic::Kind kind, int step, long prec);

/// q prod_{m>=1} (1 - q^m)^24 as a z-series of the model's precision.
LaurentSeries tate_delta(const TateModel& m);

/// Coordinate series of the point with parameter u = zeta^a z^b. The
/// exponent b may be any integer (u is taken modulo q^Z); u in q^Z itself is
/// rejected since it names the origin.
LaurentSeries tate_x(const TateModel& m, int a, long b);
LaurentSeries tate_y(const TateModel& m, int a, long b);
Point<LaurentSeries> tate_point(const TateModel& m, int a, long b);

/// delta(zeta^a z) = zeta^a z prod_{m>=1}(1 - z^{n m})^{24/n}, q = z^n.
LaurentSeries delta_map(int n, int a, long prec);

/// w_n evaluated on the canonical torsor element of the formal curve, as a
/// z-series: n = 3 uses the partition pairing the zeta-class with the
/// z-class; n = 4 uses the triple (z, i, (iz)^{-1}) on the completed-square
/// model. Either equals delta(z) to precision.
LaurentSeries tate_w3_series(long prec);
LaurentSeries tate_w4_series(long prec);

/// Full consistency report at one precision: discriminant identity, curve
/// membership of the torsion parametrization, torsion structure of the
/// torsor data, and w_n = delta.
struct TateReport {
    bool ok = true;
    std::vector<std::string> failures;
    /// Named outcome of every check performed, pass and fail alike.
    std::vector<std::pair<std::string, bool>> properties;
};
TateReport tate_root_check(int n, long prec);

}  // namespace discroot
