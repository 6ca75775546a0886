#pragma once

#include "curvedisc/poly.hpp"
#include "curvedisc/trace.hpp"

namespace curvedisc {

/// A discriminant value with the derivation that produced it.
struct DiscOutcome {
  Scalar value;
  Trace trace;
};

/// ((d-1)^n - (-1)^n) / d, the power of d separating Res(grad f) from Disc(f).
long hyp_normalization_exponent(int n, int d);

/// Disc(f) for a form of degree d >= 2 in n variables, defined by
/// d^{a(n,d)} * Disc(f) = Res(d_1 f, ..., d_n f).
DiscOutcome disc_hyp(const HomPoly& f, const FallbackOptions& options = {});

/// Discriminant of the points f = g = 0 in P^2, defined by
/// Res(f, g, J_{2,3}(f, g)) = D * Res(f(0,x2,x3), g(0,x2,x3)).
DiscOutcome disc_pts_p2(const HomPoly& f, const HomPoly& g, const FallbackOptions& options = {});

/// Discriminant of the points f1 = f2 = f3 = 0 in P^3, defined by
/// Res(f1, f2, f3, J(f1, f2, f3, x1)) = D * Res(f1(0,.), f2(0,.), f3(0,.)).
/// With f3 = x4 this equals (-1)^{d1 d2} disc_pts_p2(f1(.,0), f2(.,0)).
DiscOutcome disc_pts_p3(const HomPoly& f1, const HomPoly& f2, const HomPoly& f3, const FallbackOptions& options = {});

}  // namespace curvedisc
