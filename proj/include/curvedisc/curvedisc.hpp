#pragma once

#include "curvedisc/disctower.hpp"
#include "curvedisc/macaulay.hpp"

namespace curvedisc {

/// Degree bookkeeping for a pair of surfaces of degrees d1, d2 (d1 + d2 >= 3).
struct Deltas {
  long e1 = 0;
  long e2 = 0;
  long delta1 = 0;          // degree of Disc in the coefficients of g1
  long delta2 = 0;          // degree of Disc in the coefficients of g2
  long invariance_exp = 0;  // Disc(g o phi) = det(phi)^invariance_exp * Disc(g); always even
  long D1 = 0;              // exponent of the d1 = 1 convention
  long D2 = 0;              // exponent of the d2 = 1 convention
};

Deltas deltas(int d1, int d2);

/// 6 d (d-1)^2: Disc(u11 g1 + u12 g2, u21 g1 + u22 g2) = det(u)^this * Disc(g1, g2).
long covariance_exp(int d);

/// Disc(g1, g2) of the space curve g1 = g2 = 0, defined by
/// Res(g1, g2, J_{1,2}, J_{2,3})
///   = (-1)^{d1 d2} * D * Res(g1, d_2 g1, g2, d_2 g2) * disc_pts_p2(g1(.,0), g2(.,0)),
/// where for d_j = 1 the middle resultant is J(g_j, x4, x3, x1)^{D_j}.
/// Z[t] inputs are evaluated at integer points and interpolated.
DiscOutcome disc_curve(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options = {});

/// The same discriminant computed with arbitrary linear forms l, m, n:
/// Res(g1, g2, J(g1,g2,l,m), J(g1,g2,l,n))
///   = D * Res(g1, J(g1,l,m,n), g2, J(g2,l,m,n)) * disc_pts_p3(g1, g2, l).
/// DegenerateLinearForms when l, m, n are linearly dependent.
DiscOutcome disc_curve_generic(const HomPoly& g1, const HomPoly& g2, const HomPoly& l, const HomPoly& m,
                               const HomPoly& n, const FallbackOptions& options = {});

/// Disc(u x4^{d1} + f, g) for f, g in x1, x2, x3 by the closed formula
/// (-1)^{d1} d1^{d1 d2 (d1+d2-3)} u^{d2[(d1+d2-2)^2 - (d1-1)(d2-1)]} Disc(f,g)^{d1-1} Disc(g)^{d1}.
/// Routes to disc_curve when u = 0 or d2 < 2.
DiscOutcome disc_curve_cylinder(const Scalar& u, const HomPoly& f, const HomPoly& g,
                                const FallbackOptions& options = {});

/// The three resultant factors of the defining identity of disc_curve.
struct DefiningFactors {
  Scalar numerator;
  Scalar middle;
  Scalar bottom;
  int sign = 1;  // (-1)^{d1 d2}
};

DefiningFactors defining_factors(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options = {});

/// numerator == sign * D * middle * bottom, checked by multiplication.
bool verify_defining_identity(const HomPoly& g1, const HomPoly& g2, const Scalar& D,
                              const FallbackOptions& options = {});

}  // namespace curvedisc
