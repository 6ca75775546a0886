#include "curvedisc/curvedisc.hpp"

#include "ladder.hpp"

namespace curvedisc {

namespace {

void check_pair(const HomPoly& g1, const HomPoly& g2) {
  if (!(g1.ring() == g2.ring())) throw Error(ErrorCode::RingMismatch, "g1 and g2 live in different rings");
  if (g1.nvars() != 4 || g2.nvars() != 4)
    throw Error(ErrorCode::ArityMismatch, "a space curve needs two forms in 4 variables");
  if (g1.degree() < 1 || g2.degree() < 1 || g1.degree() + g2.degree() < 3)
    throw Error(ErrorCode::DegreeConstraint, "curve discriminant needs d1, d2 >= 1 and d1 + d2 >= 3, got (" +
                                                 std::to_string(g1.degree()) + ", " + std::to_string(g2.degree()) + ")");
}

HomPoly var(const RingSpec& ring, int i) { return HomPoly::variable(ring, 4, i); }

HomPoly jac4(const HomPoly& a, const HomPoly& b, const HomPoly& c, const HomPoly& d) {
  const std::vector<HomPoly> rows{a, b, c, d};
  return jac_det(rows);
}

// Res(g1, J(g1,l,m,n), g2, J(g2,l,m,n)), or J(g_j,l,m,n)^{D_j} when d_j = 1.
Scalar middle_factor(const HomPoly& g1, const HomPoly& g2, const HomPoly& l, const HomPoly& m, const HomPoly& n,
                     const FallbackOptions& options, Trace* trace) {
  const Deltas dl = deltas(g1.degree(), g2.degree());
  const HomPoly j1 = jac4(g1, l, m, n), j2 = jac4(g2, l, m, n);
  if (g1.degree() == 1) {
    record(trace, "convention", "d1 = 1: middle factor J(g1,l,m,n)^" + std::to_string(dl.D1));
    return j1.coeff(Monomial()).pow(static_cast<unsigned long>(dl.D1));
  }
  if (g2.degree() == 1) {
    record(trace, "convention", "d2 = 1: middle factor J(g2,l,m,n)^" + std::to_string(dl.D2));
    return j2.coeff(Monomial()).pow(static_cast<unsigned long>(dl.D2));
  }
  return resultant({g1, j1, g2, j2}, options, trace);
}

Scalar sign_of(int d1, int d2, const RingSpec& ring) {
  return (d1 * d2) % 2 ? -Scalar::one(ring) : Scalar::one(ring);
}

}  // namespace

Deltas deltas(int d1, int d2) {
  if (d1 < 1 || d2 < 1 || d1 + d2 < 3)
    throw Error(ErrorCode::DegreeConstraint, "deltas need d1, d2 >= 1 and d1 + d2 >= 3");
  Deltas out;
  out.e1 = d1 - 1;
  out.e2 = d2 - 1;
  const long e1 = out.e1, e2 = out.e2;
  out.delta1 = d2 * (3 * e1 * e1 + 2 * e1 * e2 + e2 * e2);
  out.delta2 = d1 * (3 * e2 * e2 + 2 * e1 * e2 + e1 * e1);
  out.invariance_exp = static_cast<long>(d1) * d2 * ((e1 + e2) * (e1 + e2) - e1 * e2);
  out.D1 = static_cast<long>(d2) * (d2 - 1);
  out.D2 = static_cast<long>(d1) * (d1 - 1);
  return out;
}

long covariance_exp(int d) { return 6L * d * (d - 1) * (d - 1); }

DefiningFactors defining_factors(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options) {
  check_pair(g1, g2);
  const RingSpec& ring = g1.ring();
  DefiningFactors out;
  out.sign = (g1.degree() * g2.degree()) % 2 ? -1 : 1;
  out.middle = middle_factor(g1, g2, var(ring, 3), var(ring, 2), var(ring, 0), options, nullptr);
  out.bottom = disc_pts_p2(set_var_zero(g1, 3), set_var_zero(g2, 3), options).value;
  out.numerator = resultant({g1, g2, jac_minor(g1, g2, 0, 1), jac_minor(g1, g2, 1, 2)}, options);
  return out;
}

bool verify_defining_identity(const HomPoly& g1, const HomPoly& g2, const Scalar& D, const FallbackOptions& options) {
  const DefiningFactors f = defining_factors(g1, g2, options);
  return f.numerator == sign_of(g1.degree(), g2.degree(), g1.ring()) * D * f.middle * f.bottom;
}

DiscOutcome disc_curve(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options) {
  check_pair(g1, g2);
  const Deltas dl = deltas(g1.degree(), g2.degree());
  const std::vector<long> degrees{dl.delta1, dl.delta2};
  DiscOutcome out;
  // D is homogeneous of positive degree in the coefficients of each g_i.
  if (g1.is_zero() || g2.is_zero()) {
    out.value = Scalar::zero(g1.ring());
    record(&out.trace, "zero input", "a defining form vanishes identically");
    return out;
  }
  if (g1.ring().is_rationals()) {
    out.value = detail::over_integers({g1, g2}, degrees, [&](const std::vector<HomPoly>& h) {
      return disc_curve(h[0], h[1], options).value;
    }, &out.trace);
    return out;
  }
  const detail::Formula formula = [&](std::span<const HomPoly> in, Trace* trace) -> std::optional<Scalar> {
    const RingSpec& ring = in[0].ring();
    const Scalar middle = middle_factor(in[0], in[1], var(ring, 3), var(ring, 2), var(ring, 0), options, trace);
    if (middle.is_zero()) return std::nullopt;
    const DiscOutcome bottom = disc_pts_p2(set_var_zero(in[0], 3), set_var_zero(in[1], 3), options);
    if (trace) trace->insert(trace->end(), bottom.trace.begin(), bottom.trace.end());
    if (bottom.value.is_zero()) return std::nullopt;
    const Scalar numerator = resultant({in[0], in[1], jac_minor(in[0], in[1], 0, 1), jac_minor(in[0], in[1], 1, 2)},
                                       options, trace);
    record(trace, "divide", "(-1)^(d1 d2) Res(g1, g2, J12, J23) / middle, then / disc_pts_p2(g1(.,0), g2(.,0))");
    return exact_div(exact_div(sign_of(in[0].degree(), in[1].degree(), ring) * numerator, middle), bottom.value);
  };
  out.value = detail::run_ladder({g1, g2}, formula, {"disc_curve", degrees, true}, options, &out.trace);
  return out;
}

DiscOutcome disc_curve_generic(const HomPoly& g1, const HomPoly& g2, const HomPoly& l, const HomPoly& m,
                               const HomPoly& n, const FallbackOptions& options) {
  check_pair(g1, g2);
  for (const HomPoly* f : {&l, &m, &n}) {
    if (f->nvars() != 4 || f->degree() != 1) throw Error(ErrorCode::DegreeConstraint, "l, m, n must be linear forms in 4 variables");
    if (!(f->ring() == g1.ring())) throw Error(ErrorCode::RingMismatch, "linear forms live in a different ring");
  }
  bool independent = false;
  for (int skip = 0; skip < 4 && !independent; ++skip) {
    std::vector<Scalar> minor;
    for (const HomPoly* f : {&l, &m, &n})
      for (int j = 0; j < 4; ++j)
        if (j != skip) minor.push_back(f->coeff(Monomial::variable(j)));
    independent = !small_det(minor, 3).is_zero();
  }
  if (!independent) throw Error(ErrorCode::DegenerateLinearForms, "l, m, n are linearly dependent");

  const Deltas dl = deltas(g1.degree(), g2.degree());
  const std::vector<long> degrees{dl.delta1, dl.delta2, 0, 0, 0};
  DiscOutcome out;
  if (g1.ring().is_rationals()) {
    out.value = detail::over_integers({g1, g2, l, m, n}, degrees, [&](const std::vector<HomPoly>& h) {
      return disc_curve_generic(h[0], h[1], h[2], h[3], h[4], options).value;
    }, &out.trace);
    return out;
  }
  const detail::Formula formula = [&](std::span<const HomPoly> in, Trace* trace) -> std::optional<Scalar> {
    const Scalar middle = middle_factor(in[0], in[1], in[2], in[3], in[4], options, trace);
    if (middle.is_zero()) return std::nullopt;
    const DiscOutcome bottom = disc_pts_p3(in[0], in[1], in[2], options);
    if (trace) trace->insert(trace->end(), bottom.trace.begin(), bottom.trace.end());
    if (bottom.value.is_zero()) return std::nullopt;
    const Scalar numerator =
        resultant({in[0], in[1], jac4(in[0], in[1], in[2], in[3]), jac4(in[0], in[1], in[2], in[4])}, options, trace);
    record(trace, "divide", "Res(g1, g2, J(g1,g2,l,m), J(g1,g2,l,n)) / middle, then / disc_pts_p3(g1, g2, l)");
    return exact_div(exact_div(numerator, middle), bottom.value);
  };
  out.value = detail::run_ladder({g1, g2, l, m, n}, formula, {"disc_curve_generic", degrees, true}, options, &out.trace);
  return out;
}

DiscOutcome disc_curve_cylinder(const Scalar& u, const HomPoly& f, const HomPoly& g, const FallbackOptions& options) {
  if (f.nvars() != 3 || g.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "cylinder inputs are forms in x1, x2, x3");
  if (!(f.ring() == g.ring()) || !(u.ring() == f.ring())) throw Error(ErrorCode::RingMismatch, "cylinder inputs live in different rings");
  const int d1 = f.degree(), d2 = g.degree();
  if (d1 < 1 || d2 < 1 || d1 + d2 < 3) throw Error(ErrorCode::DegreeConstraint, "cylinder needs d1, d2 >= 1 and d1 + d2 >= 3");
  const RingSpec& ring = f.ring();
  if (u.is_zero() || d2 < 2) {
    DiscOutcome out = disc_curve(HomPoly::monomial(u, 4, Monomial::variable(3, static_cast<unsigned>(d1))) + embed(f, 4),
                                 embed(g, 4), options);
    out.trace.insert(out.trace.begin(), TraceStep{"cylinder", "fast path inapplicable; general formula"});
    return out;
  }
  const unsigned long d_exp = static_cast<unsigned long>(d1 * d2 * (d1 + d2 - 3));
  const unsigned long u_exp = static_cast<unsigned long>(d2 * ((d1 + d2 - 2) * (d1 + d2 - 2) - (d1 - 1) * (d2 - 1)));
  DiscOutcome out;
  record(&out.trace, "cylinder",
         "(-1)^" + std::to_string(d1 * d2) + " * " + std::to_string(d1) + "^" + std::to_string(d_exp) + " * u^" +
             std::to_string(u_exp) + " * Disc(f,g)^" + std::to_string(d1 - 1) + " * Disc(g)^" + std::to_string(d1));
  const DiscOutcome points = disc_pts_p2(f, g, options);
  const DiscOutcome hyp = disc_hyp(g, options);
  out.trace.insert(out.trace.end(), points.trace.begin(), points.trace.end());
  out.trace.insert(out.trace.end(), hyp.trace.begin(), hyp.trace.end());
  Scalar value = Scalar::from_integer(ring, Integer(d1)).pow(d_exp) * u.pow(u_exp) *
                 points.value.pow(static_cast<unsigned long>(d1 - 1)) * hyp.value.pow(static_cast<unsigned long>(d1));
  // (-1)^{d1 d2}: swapping g and f in Res(., ., J_{2,3}) carries no sign.
  out.value = (d1 * d2) % 2 ? -value : value;
  return out;
}

}  // namespace curvedisc
