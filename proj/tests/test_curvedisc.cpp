#include <gtest/gtest.h>

#include <random>

#include "curvedisc/curvedisc.hpp"
#include "fixtures.hpp"

namespace curvedisc {
namespace {

using testing::P;
using testing::Z;
using testing::ZA;
using testing::zi;

using Pair = std::pair<HomPoly, HomPoly>;

Pair random_pair(int d1, int d2, std::mt19937_64& rng, int bound = 3) {
  return {random_poly(Z, 4, d1, rng, bound), random_poly(Z, 4, d2, rng, bound)};
}

HomPoly random_linear(std::mt19937_64& rng, int bound = 3) { return random_poly(Z, 4, 1, rng, bound); }

Scalar disc(const HomPoly& g1, const HomPoly& g2) { return disc_curve(g1, g2).value; }

// 2a (110592a^7 + ... - 4448)(3456a^5 + ... + 3176)^2, expanded independently.
ParamPoly printed_clebsch_discriminant() {
  const ParamPoly a = ParamPoly::monomial(1, 1);
  const ParamPoly p1({Integer(-4448), Integer(-33924), Integer(238468), Integer(416575), Integer(1303260),
                      Integer(1163408), Integer(442944), Integer(110592)});
  const ParamPoly p2({Integer(3176), Integer(11134), Integer(14069), Integer(10656), Integer(8208), Integer(3456)});
  return a * Integer(2) * p1 * p2 * p2;
}

TEST(Deltas, Examples) {
  const Deltas d32 = deltas(3, 2);
  EXPECT_EQ(d32.delta1, 34);
  EXPECT_EQ(d32.delta2, 33);
  const Deltas d22 = deltas(2, 2);
  EXPECT_EQ(d22.delta1, 12);
  EXPECT_EQ(d22.delta2, 12);
  EXPECT_EQ(covariance_exp(2), 12);
  EXPECT_EQ(deltas(1, 2).D1, 2);
  for (int d1 = 1; d1 <= 6; ++d1)
    for (int d2 = 1; d2 <= 6; ++d2) {
      if (d1 + d2 < 3) continue;
      const Deltas d = deltas(d1, d2);
      EXPECT_EQ(d.invariance_exp % 2, 0);
      EXPECT_GE(d.delta1, 0);
      EXPECT_GE(d.delta2, 0);
    }
  try {
    deltas(1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeConstraint);
  }
}

TEST(Clebsch, SpecialisedFamilyMatchesPrintedProduct) {
  const ParamPoly expected = printed_clebsch_discriminant();
  for (long a0 = -2; a0 <= 3; ++a0) {
    const HomPoly f2 = eval_param(testing::clebsch_quadric(), Integer(a0));
    EXPECT_EQ(disc(testing::clebsch(), f2), zi(0) + Scalar::from_integer(Z, expected.eval(Integer(a0)))) << a0;
  }
}

TEST(Clebsch, ParameterFamilyMatchesPrintedProduct) {
  const DiscOutcome out = disc_curve(testing::clebsch(ZA), testing::clebsch_quadric());
  EXPECT_EQ(out.value, Scalar::from_param(ZA, printed_clebsch_discriminant()));
  EXPECT_EQ(out.trace.back().stage, "interpolation");
}

TEST(Clebsch, CharacteristicFive) {
  // Printed mod-5 form: 2a (2a^7 + 4a^6 + 3a^5 + 3a^2 + a + 2)(a^5 + 3a^4 + a^3 + 4a^2 + 4a + 1)^2.
  const ParamPoly a = ParamPoly::monomial(1, 1);
  const ParamPoly q1({Integer(2), Integer(1), Integer(3), Integer(0), Integer(0), Integer(3), Integer(4), Integer(2)});
  const ParamPoly q2({Integer(1), Integer(4), Integer(4), Integer(1), Integer(3), Integer(1)});
  const ParamPoly mod5 = a * Integer(2) * q1 * q2 * q2;
  const RingSpec f5 = RingSpec::mod_p(5);
  for (long a0 = -2; a0 <= 3; ++a0) {
    const HomPoly f2 = eval_param(testing::clebsch_quadric(), Integer(a0));
    const Scalar over_z = disc(testing::clebsch(), f2);
    EXPECT_EQ(Scalar::from_integer(f5, over_z.integer()), Scalar::from_integer(f5, mod5.eval(Integer(a0))));
    EXPECT_EQ(disc(testing::clebsch(f5), change_ring(f2, f5)), Scalar::from_integer(f5, over_z.integer()));
  }
  for (long b = 0; b <= 2; ++b) {
    const HomPoly f2 = eval_param(testing::clebsch_quadric(), Integer(5 * b - 4));
    EXPECT_EQ(reduce_mod(disc(testing::clebsch(), f2).integer(), 5), 0u) << b;
  }
}

TEST(DiscCurve, SingularQuadricPair) {
  // x1 x2 = 0 is singular along x1 = x2 = 0, which meets g2.
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    const HomPoly g2 = random_poly(Z, 4, 2, rng);
    EXPECT_TRUE(disc(P("x1*x2", Z, 4), g2).is_zero());
  }
}

TEST(DiscCurve, DoubleLineNeedsPerturbation) {
  // On x1 + x3 + x4 = 0 the first form is -2 x4^2: a double line, singular everywhere.
  const HomPoly g1 = P("x1*x4 + x3*x4 - x4^2", Z, 4), g2 = P("-x1 - x3 - x4", Z, 4);
  const DiscOutcome out = disc_curve(g1, g2);
  EXPECT_TRUE(out.value.is_zero());
  bool perturbed = false;
  for (const auto& step : out.trace) perturbed |= step.stage == "perturbation";
  EXPECT_TRUE(perturbed);
  const RingSpec f3 = RingSpec::mod_p(3);
  EXPECT_TRUE(disc_curve(P("x1*x4 + x3*x4 + 2*x4^2", f3, 4), P("2*x1 + 2*x3 + 2*x4", f3, 4)).value.is_zero());
}

TEST(DiscCurve, ZeroInput) {
  const HomPoly g1 = P("x1^2 + x2^2 + x3^2 + x4^2", Z, 4);
  EXPECT_TRUE(disc(g1, HomPoly(Z, 4, 2)).is_zero());
  EXPECT_TRUE(disc(HomPoly(Z, 4, 3), g1).is_zero());
  EXPECT_TRUE(disc(g1, HomPoly(Z, 4, 1)).is_zero());
}

TEST(DiscCurve, DefiningIdentity) {
  std::mt19937_64 rng(2);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto [g1, g2] = random_pair(d1, d2, rng, 5);
      const Scalar D = disc(g1, g2);
      const DefiningFactors f = defining_factors(g1, g2);
      EXPECT_EQ(f.numerator, Scalar::from_integer(Z, f.sign) * D * f.middle * f.bottom);
      EXPECT_TRUE(verify_defining_identity(g1, g2, D));
    }
  }
}

TEST(DiscCurve, Homogeneity) {
  std::mt19937_64 rng(3);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 2}}) {
    const auto [g1, g2] = random_pair(d1, d2, rng);
    const Deltas dl = deltas(d1, d2);
    const Scalar base = disc(g1, g2);
    EXPECT_EQ(disc(zi(-2) * g1, g2), zi(-2).pow(static_cast<unsigned long>(dl.delta1)) * base);
    EXPECT_EQ(disc(g1, zi(3) * g2), zi(3).pow(static_cast<unsigned long>(dl.delta2)) * base);
  }
}

TEST(DiscCurve, Permutation) {
  std::mt19937_64 rng(4);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 3}}) {
    const auto [g1, g2] = random_pair(d1, d2, rng);
    EXPECT_EQ(disc(g1, g2), disc(g2, g1));
  }
}

TEST(DiscCurve, ElementaryTransformation) {
  std::mt19937_64 rng(5);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 2}}) {
    const auto [g1, g2] = random_pair(d1, d2, rng);
    const HomPoly h = random_poly(Z, 4, d2 - d1, rng, 2);
    EXPECT_EQ(disc(g1, g2 + h * g1), disc(g1, g2));
  }
}

TEST(DiscCurve, Covariance) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    const auto [g1, g2] = random_pair(2, 2, rng);
    const long u11 = uniform_int(rng, -2, 2), u12 = uniform_int(rng, -2, 2), u21 = uniform_int(rng, -2, 2),
               u22 = uniform_int(rng, -2, 2);
    const Scalar det_u = zi(u11 * u22 - u12 * u21);
    EXPECT_EQ(disc(zi(u11) * g1 + zi(u12) * g2, zi(u21) * g1 + zi(u22) * g2),
              det_u.pow(static_cast<unsigned long>(covariance_exp(2))) * disc(g1, g2));
  }
}

TEST(DiscCurve, Invariance) {
  std::mt19937_64 rng(7);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const auto [g1, g2] = random_pair(d1, d2, rng, 2);
    std::vector<Scalar> entries;
    for (int k = 0; k < 16; ++k) entries.push_back(zi(uniform_int(rng, -1, 1)));
    const LinearChange phi(entries, 4);
    EXPECT_EQ(disc(compose_linear(g1, phi), compose_linear(g2, phi)),
              phi.det().pow(static_cast<unsigned long>(deltas(d1, d2).invariance_exp)) * disc(g1, g2));
  }
  // Variable permutations act trivially.
  const auto [g1, g2] = random_pair(3, 2, rng);
  const LinearChange swap({zi(0), zi(0), zi(1), zi(0), zi(0), zi(1), zi(0), zi(0), zi(1), zi(0), zi(0), zi(0), zi(0),
                           zi(0), zi(0), zi(1)},
                          4);
  EXPECT_EQ(disc(compose_linear(g1, swap), compose_linear(g2, swap)), disc(g1, g2));
}

TEST(DiscCurve, HyperplaneSection) {
  std::mt19937_64 rng(8);
  for (int d = 2; d <= 3; ++d)
    for (int i = 0; i < 4; ++i) {
      const HomPoly g = random_poly(Z, 4, d, rng);
      const Scalar sign = zi(d % 2 ? -1 : 1);
      EXPECT_EQ(disc(g, HomPoly::variable(Z, 4, i)), sign * disc_hyp(set_var_zero(g, i)).value);
    }
}

TEST(DiscCurve, PlaneCurveThroughLinearForm) {
  std::mt19937_64 rng(9);
  for (int d = 2; d <= 3; ++d) {
    const HomPoly g = random_poly(Z, 4, d, rng);
    const HomPoly l = random_linear(rng);
    const Scalar D = disc(g, l);
    for (int i = 0; i < 4; ++i) {
      const Scalar li = l.coeff(Monomial::variable(i));
      if (li.is_zero()) continue;
      std::vector<HomPoly> images;
      for (int j = 0; j < 4; ++j) {
        HomPoly image = li * HomPoly::variable(Z, 4, j);
        if (j == i) image -= l;
        images.push_back(image);
      }
      const HomPoly restricted = set_var_zero(substitute(g, images), i);
      EXPECT_EQ(li.pow(static_cast<unsigned long>(2 * d * (d - 1) * (d - 1))) * D,
                zi(d % 2 ? -1 : 1) * disc_hyp(restricted).value);
    }
  }
}

TEST(DiscCurve, LinearFirstFormConvention) {
  // d1 = 1 uses J(g1, x4, x3, x1)^{D_1}; a perturbation g1 + t h interpolated at t = 0 is an independent route.
  std::mt19937_64 rng(10);
  const HomPoly g1 = P("x1 + x2", Z, 4);
  const HomPoly g2 = random_poly(Z, 4, 3, rng);
  Trace trace;
  const DiscOutcome direct = disc_curve(g1, g2);
  bool convention = false;
  for (const auto& s : direct.trace) convention = convention || s.stage == "convention";
  EXPECT_TRUE(convention);
  const HomPoly h = random_linear(rng);
  const long degree = deltas(1, 3).delta1;
  std::vector<Integer> points, values;
  for (long t0 = 1; static_cast<long>(points.size()) <= degree; ++t0) {
    points.emplace_back(t0);
    values.push_back(disc(g1 + zi(t0) * h, g2).integer());
  }
  EXPECT_EQ(direct.value.integer(), interpolate_at_zero(points, values));
}

TEST(DiscCurveGeneric, IndependentOfLinearForms) {
  std::mt19937_64 rng(11);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 2}}) {
    const auto [g1, g2] = random_pair(d1, d2, rng);
    const Scalar D = disc(g1, g2);
    EXPECT_EQ(disc_curve_generic(g1, g2, P("x4", Z, 4), P("x3", Z, 4), P("x1", Z, 4)).value, D);
    for (int trial = 0; trial < 2; ++trial)
      EXPECT_EQ(disc_curve_generic(g1, g2, random_linear(rng), random_linear(rng), random_linear(rng)).value, D);
  }
}

TEST(DiscCurveGeneric, DependentLinearForms) {
  try {
    disc_curve_generic(P("x1^2 + x2^2 + x3*x4"), P("x1*x2 + x3^2 - x4^2"), P("x1 + x2", Z, 4), P("x3", Z, 4),
                       P("x1 + x2 + 2*x3", Z, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateLinearForms);
  }
}

// Sign oracles behind the (-1)^d factors above.
TEST(DiscCurveSigns, PointsOnCoordinateLineMatchBinaryDiscriminant) {
  // Res(x1^3 + x2^3, x3, 3 x2^2) = 27 Res(x1^3 + x2^3, x3, x2)^2 = 27 and Res(x2^3, x3) = 1.
  EXPECT_EQ(disc_pts_p2(P("x1^3 + x2^3", Z, 3), P("x3", Z, 3)).value, zi(27));
  // 3 D = Res(3 x1^2, 3 x2^2) = 81.
  EXPECT_EQ(disc_hyp(P("x1^3 + x2^3", Z, 2)).value, zi(27));
  std::mt19937_64 rng(15);
  for (int d = 2; d <= 4; ++d) {
    const HomPoly h = random_poly(Z, 3, d, rng);
    EXPECT_EQ(disc_pts_p2(h, HomPoly::variable(Z, 3, 2)).value, disc_hyp(set_var_zero(h, 2)).value);
    // Through eq. reduction to x4 the P^3 discriminant picks up (-1)^d.
    const HomPoly g = random_poly(Z, 4, d, rng);
    EXPECT_EQ(disc_pts_p3(g, HomPoly::variable(Z, 4, 0), HomPoly::variable(Z, 4, 1)).value,
              zi(d % 2 ? -1 : 1) * disc_hyp(set_var_zero(set_var_zero(g, 1), 0)).value);
  }
}

TEST(DiscCurveSigns, SwappingPlaneInputsKeepsResultant) {
  // Degrees d1, d2, d1 + d2 - 2 have an even product, so Res(g, f, J) = Res(f, g, J) for every d1 + d2.
  std::mt19937_64 rng(16);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{1, 2}, {3, 2}, {2, 3}, {1, 4}}) {
    const HomPoly f = random_poly(Z, 3, d1, rng), g = random_poly(Z, 3, d2, rng);
    const HomPoly j = jac_minor(f, g, 1, 2);
    const Scalar fg = resultant({f, g, j});
    EXPECT_FALSE(fg.is_zero());
    EXPECT_EQ(resultant({g, f, j}), fg);
  }
}

TEST(DiscCurveCylinder, FastPathMatchesGeneral) {
  std::mt19937_64 rng(12);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 2}, {2, 3}, {1, 3}, {1, 4}}) {
    const HomPoly f = random_poly(Z, 3, d1, rng), g = random_poly(Z, 3, d2, rng);
    const Scalar u = zi(uniform_int(rng, 1, 3) * (d1 % 2 ? -1 : 1));
    const DiscOutcome fast = disc_curve_cylinder(u, f, g);
    EXPECT_EQ(fast.trace.front().stage, "cylinder");
    const HomPoly g1 = HomPoly::monomial(u, 4, Monomial::variable(3, static_cast<unsigned>(d1))) + embed(f, 4);
    EXPECT_EQ(fast.value, disc(g1, embed(g, 4)));
  }
}

TEST(DiscCurveCylinder, ExponentsAndRouting) {
  const HomPoly f = P("x1^2 + x2^2 + x3^2"), g = P("x1*x2 - x3^2 + x2*x3");
  const DiscOutcome fast = disc_curve_cylinder(zi(1), f, g);
  EXPECT_NE(fast.trace.front().detail.find("2^4 * u^6"), std::string::npos) << fast.trace.front().detail;
  const DiscOutcome routed = disc_curve_cylinder(zi(0), f, g);
  EXPECT_EQ(routed.trace.front().detail, "fast path inapplicable; general formula");
  EXPECT_EQ(routed.value, disc(embed(f, 4), embed(g, 4)));
}

TEST(DiscCurve, SpecialisationCommutes) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 4; ++trial) {
    const auto [g1, g2] = random_pair(2, 2, rng);
    const Integer over_z = disc(g1, g2).integer();
    for (std::uint64_t p : {3ULL, 5ULL, 1000003ULL}) {
      const RingSpec fp = RingSpec::mod_p(p);
      EXPECT_EQ(disc(change_ring(g1, fp), change_ring(g2, fp)), Scalar::from_integer(fp, over_z));
    }
  }
  const HomPoly h1 = P("a*x1^2 + x2*x3 - x4^2 + (a - 1)*x1*x4", ZA), h2 = P("x1*x2 + a*x3^2 + x4^2 - x2*x4", ZA);
  const Scalar family = disc(h1, h2);
  for (long a0 = -2; a0 <= 2; ++a0)
    EXPECT_EQ(eval_param(family, Integer(a0)), disc(eval_param(h1, Integer(a0)), eval_param(h2, Integer(a0))));
}

TEST(DiscCurve, RationalInputs) {
  std::mt19937_64 rng(14);
  const auto [g1, g2] = random_pair(2, 2, rng);
  const RingSpec q = RingSpec::rationals();
  const Scalar half = Scalar::from_rational(q, Rational(1, 2));
  const Scalar expected = Scalar::from_rational(q, Rational(disc(g1, g2).integer())) * half.pow(12);
  EXPECT_EQ(disc_curve(half * change_ring(g1, q), change_ring(g2, q)).value, expected);
}

TEST(DiscCurve, Errors) {
  try {
    disc_curve(P("x1", Z, 4), P("x2", Z, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeConstraint);
  }
  try {
    disc_curve(P("x1^2", Z, 3), P("x2^2", Z, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST(DiscCurve, ReproducibleFallbackTrace) {
  // The Clebsch pair at a = 1 needs unimodular retries.
  const HomPoly f2 = eval_param(testing::clebsch_quadric(), Integer(1));
  FallbackOptions options;
  options.seed = 99;
  const DiscOutcome a = disc_curve(testing::clebsch(), f2, options), b = disc_curve(testing::clebsch(), f2, options);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, disc(testing::clebsch(), f2));
}

}  // namespace
}  // namespace curvedisc
