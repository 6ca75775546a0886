#include <gtest/gtest.h>

#include <random>

#include "curvedisc/disctower.hpp"
#include "curvedisc/macaulay.hpp"
#include "fixtures.hpp"

namespace curvedisc {
namespace {

using testing::P;
using testing::Z;
using testing::zi;

TEST(HypExponent, Values) {
  EXPECT_EQ(hyp_normalization_exponent(4, 3), 5);
  EXPECT_EQ(hyp_normalization_exponent(4, 2), 0);
  EXPECT_EQ(hyp_normalization_exponent(2, 2), 0);
  EXPECT_EQ(hyp_normalization_exponent(2, 3), 1);
  EXPECT_EQ(hyp_normalization_exponent(3, 3), 3);
}

TEST(DiscHyp, Clebsch) {
  const DiscOutcome out = disc_hyp(testing::clebsch());
  EXPECT_EQ(out.value, zi(-5));
  EXPECT_FALSE(out.trace.empty());
  const RingSpec f5 = RingSpec::mod_p(5);
  EXPECT_TRUE(disc_hyp(testing::clebsch(f5)).value.is_zero());
}

TEST(DiscHyp, DiagonalQuadric) {
  // 2^0 * D = Res(2x1, 2x2, 2x3, 2x4) = 16.
  EXPECT_EQ(disc_hyp(P("x1^2 + x2^2 + x3^2 + x4^2")).value, zi(16));
}

TEST(DiscHyp, BinaryQuadratic) {
  // a(2,2) = 0, so D = Res(2a x1 + b x2, b x1 + 2c x2) = 4ac - b^2.
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const long a = uniform_int(rng, -6, 6), b = uniform_int(rng, -6, 6), c = uniform_int(rng, -6, 6);
    const HomPoly f = zi(a) * P("x1^2") + zi(b) * P("x1*x2") + zi(c) * P("x2^2");
    EXPECT_EQ(disc_hyp(f).value, zi(4 * a * c - b * b)) << a << " " << b << " " << c;
  }
}

TEST(DiscHyp, ModPNormalisationVanishes) {
  // p = 3 divides d = 3: computed over Z and reduced.
  const RingSpec f3 = RingSpec::mod_p(3);
  const HomPoly f = P("x1^3 + 2*x2^3 + x1*x2*x3 + x3^3 - x4^3 + x1*x4^2");
  const DiscOutcome out = disc_hyp(change_ring(f, f3));
  EXPECT_EQ(out.value, Scalar::from_integer(f3, disc_hyp(f).value.integer()));
  EXPECT_EQ(out.trace.front().stage, "lift");
}

TEST(DiscHyp, ParameterAndRationals) {
  const RingSpec zt = RingSpec::int_param("t");
  const HomPoly f = P("t*x1^2 + x1*x2 + x2^2 + x3^2", zt);
  const Scalar d = disc_hyp(f).value;
  for (long t0 = -2; t0 <= 2; ++t0) EXPECT_EQ(eval_param(d, Integer(t0)), disc_hyp(eval_param(f, Integer(t0))).value);
  const RingSpec q = RingSpec::rationals();
  // Degree n (d-1)^{n-1} = 3 in the coefficients.
  const HomPoly g = P("x1^2 + 3*x2^2 - x3^2 + x1*x3");
  EXPECT_EQ(disc_hyp(change_ring(g, q) * HomPoly::constant(Scalar::from_rational(q, Rational(1, 2)), 3)).value,
            Scalar::from_rational(q, Rational(disc_hyp(g).value.integer(), 8)));
}

TEST(DiscHyp, Errors) {
  try {
    disc_hyp(P("x1 + x2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeConstraint);
  }
}

TEST(DiscPtsP2, LinearCase) {
  EXPECT_EQ(disc_pts_p2(P("x2", Z, 3), P("x3", Z, 3)).value, zi(1));
}

TEST(DiscPtsP2, DefiningIdentityOnRandomConics) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const HomPoly f = random_poly(Z, 3, 2, rng), g = random_poly(Z, 3, 2, rng);
    const Scalar D = disc_pts_p2(f, g).value;
    const Scalar top = resultant({f, g, jac_minor(f, g, 1, 2)});
    const Scalar bottom = resultant({set_var_zero(f, 0), set_var_zero(g, 0)});
    EXPECT_EQ(top, D * bottom);
  }
}

TEST(DiscPtsP2, Symmetric) {
  std::mt19937_64 rng(3);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {3, 2}, {2, 1}}) {
    const HomPoly f = random_poly(Z, 3, d1, rng), g = random_poly(Z, 3, d2, rng);
    EXPECT_EQ(disc_pts_p2(f, g).value, disc_pts_p2(g, f).value);
  }
}

TEST(DiscPtsP2, ConstructedTangencyVanishesModP) {
  // f and g both pass through (0:0:1) with parallel tangent lines there.
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
    const RingSpec fp = RingSpec::mod_p(p);
    for (int trial = 0; trial < 3; ++trial) {
      const long a = uniform_int(rng, 1, 4), b = uniform_int(rng, 1, 4);
      const HomPoly f = zi(a, fp) * P("x1*x3 + 2*x2*x3", fp) + P("x1^2 - x2^2 + 3*x1*x2", fp, 3);
      const HomPoly g = zi(b, fp) * P("x1*x3 + 2*x2*x3", fp) + P("2*x1^2 + x2^2 - x1*x2", fp, 3);
      const std::vector<Scalar> point{zi(0, fp), zi(0, fp), zi(1, fp)};
      ASSERT_TRUE(f.evaluate(point).is_zero() && g.evaluate(point).is_zero());
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) ASSERT_TRUE(jac_minor(f, g, i, j).evaluate(point).is_zero());
      EXPECT_TRUE(disc_pts_p2(f, g).value.is_zero());
    }
  }
}

TEST(DiscPtsP3, LinearCase) {
  // Forced by the reduction to the plane: (-1)^{1*1} disc_pts_p2(x2, x3) = -1.
  EXPECT_EQ(disc_pts_p2(P("x2", Z, 3), P("x3", Z, 3)).value, zi(1));
  EXPECT_EQ(disc_pts_p3(P("x2", Z, 4), P("x3", Z, 4), P("x4", Z, 4)).value, zi(-1));
}

TEST(DiscPtsP3, ReducesToPlaneWithX4) {
  std::mt19937_64 rng(5);
  for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {1, 3}, {3, 1}, {3, 3}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const HomPoly f1 = random_poly(Z, 4, d1, rng), f2 = random_poly(Z, 4, d2, rng);
      const Scalar p3 = disc_pts_p3(f1, f2, P("x4", Z, 4)).value;
      const Scalar p2 = disc_pts_p2(set_var_zero(f1, 3), set_var_zero(f2, 3)).value;
      EXPECT_EQ(p3, (d1 * d2) % 2 ? -p2 : p2);
    }
  }
}

TEST(DiscPtsP3, CoefficientDegrees) {
  // With f3 linear: degree d2 (2e1 + e2) in f1 and d1 (e1 + 2e2) in f2.
  std::mt19937_64 rng(6);
  const HomPoly f1 = random_poly(Z, 4, 3, rng), f2 = random_poly(Z, 4, 2, rng), l = random_poly(Z, 4, 1, rng);
  const Scalar base = disc_pts_p3(f1, f2, l).value;
  EXPECT_EQ(disc_pts_p3(zi(2) * f1, f2, l).value, zi(2).pow(2 * (2 * 2 + 1)) * base);
  EXPECT_EQ(disc_pts_p3(f1, zi(2) * f2, l).value, zi(2).pow(3 * (2 + 2 * 1)) * base);
}

TEST(DiscTower, SpecialisationCommutes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const HomPoly f = random_poly(Z, 3, 2, rng), g = random_poly(Z, 3, 3, rng);
    const Integer over_z = disc_pts_p2(f, g).value.integer();
    for (std::uint64_t p : {3ULL, 7ULL, 1000003ULL}) {
      const RingSpec fp = RingSpec::mod_p(p);
      EXPECT_EQ(disc_pts_p2(change_ring(f, fp), change_ring(g, fp)).value, Scalar::from_integer(fp, over_z));
    }
    const HomPoly h = random_poly(Z, 4, 3, rng);
    const Integer hyp = disc_hyp(h).value.integer();
    EXPECT_EQ(disc_hyp(change_ring(h, RingSpec::mod_p(7))).value, Scalar::from_integer(RingSpec::mod_p(7), hyp));
  }
}

TEST(DiscTower, FallbackTraceIsReproducible) {
  // x1 does not occur in f(0,.) = x2^2 and g(0,.) = x2 x3: the bottom resultant vanishes.
  const HomPoly f = P("x2^2 + x1*x3 + x1^2", Z, 3), g = P("x2*x3 + x1*x2 - 2*x1^2", Z, 3);
  FallbackOptions options;
  options.seed = 7;
  const DiscOutcome a = disc_pts_p2(f, g, options), b = disc_pts_p2(f, g, options);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.trace, b.trace);
  FallbackOptions perturb_only;
  perturb_only.retries = 0;
  EXPECT_EQ(disc_pts_p2(f, g, perturb_only).value, a.value);
}

}  // namespace
}  // namespace curvedisc
