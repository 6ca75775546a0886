#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "curvedisc/smooth.hpp"
#include "fixtures.hpp"

namespace curvedisc {
namespace {

using testing::P;
using testing::Z;
using testing::zi;

// Independent oracle: evaluate every generator at one point with Scalar arithmetic.
bool singular_at(const HomPoly& g1, const HomPoly& g2, const ProjectivePoint& pt) {
  const RingSpec& ring = g1.ring();
  std::vector<Scalar> x;
  for (auto c : pt) x.push_back(Scalar::from_integer(ring, Integer(static_cast<unsigned long>(c))));
  if (!g1.evaluate(x).is_zero() || !g2.evaluate(x).is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!jac_minor(g1, g2, i, j).evaluate(x).is_zero()) return false;
  return true;
}

TEST(SingularPoints, ClebschInCharacteristicFive) {
  const RingSpec f5 = RingSpec::mod_p(5);
  const HomPoly f1 = testing::clebsch(f5);
  const HomPoly f2 = P("x1^2 + x1*x2 + x2^2 + x3^2 + x4^2", f5);
  const SingularReport report = find_singular_points(f1, f2);
  EXPECT_EQ(report.prime, 5u);
  EXPECT_TRUE(report.exhaustive);
  const ProjectivePoint p{1, 1, 1, 1};
  EXPECT_TRUE(singular_at(f1, f2, p));
  EXPECT_NE(std::find(report.points.begin(), report.points.end(), p), report.points.end());
  for (const auto& q : report.points) EXPECT_TRUE(singular_at(f1, f2, q));
  EXPECT_TRUE(is_smooth(f1, f2).discriminant.value.is_zero());
}

TEST(SingularPoints, ReducibleQuadricModSeven) {
  // x1 = x2 = 0 is the double locus of x1 x2; it meets x3 (x3 + x4) = 0 twice.
  // Off that line, x3 = 0 and x4 = -(x1 + x2) make the gradients parallel.
  const RingSpec f7 = RingSpec::mod_p(7);
  const SingularReport report = find_singular_points(P("x1*x2", f7, 4), P("x1*x3 + x2*x3 + x3^2 + x3*x4", f7, 4));
  const std::vector<ProjectivePoint> expected{{0, 0, 0, 1}, {0, 0, 1, 6}, {0, 1, 0, 6}, {1, 0, 0, 6}};
  EXPECT_EQ(report.points, expected);
}

TEST(SingularPoints, RandomPairsWithNonzeroDiscriminantAreClean) {
  const RingSpec f7 = RingSpec::mod_p(7);
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const HomPoly g1 = random_poly(f7, 4, 2, rng, 6), g2 = random_poly(f7, 4, 2, rng, 6);
    const SmoothVerdict v = is_smooth(g1, g2);
    const SingularReport report = find_singular_points(g1, g2);
    if (v.smooth) {
      EXPECT_TRUE(report.points.empty());
      ++checked;
    }
    if (!report.points.empty()) EXPECT_FALSE(v.smooth);
  }
  EXPECT_GT(checked, 0);
}

TEST(SingularPoints, ConstructedPairsAreSingular) {
  std::mt19937_64 rng(22);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    const RingSpec fp = RingSpec::mod_p(p);
    for (int trial = 0; trial < 3; ++trial) {
      const auto [g1, g2] = constructed_singular_pair(fp, 2, 2, rng);
      const SingularReport report = find_singular_points(g1, g2);
      EXPECT_FALSE(report.points.empty()) << p;
      for (const auto& q : report.points) EXPECT_TRUE(singular_at(g1, g2, q));
      EXPECT_FALSE(is_smooth(g1, g2).smooth) << p;
    }
  }
  const auto [c1, c2] = constructed_singular_pair(RingSpec::mod_p(5), 3, 1, rng);
  EXPECT_EQ(c1.degree(), 3);
  EXPECT_EQ(c2.degree(), 1);
  EXPECT_FALSE(find_singular_points(c1, c2).points.empty());
  for (int trial = 0; trial < 20; ++trial) {
    const auto [l1, l2] = constructed_singular_pair(RingSpec::mod_p(3), 2, 1, rng);
    EXPECT_FALSE(l2.is_zero());
    EXPECT_FALSE(find_singular_points(l1, l2).points.empty());
  }
}

TEST(SingularPoints, ReportOrderAndJson) {
  const RingSpec f3 = RingSpec::mod_p(3);
  const SingularReport report = find_singular_points(P("x1*x2", f3, 4), P("x3*x4", f3, 4));
  EXPECT_TRUE(std::is_sorted(report.points.begin(), report.points.end()));
  for (const auto& q : report.points) {
    const auto first = std::find_if(q.begin(), q.end(), [](auto c) { return c != 0; });
    ASSERT_NE(first, q.end());
    EXPECT_EQ(*first, 1u);
  }
  const nlohmann::json j = nlohmann::json::parse(report_json(report));
  EXPECT_EQ(j["prime"], 3);
  EXPECT_EQ(j["exhaustive"], true);
  EXPECT_EQ(j["points"].get<std::vector<ProjectivePoint>>(), report.points);
}

TEST(SingularPoints, Errors) {
  try {
    find_singular_points(P("x1*x2", Z, 4), P("x3^2", Z, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongRing);
  }
  const RingSpec big = RingSpec::mod_p(65537);
  try {
    find_singular_points(P("x1*x2", big, 4), P("x3^2", big, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
  try {
    is_smooth(P("x1", RingSpec::mod_p(7), 4), P("x2", RingSpec::mod_p(7), 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeConstraint);
  }
}

TEST(SingularPrimes, ClebschAtOne) {
  // Printed product at a = 1: 2 * p1(1) * p2(1)^2.
  const Integer p1 = Integer(-4448) - 33924 + 238468 + 416575 + 1303260 + 1163408 + 442944 + 110592;
  const Integer p2 = Integer(3176) + 11134 + 14069 + 10656 + 8208 + 3456;
  const Integer value = 2 * p1 * p2 * p2;
  std::vector<std::uint64_t> expected;
  for (std::uint64_t p = 2; p <= 100; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime && value % Integer(static_cast<unsigned long>(p)) == 0) expected.push_back(p);
  }
  const HomPoly f2 = eval_param(testing::clebsch_quadric(), Integer(1));
  const BadPrimes bad = singular_primes(testing::clebsch(), f2, 100);
  EXPECT_EQ(bad.discriminant, Scalar::from_integer(Z, value));
  EXPECT_FALSE(bad.identically_singular);
  EXPECT_EQ(bad.primes, expected);
  EXPECT_NE(std::find(bad.primes.begin(), bad.primes.end(), 5u), bad.primes.end());
}

TEST(SingularPrimes, IdenticallySingular) {
  const BadPrimes bad = singular_primes(P("x1*x2", Z, 4), P("x3^2 + x4^2 + x1*x3", Z, 4), 50);
  EXPECT_TRUE(bad.identically_singular);
  EXPECT_TRUE(bad.primes.empty());
}

TEST(SingularPrimes, UnitDiscriminantHasNoBadPrimes) {
  // Plane section x1 = 0 of a conic: Disc = disc_hyp(x2 x3 + x4^2), and 2 D = Res(x3, x2, 2 x4) = -2.
  const BadPrimes bad = singular_primes(P("x1", Z, 4), P("x2*x3 + x4^2", Z, 4), 100);
  EXPECT_EQ(bad.discriminant, zi(-1));
  EXPECT_FALSE(bad.identically_singular);
  EXPECT_TRUE(bad.primes.empty());
}

TEST(IsSmooth, ClebschFamilyVanishesModFive) {
  const RingSpec f5 = RingSpec::mod_p(5);
  for (long b = 0; b <= 2; ++b) {
    const HomPoly f2 = change_ring(eval_param(testing::clebsch_quadric(), Integer(5 * b - 4)), f5);
    EXPECT_FALSE(is_smooth(testing::clebsch(f5), f2).smooth) << b;
  }
}

TEST(IsSmooth, SmoothQuadricPairModSeven) {
  const RingSpec f7 = RingSpec::mod_p(7);
  const HomPoly g1 = P("x1^2 + x2^2 + x3^2 + x4^2", f7), g2 = P("x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2", f7);
  const SmoothVerdict v = is_smooth(g1, g2);
  EXPECT_TRUE(v.smooth);
  EXPECT_TRUE(find_singular_points(g1, g2).points.empty());
}

}  // namespace
}  // namespace curvedisc
