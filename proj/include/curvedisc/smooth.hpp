#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "curvedisc/curvedisc.hpp"

namespace curvedisc {

using ProjectivePoint = std::array<std::uint64_t, 4>;

/// F_p-rational points where g1, g2 and all six 2x2 Jacobian minors vanish.
struct SingularReport {
  std::uint64_t prime = 0;
  std::vector<ProjectivePoint> points;  // first nonzero coordinate 1, lexicographic
  bool exhaustive = false;
};

inline constexpr std::uint64_t kMaxScanPrime = 1u << 16;

/// Exhaustive scan of P^3(F_p). FieldTooLarge above kMaxScanPrime; WrongRing
/// unless the pair lives in Z/p.
SingularReport find_singular_points(const HomPoly& g1, const HomPoly& g2);

/// {"prime": p, "points": [[x1,x2,x3,x4], ...], "exhaustive": true}
std::string report_json(const SingularReport& report);

struct BadPrimes {
  Scalar discriminant;
  bool identically_singular = false;  // Disc = 0
  std::vector<std::uint64_t> primes;   // primes <= bound dividing Disc
};

/// Primes up to bound at which the curve over Z acquires a singularity.
BadPrimes singular_primes(const HomPoly& g1, const HomPoly& g2, std::uint64_t bound,
                          const FallbackOptions& options = {});

struct SmoothVerdict {
  bool smooth = false;
  DiscOutcome discriminant;
};

/// Disc(g1, g2) != 0 over Z/p, Q or Z (read as characteristic 0).
SmoothVerdict is_smooth(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options = {});

/// A random pair over Z/p that is singular at an F_p-rational point: built
/// singular at (1:0:0:0), then moved by a random invertible change of variables.
std::pair<HomPoly, HomPoly> constructed_singular_pair(const RingSpec& field, int d1, int d2, std::mt19937_64& rng);

}  // namespace curvedisc
