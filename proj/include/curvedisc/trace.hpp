#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "curvedisc/poly.hpp"

namespace curvedisc {

/// One step of a derivation: which formula or fallback ran, with enough
/// detail (seeds, transforms, divisions) to rerun it.
struct TraceStep {
  std::string stage;
  std::string detail;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

inline void record(Trace* trace, std::string stage, std::string detail) {
  if (trace) trace->push_back({std::move(stage), std::move(detail)});
}

/// Knobs for the degeneracy fallback ladder.
struct FallbackOptions {
  std::uint64_t seed = 0;
  int retries = 8;
  bool allow_perturbation = true;
};

/// Product of random elementary matrices (entries of the multipliers in
/// [-2,2]); determinant exactly 1.
LinearChange random_unimodular(const RingSpec& ring, int n, std::mt19937_64& rng);

}  // namespace curvedisc
