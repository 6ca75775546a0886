#pragma once

#include <random>
#include <string>
#include <vector>

#include "curvedisc/poly.hpp"

namespace curvedisc::testing {

inline const RingSpec Z = RingSpec::integers();
inline const RingSpec ZA = RingSpec::int_param("a");

inline Scalar zi(long v, const RingSpec& ring = Z) { return Scalar::from_integer(ring, Integer(v)); }

inline HomPoly P(const std::string& text, const RingSpec& ring = Z, int nvars = 0) { return parse(text, ring, nvars); }

/// (sum x_i^3 - (sum x_i)^3) / 3, the Clebsch cubic.
inline HomPoly clebsch(const RingSpec& ring = Z) {
  HomPoly cubes(ring, 4, 3), sum(ring, 4, 1);
  for (int i = 0; i < 4; ++i) {
    HomPoly x = HomPoly::variable(ring, 4, i);
    cubes += x.pow(3);
    sum += x;
  }
  const HomPoly numerator = cubes - sum.pow(3);
  HomPoly f(ring, 4, 3);
  for (const auto& [m, c] : numerator.terms()) f.add_term(m, exact_div(c, Scalar::from_integer(ring, 3)));
  return f;
}

/// a*x1^2 + x1*x2 + x2^2 + x3^2 + x4^2 over Z[a].
inline HomPoly clebsch_quadric() { return parse("a*x1^2 + x1*x2 + x2^2 + x3^2 + x4^2", ZA, 4); }

inline std::vector<HomPoly> partials(const HomPoly& f) {
  std::vector<HomPoly> out;
  for (int j = 0; j < f.nvars(); ++j) out.push_back(partial(f, j));
  return out;
}

inline HomPoly reduce(const HomPoly& f, std::uint64_t p) { return change_ring(f, RingSpec::mod_p(p)); }

}  // namespace curvedisc::testing
