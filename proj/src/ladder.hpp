#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvedisc/poly.hpp"
#include "curvedisc/trace.hpp"

namespace curvedisc::detail {

/// Computes a value from the inputs, or nullopt when the specialisation is
/// degenerate for this formula.
using Formula = std::function<std::optional<Scalar>(std::span<const HomPoly>, Trace*)>;

struct LadderSpec {
  std::string name;
  // Degree of the value in the coefficients of each input; inputs with 0 are
  // never perturbed.
  std::vector<long> coefficient_degrees;
  // Z[t] inputs go straight to evaluation and interpolation.
  bool pointwise_parameter = false;
};

/// Runs formula on the inputs, then on unimodular changes of variables, then
/// (Z/p) on lifts to Z, (Z) on perturbations g_i + t h_i interpolated at t = 0,
/// (Z[t]) pointwise at integer parameter values. Throws DegenerateSpecialization
/// when every rung fails.
Scalar run_ladder(const std::vector<HomPoly>& inputs, const Formula& formula, const LadderSpec& spec,
                  const FallbackOptions& options, Trace* trace);

/// For Q inputs: clears denominators (f_i -> lambda_i f_i), evaluates over Z and
/// divides by prod lambda_i^{coefficient_degrees[i]}.
Scalar over_integers(const std::vector<HomPoly>& inputs, const std::vector<long>& coefficient_degrees,
                     const std::function<Scalar(const std::vector<HomPoly>&)>& compute, Trace* trace);

}  // namespace curvedisc::detail
