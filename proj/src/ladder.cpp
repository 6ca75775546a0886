#include "ladder.hpp"

#include <algorithm>

#include "curvedisc/parallel.hpp"

namespace curvedisc::detail {

namespace {

std::optional<Scalar> attempt(const Formula& formula, std::span<const HomPoly> inputs, Trace* trace) {
  try {
    return formula(inputs, trace);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DegenerateSpecialization:
      case ErrorCode::NotDivisible:
      case ErrorCode::DivisionByZero: return std::nullopt;
      default: throw;
    }
  }
}

void append(Trace* trace, Trace& steps) {
  if (trace) trace->insert(trace->end(), steps.begin(), steps.end());
}

// A direction can stay degenerate along the whole line, so each point also
// gets the unimodular retries.
std::optional<Scalar> perturbed(const std::vector<HomPoly>& inputs, const Formula& formula, const LadderSpec& spec,
                                const FallbackOptions& options, std::mt19937_64& rng, Trace* trace) {
  const RingSpec z = RingSpec::integers();
  long bound = 0;
  std::vector<HomPoly> directions;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const long deg = spec.coefficient_degrees[i];
    bound += deg;
    directions.push_back(deg > 0 ? random_poly(z, inputs[i].nvars(), inputs[i].degree(), rng, 3)
                                 : HomPoly(z, inputs[i].nvars(), inputs[i].degree()));
  }
  const auto needed = static_cast<std::size_t>(bound + 1);
  std::vector<Integer> points, values;
  for (std::size_t k = 1; points.size() < needed; ++k) {
    if (k > 4 * needed + 16) return std::nullopt;
    const Integer t0 = sample_point(k);
    std::vector<HomPoly> shifted;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      shifted.push_back(inputs[i] + Scalar::from_integer(z, t0) * directions[i]);
    std::optional<Scalar> v = attempt(formula, shifted, nullptr);
    for (int r = 0; !v && r < options.retries; ++r) {
      const LinearChange phi = random_unimodular(z, inputs.front().nvars(), rng);
      std::vector<HomPoly> moved;
      for (const auto& f : shifted) moved.push_back(compose_linear(f, phi));
      v = attempt(formula, moved, nullptr);
    }
    if (v) {
      points.push_back(t0);
      values.push_back(v->integer());
    }
  }
  record(trace, "perturbation",
         spec.name + ": g_i + t*h_i with random h_i, " + std::to_string(points.size()) +
             " integer points interpolated at t = 0");
  return Scalar::from_integer(z, interpolate_at_zero(points, values));
}

Scalar pointwise(const std::vector<HomPoly>& inputs, const Formula& formula, const LadderSpec& spec,
                 const FallbackOptions& options, Trace* trace) {
  const RingSpec& ring = inputs.front().ring();
  long bound = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) bound += spec.coefficient_degrees[i] * inputs[i].param_degree();
  const auto needed = static_cast<std::size_t>(bound + 1);

  auto evaluate = [&](std::size_t k) -> std::optional<Integer> {
    std::vector<HomPoly> at;
    for (const auto& f : inputs) at.push_back(eval_param(f, sample_point(k)));
    try {
      return run_ladder(at, formula, spec, options, nullptr).integer();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateSpecialization) return std::nullopt;
      throw;
    }
  };

  std::vector<std::optional<Integer>> batch(needed);
  parallel_for(needed, [&](std::size_t k) { batch[k] = evaluate(k); });
  std::vector<Integer> points, values;
  for (std::size_t k = 0; k < needed; ++k)
    if (batch[k]) {
      points.push_back(sample_point(k));
      values.push_back(*batch[k]);
    }
  std::size_t skipped = needed - points.size();
  for (std::size_t k = needed; points.size() < needed; ++k) {
    if (skipped > needed + 16)
      throw Error(ErrorCode::DegenerateSpecialization, spec.name + ": too many degenerate parameter values");
    if (auto v = evaluate(k)) {
      points.push_back(sample_point(k));
      values.push_back(*v);
    } else {
      ++skipped;
    }
  }
  record(trace, "interpolation",
         spec.name + ": parameter " + ring.param() + " at " + std::to_string(needed) + " integer points (degree bound " +
             std::to_string(bound) + ", " + std::to_string(skipped) + " degenerate points skipped)");
  return Scalar::from_param(ring, interpolate(points, values));
}

}  // namespace

Scalar run_ladder(const std::vector<HomPoly>& inputs, const Formula& formula, const LadderSpec& spec,
                  const FallbackOptions& options, Trace* trace) {
  const RingSpec ring = inputs.front().ring();
  const int n = inputs.front().nvars();
  if (ring.is_param() && spec.pointwise_parameter) return pointwise(inputs, formula, spec, options, trace);

  {
    Trace steps;
    if (auto v = attempt(formula, inputs, &steps)) {
      append(trace, steps);
      return *v;
    }
  }
  record(trace, spec.name, "degenerate specialisation");

  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < options.retries; ++k) {
    const LinearChange phi = random_unimodular(ring, n, rng);
    std::vector<HomPoly> moved;
    for (const auto& f : inputs) moved.push_back(compose_linear(f, phi));
    Trace steps;
    if (auto v = attempt(formula, moved, &steps)) {
      record(trace, "unimodular",
             spec.name + ": seed " + std::to_string(options.seed) + " attempt " + std::to_string(k) + " phi " +
                 phi.to_string());
      append(trace, steps);
      return *v;
    }
  }
  record(trace, "unimodular",
         spec.name + ": seed " + std::to_string(options.seed) + ", " + std::to_string(options.retries) +
             " changes of variables all degenerate");

  switch (ring.kind()) {
    case RingKind::ModP: {
      record(trace, "lift", spec.name + ": symmetric lift from " + ring.to_string() + " to z");
      std::vector<HomPoly> lifted;
      for (const auto& f : inputs) lifted.push_back(change_ring(f, RingSpec::integers()));
      return Scalar::from_integer(ring, run_ladder(lifted, formula, spec, options, trace).integer());
    }
    case RingKind::Integers:
      if (options.allow_perturbation)
        if (auto v = perturbed(inputs, formula, spec, options, rng, trace)) return *v;
      break;
    case RingKind::IntParam: return pointwise(inputs, formula, spec, options, trace);
    case RingKind::Rationals: break;
  }
  throw Error(ErrorCode::DegenerateSpecialization, spec.name + ": every fallback was degenerate");
}

Scalar over_integers(const std::vector<HomPoly>& inputs, const std::vector<long>& coefficient_degrees,
                     const std::function<Scalar(const std::vector<HomPoly>&)>& compute, Trace* trace) {
  const RingSpec& ring = inputs.front().ring();
  std::vector<HomPoly> cleared;
  Integer scale = 1;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Integer lambda;
    cleared.push_back(clear_denominators(inputs[i], lambda));
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), lambda.get_mpz_t(), static_cast<unsigned long>(coefficient_degrees[i]));
    scale *= power;
  }
  record(trace, "rescale", "denominators cleared; dividing by " + scale.get_str());
  const Scalar value = compute(cleared);
  return Scalar::from_rational(ring, Rational(value.integer(), scale));
}

}  // namespace curvedisc::detail
