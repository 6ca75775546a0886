#include "curvedisc/macaulay.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace curvedisc {

namespace {

std::string monomial_text(Monomial m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

void validate(std::span<const HomPoly> polys) {
  if (polys.empty() || polys.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw Error(ErrorCode::ArityMismatch, "resultant needs between 1 and 4 forms");
  const int n = static_cast<int>(polys.size());
  for (const auto& f : polys) {
    if (!(f.ring() == polys.front().ring()))
      throw Error(ErrorCode::RingMismatch, "resultant inputs live in different rings");
    if (f.nvars() != n)
      throw Error(ErrorCode::ArityMismatch, "resultant of " + std::to_string(n) + " forms needs " + std::to_string(n) +
                                                " variables, got " + std::to_string(f.nvars()));
  }
}

int degree_of(const HomPoly& f) { return std::max(f.degree(), 0); }

// prod_{j != i} d_j
unsigned long cofactor_degree(std::span<const HomPoly> polys, std::size_t i) {
  unsigned long e = 1;
  for (std::size_t j = 0; j < polys.size(); ++j)
    if (j != i) e *= static_cast<unsigned long>(degree_of(polys[j]));
  return e;
}

// Values forced by constant or zero inputs; nullopt when the Macaulay matrix is needed.
std::optional<Scalar> forced_value(std::span<const HomPoly> polys) {
  const RingSpec& ring = polys.front().ring();
  bool has_constant = false;
  for (const auto& f : polys) has_constant = has_constant || degree_of(f) == 0;
  if (has_constant) {
    Scalar value = Scalar::one(ring);
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (degree_of(polys[i]) == 0) value *= polys[i].coeff(Monomial()).pow(cofactor_degree(polys, i));
    return value;
  }
  for (const auto& f : polys)
    if (f.is_zero()) return Scalar::zero(ring);
  return std::nullopt;
}

std::vector<HomPoly> transform_all(std::span<const HomPoly> polys, const LinearChange& phi) {
  std::vector<HomPoly> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(compose_linear(f, phi));
  return out;
}

// Integer-coefficient resultant with the full ladder, used by the Z/p and Z[t] rungs.
Scalar integer_resultant(std::span<const HomPoly> polys, const FallbackOptions& options, Trace* trace) {
  std::vector<HomPoly> lifted;
  for (const auto& f : polys) lifted.push_back(change_ring(f, RingSpec::integers()));
  return resultant(lifted, options, trace);
}

// Res(f_i) as R(0) where R(t) = Res(f_i + t*x_i^{d_i}); R is interpolated from
// nonzero integer points at which the extraneous minor does not vanish.
std::optional<Scalar> perturbed_resultant(std::span<const HomPoly> polys, Trace* trace) {
  const RingSpec z = RingSpec::integers();
  const std::size_t n = polys.size();
  long degree = 0;
  for (std::size_t i = 0; i < n; ++i) degree += static_cast<long>(cofactor_degree(polys, i));
  const auto needed = static_cast<std::size_t>(degree + 1);
  std::vector<Integer> points, values;
  std::size_t skipped = 0;
  for (std::size_t k = 1; points.size() < needed; ++k) {
    if (skipped > 4 * needed + 16) return std::nullopt;
    const Integer t0 = sample_point(k);
    std::vector<HomPoly> shifted;
    for (std::size_t i = 0; i < n; ++i) {
      const int d = degree_of(polys[i]);
      shifted.push_back(polys[i] + HomPoly::monomial(Scalar::from_integer(z, t0), static_cast<int>(n),
                                                     Monomial::variable(static_cast<int>(i), static_cast<unsigned>(d))));
    }
    auto v = macaulay_ratio(shifted);
    if (!v) {
      ++skipped;
      continue;
    }
    points.push_back(t0);
    values.push_back(v->integer());
  }
  record(trace, "perturbation",
         "f_i + t*x_i^d_i at " + std::to_string(points.size()) + " points, interpolated at t = 0");
  return Scalar::from_integer(z, interpolate_at_zero(points, values));
}

Scalar param_resultant_pointwise(std::span<const HomPoly> polys, const FallbackOptions& options, Trace* trace) {
  const RingSpec& ring = polys.front().ring();
  long degree = 0;
  for (std::size_t i = 0; i < polys.size(); ++i)
    degree += static_cast<long>(cofactor_degree(polys, i)) * polys[i].param_degree();
  const auto count = static_cast<std::size_t>(degree + 1);
  std::vector<Integer> points(count), values(count);
  for (std::size_t k = 0; k < count; ++k) {
    points[k] = sample_point(k);
    std::vector<HomPoly> at;
    for (const auto& f : polys) at.push_back(eval_param(f, points[k]));
    values[k] = resultant(at, options, nullptr).integer();
  }
  record(trace, "interpolation",
         "parameter " + ring.param() + " evaluated at " + std::to_string(count) + " points");
  return Scalar::from_param(ring, interpolate(points, values));
}

}  // namespace

MacaulayData macaulay_data(std::span<const HomPoly> polys) {
  validate(polys);
  const int n = static_cast<int>(polys.size());
  MacaulayData data;
  for (const auto& f : polys) {
    if (f.degree() < 1) throw Error(ErrorCode::DegreeConstraint, "Macaulay matrix needs forms of positive degree");
    data.degrees.push_back(f.degree());
  }
  data.critical_degree = 1;
  for (int d : data.degrees) data.critical_degree += d - 1;
  data.row_monomials = monomials_of_degree(n, data.critical_degree);
  const std::size_t size = data.row_monomials.size();
  std::unordered_map<std::uint64_t, std::size_t> column;
  for (std::size_t c = 0; c < size; ++c) column.emplace(data.row_monomials[c].packed(), c);

  const RingSpec& ring = polys.front().ring();
  data.matrix = Matrix<Scalar>(size, size, Scalar::zero(ring));
  for (std::size_t r = 0; r < size; ++r) {
    const Monomial m = data.row_monomials[r];
    int owner = -1;
    int divisible = 0;
    for (int i = 0; i < n; ++i) {
      if (m[i] >= static_cast<unsigned>(data.degrees[static_cast<std::size_t>(i)])) {
        if (owner < 0) owner = i;
        ++divisible;
      }
    }
    data.assignment.push_back(owner);
    if (divisible >= 2) data.extraneous_indices.push_back(r);
    const Monomial shift = m.quotient(Monomial::variable(owner, static_cast<unsigned>(data.degrees[static_cast<std::size_t>(owner)])));
    for (const auto& [mono, c] : polys[static_cast<std::size_t>(owner)].terms())
      data.matrix(r, column.at((mono * shift).packed())) = c;
  }
  const std::size_t k = data.extraneous_indices.size();
  data.extraneous = Matrix<Scalar>(k, k, Scalar::zero(ring));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      data.extraneous(a, b) = data.matrix(data.extraneous_indices[a], data.extraneous_indices[b]);
  return data;
}

std::optional<Scalar> macaulay_ratio(std::span<const HomPoly> polys) {
  const MacaulayData data = macaulay_data(polys);
  const RingSpec& ring = polys.front().ring();
  const Scalar denominator = data.extraneous.rows() == 0 ? Scalar::one(ring) : determinant(data.extraneous);
  if (denominator.is_zero()) return std::nullopt;
  return exact_div(determinant(data.matrix), denominator);
}

Scalar resultant(std::span<const HomPoly> polys, const FallbackOptions& options, Trace* trace) {
  validate(polys);
  const RingSpec ring = polys.front().ring();
  const std::size_t n = polys.size();

  if (ring.is_rationals()) {
    // Res is homogeneous of degree prod_{j != i} d_j in the coefficients of f_i.
    std::vector<HomPoly> cleared;
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Integer lambda;
      cleared.push_back(clear_denominators(polys[i], lambda));
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), lambda.get_mpz_t(), cofactor_degree(polys, i));
      scale *= Rational(power);
    }
    record(trace, "rescale", "denominators cleared, dividing by " + scale.get_str());
    const Scalar value = resultant(cleared, options, trace);
    return Scalar::from_rational(ring, Rational(value.integer()) / scale);
  }

  if (auto v = forced_value(polys)) {
    record(trace, "constant", "constant or zero input; value " + v->to_string());
    return *v;
  }
  if (auto v = macaulay_ratio(polys)) {
    record(trace, "macaulay", "det(M)/det(M') at critical degree");
    return *v;
  }
  record(trace, "macaulay", "extraneous minor vanishes");

  std::mt19937_64 rng(options.seed);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    const LinearChange phi = random_unimodular(ring, static_cast<int>(n), rng);
    const auto transformed = transform_all(polys, phi);
    if (auto v = macaulay_ratio(transformed)) {
      record(trace, "unimodular",
             "seed " + std::to_string(options.seed) + " attempt " + std::to_string(attempt) + " phi " + phi.to_string());
      return *v;
    }
  }
  record(trace, "unimodular", "seed " + std::to_string(options.seed) + ": " + std::to_string(options.retries) +
                                  " changes of variables all degenerate");

  switch (ring.kind()) {
    case RingKind::ModP: {
      record(trace, "lift", "symmetric lift from " + ring.to_string() + " to z");
      const Scalar value = integer_resultant(polys, options, trace);
      return Scalar::from_integer(ring, value.integer());
    }
    case RingKind::Integers:
      if (options.allow_perturbation) {
        if (auto v = perturbed_resultant(polys, trace)) return *v;
      }
      break;
    case RingKind::IntParam: return param_resultant_pointwise(polys, options, trace);
    case RingKind::Rationals: break;
  }
  throw Error(ErrorCode::DegenerateSpecialization, "extraneous Macaulay minor vanishes after every fallback");
}

void write_macaulay_csv(const MacaulayData& data, std::ostream& matrix_out, std::ostream& extraneous_out) {
  const int n = static_cast<int>(data.degrees.size());
  matrix_out << "row,column,entry\n";
  for (std::size_t r = 0; r < data.matrix.rows(); ++r)
    for (std::size_t c = 0; c < data.matrix.cols(); ++c)
      if (!data.matrix(r, c).is_zero())
        matrix_out << monomial_text(data.row_monomials[r], n) << ',' << monomial_text(data.row_monomials[c], n) << ','
                   << data.matrix(r, c).to_string() << '\n';
  extraneous_out << "row,column,entry\n";
  for (std::size_t a = 0; a < data.extraneous.rows(); ++a)
    for (std::size_t b = 0; b < data.extraneous.cols(); ++b)
      if (!data.extraneous(a, b).is_zero())
        extraneous_out << monomial_text(data.row_monomials[data.extraneous_indices[a]], n) << ','
                       << monomial_text(data.row_monomials[data.extraneous_indices[b]], n) << ','
                       << data.extraneous(a, b).to_string() << '\n';
}

}  // namespace curvedisc
