#include "curvedisc/smooth.hpp"

#include <json.hpp>

#include "curvedisc/modarith.hpp"
#include "curvedisc/parallel.hpp"

namespace curvedisc {

namespace {

// Term list of a Z/p form for repeated evaluation.
struct CompiledForm {
  std::vector<std::pair<u64, std::array<unsigned, 4>>> terms;
  unsigned degree = 0;
};

CompiledForm compile(const HomPoly& f) {
  CompiledForm c;
  c.degree = static_cast<unsigned>(std::max(f.degree(), 0));
  for (const auto& [m, coeff] : f.terms()) c.terms.push_back({coeff.residue(), {m[0], m[1], m[2], m[3]}});
  return c;
}

bool vanishes(const CompiledForm& f, const std::array<std::vector<u64>, 4>& powers, u64 p) {
  u64 sum = 0;
  for (const auto& [coeff, e] : f.terms) {
    u64 term = coeff;
    for (int i = 0; i < 4; ++i) term = mulmod(term, powers[static_cast<std::size_t>(i)][e[static_cast<std::size_t>(i)]], p);
    sum = addmod(sum, term, p);
  }
  return sum == 0;
}

}  // namespace

SingularReport find_singular_points(const HomPoly& g1, const HomPoly& g2) {
  if (!g1.ring().is_mod_p() || !(g1.ring() == g2.ring()))
    throw Error(ErrorCode::WrongRing, "singular point scan needs both forms over the same Z/p");
  if (g1.nvars() != 4 || g2.nvars() != 4) throw Error(ErrorCode::ArityMismatch, "singular point scan needs forms in 4 variables");
  const u64 p = g1.ring().modulus();
  if (p > kMaxScanPrime) throw Error(ErrorCode::FieldTooLarge, "p = " + std::to_string(p) + " exceeds the scan limit 65536");

  std::vector<CompiledForm> generators{compile(g1), compile(g2)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) generators.push_back(compile(jac_minor(g1, g2, i, j)));
  unsigned max_degree = 0;
  for (const auto& g : generators) max_degree = std::max(max_degree, g.degree);

  // Chart k: x_1..x_k = 0, x_{k+1} = 1. Slot s fixes the first free coordinate.
  struct Slice {
    int chart;
    u64 first;
  };
  std::vector<Slice> slices;
  for (int chart = 0; chart < 4; ++chart) {
    if (chart == 3) slices.push_back({3, 0});
    else
      for (u64 v = 0; v < p; ++v) slices.push_back({chart, v});
  }
  std::vector<std::vector<ProjectivePoint>> found(slices.size());
  parallel_for(slices.size(), [&](std::size_t s) {
    const int chart = slices[s].chart;
    const int free = 3 - chart;
    ProjectivePoint x{0, 0, 0, 0};
    x[static_cast<std::size_t>(chart)] = 1;
    const u64 rest = free >= 2 ? (free == 3 ? p * p : p) : 1;
    for (u64 idx = 0; idx < rest; ++idx) {
      if (free >= 1) x[static_cast<std::size_t>(chart + 1)] = slices[s].first;
      if (free >= 2) x[static_cast<std::size_t>(chart + 2)] = free == 3 ? idx / p : idx;
      if (free == 3) x[3] = idx % p;
      std::array<std::vector<u64>, 4> powers;
      for (std::size_t i = 0; i < 4; ++i) {
        powers[i].resize(max_degree + 1);
        powers[i][0] = 1 % p;
        for (unsigned e = 1; e <= max_degree; ++e) powers[i][e] = mulmod(powers[i][e - 1], x[i], p);
      }
      bool singular = true;
      for (const auto& g : generators)
        if (!vanishes(g, powers, p)) {
          singular = false;
          break;
        }
      if (singular) found[s].push_back(x);
    }
  });
  SingularReport report;
  report.prime = p;
  report.exhaustive = true;
  // Charts in order 3, 2, 1, 0 give lexicographically increasing points.
  for (int chart = 3; chart >= 0; --chart)
    for (std::size_t s = 0; s < slices.size(); ++s)
      if (slices[s].chart == chart) report.points.insert(report.points.end(), found[s].begin(), found[s].end());
  return report;
}

std::string report_json(const SingularReport& report) {
  nlohmann::json j;
  j["prime"] = report.prime;
  j["points"] = nlohmann::json::array();
  for (const auto& pt : report.points) j["points"].push_back(pt);
  j["exhaustive"] = report.exhaustive;
  return j.dump();
}

BadPrimes singular_primes(const HomPoly& g1, const HomPoly& g2, std::uint64_t bound, const FallbackOptions& options) {
  if (!g1.ring().is_integers()) throw Error(ErrorCode::WrongRing, "singular_primes needs a pair over z");
  BadPrimes out;
  out.discriminant = disc_curve(g1, g2, options).value;
  const Integer& d = out.discriminant.integer();
  if (d == 0) {
    out.identically_singular = true;
    return out;
  }
  for (std::uint64_t p = 2; p <= bound; ++p)
    if (is_prime_u64(p) && mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) out.primes.push_back(p);
  return out;
}

SmoothVerdict is_smooth(const HomPoly& g1, const HomPoly& g2, const FallbackOptions& options) {
  if (g1.ring().is_param()) throw Error(ErrorCode::WrongRing, "smoothness is decided over a field");
  SmoothVerdict out;
  out.discriminant = disc_curve(g1, g2, options);
  out.smooth = !out.discriminant.value.is_zero();
  return out;
}

std::pair<HomPoly, HomPoly> constructed_singular_pair(const RingSpec& field, int d1, int d2, std::mt19937_64& rng) {
  if (!field.is_mod_p()) throw Error(ErrorCode::WrongRing, "constructed singular pairs live over Z/p");
  const long p = static_cast<long>(std::min<std::uint64_t>(field.modulus(), 1u << 30));
  auto rand_scalar = [&] { return Scalar::from_integer(field, Integer(uniform_int(rng, 0, p - 1))); };
  auto rand_unit = [&] { return Scalar::from_integer(field, Integer(uniform_int(rng, 1, p - 1))); };
  std::array<Scalar, 4> v;
  do {
    for (auto& c : v) c = rand_scalar();
  } while (v[1].is_zero() && v[2].is_zero() && v[3].is_zero());
  HomPoly f[2] = {random_poly(field, 4, d1, rng, 1000), random_poly(field, 4, d2, rng, 1000)};
  const int degrees[2] = {d1, d2};
  for (int i = 0; i < 2; ++i) {
    // f(e1) = 0 and grad f(e1) = lambda * (0, v2, v3, v4): both gradients are parallel.
    const Scalar lambda = rand_unit();
    const unsigned d = static_cast<unsigned>(degrees[i]);
    HomPoly adjusted(field, 4, degrees[i]);
    for (const auto& [m, c] : f[i].terms())
      if (m[0] < d - 1) adjusted.add_term(m, c);
    for (int j = 1; j < 4; ++j)
      adjusted.add_term(Monomial::variable(0, d - 1) * Monomial::variable(j), lambda * v[static_cast<std::size_t>(j)]);
    f[i] = adjusted;
  }
  while (true) {
    std::vector<Scalar> entries;
    for (int k = 0; k < 16; ++k) entries.push_back(rand_scalar());
    const LinearChange phi(entries, 4);
    if (phi.det().is_zero()) continue;
    return {compose_linear(f[0], phi), compose_linear(f[1], phi)};
  }
}

}  // namespace curvedisc
