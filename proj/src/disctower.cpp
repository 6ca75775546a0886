#include "curvedisc/disctower.hpp"

#include "curvedisc/macaulay.hpp"
#include "ladder.hpp"

namespace curvedisc {

namespace {

void require_same_ring(std::initializer_list<const HomPoly*> polys) {
  for (const HomPoly* f : polys)
    if (!(f->ring() == (*polys.begin())->ring())) throw Error(ErrorCode::RingMismatch, "inputs live in different rings");
}

void require_nvars(const HomPoly& f, int n, const char* what) {
  if (f.nvars() != n)
    throw Error(ErrorCode::ArityMismatch,
                std::string(what) + " needs forms in " + std::to_string(n) + " variables, got " + std::to_string(f.nvars()));
}

void require_positive_degree(const HomPoly& f, const char* what) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeConstraint, std::string(what) + " needs forms of positive degree");
}

long ipow(long base, long e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

long hyp_normalization_exponent(int n, int d) {
  return (ipow(d - 1, n) - (n % 2 ? -1 : 1)) / d;
}

DiscOutcome disc_hyp(const HomPoly& f, const FallbackOptions& options) {
  const int n = f.nvars();
  const int d = f.degree();
  if (n < 2) throw Error(ErrorCode::ArityMismatch, "disc_hyp needs at least 2 variables");
  if (d < 2) throw Error(ErrorCode::DegreeConstraint, "disc_hyp needs degree at least 2");
  const long a = hyp_normalization_exponent(n, d);
  const std::vector<long> degrees{n * ipow(d - 1, n - 1)};
  DiscOutcome out;

  if (f.ring().is_rationals()) {
    out.value = detail::over_integers({f}, degrees, [&](const std::vector<HomPoly>& g) {
      return disc_hyp(g[0], options).value;
    }, &out.trace);
    return out;
  }
  if (f.ring().is_mod_p() && f.ring().modulus() <= static_cast<std::uint64_t>(d) && d % static_cast<long>(f.ring().modulus()) == 0) {
    // The normalisation d^a vanishes in Z/p: compute over Z and reduce.
    record(&out.trace, "lift", "normalisation factor vanishes in " + f.ring().to_string());
    DiscOutcome lifted = disc_hyp(change_ring(f, RingSpec::integers()), options);
    out.trace.insert(out.trace.end(), lifted.trace.begin(), lifted.trace.end());
    out.value = Scalar::from_integer(f.ring(), lifted.value.integer());
    return out;
  }

  const detail::Formula formula = [&](std::span<const HomPoly> in, Trace* trace) -> std::optional<Scalar> {
    std::vector<HomPoly> grad;
    for (int j = 0; j < n; ++j) grad.push_back(partial(in[0], j));
    const Scalar res = resultant(grad, options, trace);
    const Scalar norm = Scalar::from_integer(in[0].ring(), Integer(d)).pow(static_cast<unsigned long>(a));
    record(trace, "divide", "Res(grad f) / " + std::to_string(d) + "^" + std::to_string(a));
    return exact_div(res, norm);
  };
  out.value = detail::run_ladder({f}, formula, {"disc_hyp", degrees, false}, options, &out.trace);
  return out;
}

DiscOutcome disc_pts_p2(const HomPoly& f, const HomPoly& g, const FallbackOptions& options) {
  require_same_ring({&f, &g});
  require_nvars(f, 3, "disc_pts_p2");
  require_nvars(g, 3, "disc_pts_p2");
  require_positive_degree(f, "disc_pts_p2");
  require_positive_degree(g, "disc_pts_p2");
  const long e1 = f.degree() - 1, e2 = g.degree() - 1;
  const std::vector<long> degrees{g.degree() * (2 * e1 + e2), f.degree() * (e1 + 2 * e2)};
  DiscOutcome out;
  if (f.ring().is_rationals()) {
    out.value = detail::over_integers({f, g}, degrees, [&](const std::vector<HomPoly>& h) {
      return disc_pts_p2(h[0], h[1], options).value;
    }, &out.trace);
    return out;
  }
  const detail::Formula formula = [&](std::span<const HomPoly> in, Trace* trace) -> std::optional<Scalar> {
    const Scalar bottom = resultant({set_var_zero(in[0], 0), set_var_zero(in[1], 0)}, options, trace);
    if (bottom.is_zero()) return std::nullopt;
    const Scalar top = resultant({in[0], in[1], jac_minor(in[0], in[1], 1, 2)}, options, trace);
    record(trace, "divide", "Res(f, g, J23) / Res(f(0,.), g(0,.))");
    return exact_div(top, bottom);
  };
  out.value = detail::run_ladder({f, g}, formula, {"disc_pts_p2", degrees, false}, options, &out.trace);
  return out;
}

DiscOutcome disc_pts_p3(const HomPoly& f1, const HomPoly& f2, const HomPoly& f3, const FallbackOptions& options) {
  require_same_ring({&f1, &f2, &f3});
  for (const HomPoly* f : {&f1, &f2, &f3}) {
    require_nvars(*f, 4, "disc_pts_p3");
    require_positive_degree(*f, "disc_pts_p3");
  }
  const long d[3] = {f1.degree(), f2.degree(), f3.degree()};
  const long dj = d[0] + d[1] + d[2] - 3;
  std::vector<long> degrees;
  for (int i = 0; i < 3; ++i) degrees.push_back(d[(i + 1) % 3] * d[(i + 2) % 3] * (dj - 1) + d[0] * d[1] * d[2]);
  DiscOutcome out;
  if (f1.ring().is_rationals()) {
    out.value = detail::over_integers({f1, f2, f3}, degrees, [&](const std::vector<HomPoly>& h) {
      return disc_pts_p3(h[0], h[1], h[2], options).value;
    }, &out.trace);
    return out;
  }
  const detail::Formula formula = [&](std::span<const HomPoly> in, Trace* trace) -> std::optional<Scalar> {
    const Scalar bottom =
        resultant({set_var_zero(in[0], 0), set_var_zero(in[1], 0), set_var_zero(in[2], 0)}, options, trace);
    if (bottom.is_zero()) return std::nullopt;
    const std::vector<HomPoly> rows{in[0], in[1], in[2], HomPoly::variable(in[0].ring(), 4, 0)};
    const Scalar top = resultant({in[0], in[1], in[2], jac_det(rows)}, options, trace);
    record(trace, "divide", "Res(f1, f2, f3, J(f1, f2, f3, x1)) / Res(f1(0,.), f2(0,.), f3(0,.))");
    return exact_div(top, bottom);
  };
  out.value = detail::run_ladder({f1, f2, f3}, formula, {"disc_pts_p3", degrees, false}, options, &out.trace);
  return out;
}

}  // namespace curvedisc
