#include "curvedisc/poly.hpp"
#include "curvedisc/trace.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace curvedisc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  assert(exponents.size() <= kMaxVars);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    assert(exponents[i] <= 0xFFFF);
    bits_ |= static_cast<std::uint64_t>(exponents[i]) << (16 * i);
  }
}

Monomial Monomial::variable(int index, unsigned power) {
  return from_bits(static_cast<std::uint64_t>(power) << (16 * index));
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += (*this)[i];
  return s;
}

bool Monomial::divides(Monomial other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if ((*this)[i] > other[i]) return false;
  return true;
}

Monomial Monomial::with(int i, unsigned exponent) const {
  std::uint64_t mask = 0xFFFFULL << (16 * i);
  return from_bits((bits_ & ~mask) | (static_cast<std::uint64_t>(exponent) << (16 * i)));
}

bool GrevlexGreater::operator()(Monomial a, Monomial b) const {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars < 1) return out;
  std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate compositions of degree into nvars parts.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = static_cast<unsigned>(remaining);
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = static_cast<unsigned>(k);
      self(self, var + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

// ---------------------------------------------------------------- HomPoly

HomPoly::HomPoly(RingSpec ring, int nvars, int degree) : ring_(std::move(ring)), nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > Monomial::kMaxVars)
    throw Error(ErrorCode::ArityMismatch, "polynomials use 1 to 4 variables, got " + std::to_string(nvars));
}

HomPoly HomPoly::constant(const Scalar& c, int nvars) {
  HomPoly f(c.ring(), nvars, 0);
  f.add_term(Monomial(), c);
  return f;
}

HomPoly HomPoly::variable(const RingSpec& ring, int nvars, int index) {
  return monomial(Scalar::one(ring), nvars, Monomial::variable(index));
}

HomPoly HomPoly::monomial(const Scalar& c, int nvars, Monomial m) {
  HomPoly f(c.ring(), nvars, static_cast<int>(m.total_degree()));
  f.add_term(m, c);
  return f;
}

HomPoly HomPoly::linear(std::span<const Scalar> coeffs) {
  HomPoly f(coeffs.front().ring(), static_cast<int>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(Monomial::variable(static_cast<int>(i)), coeffs[i]);
  return f;
}

Scalar HomPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void HomPoly::add_term(Monomial m, const Scalar& c) {
  assert(static_cast<int>(m.total_degree()) == degree_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HomPoly::check_compatible(const HomPoly& o) const {
  if (!(ring_ == o.ring_)) throw Error(ErrorCode::RingMismatch, ring_.to_string() + " vs " + o.ring_.to_string());
  if (nvars_ != o.nvars_)
    throw Error(ErrorCode::ArityMismatch,
                "variable counts differ: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

HomPoly HomPoly::operator-() const {
  HomPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  check_compatible(o);
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_) {
    if (!is_zero())
      throw Error(ErrorCode::NotHomogeneous,
                  "adding forms of degree " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
    degree_ = o.degree_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) { return *this += -o; }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  a.check_compatible(b);
  HomPoly r(a.ring_, a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

HomPoly operator*(const Scalar& c, const HomPoly& f) {
  if (!(c.ring() == f.ring_)) throw Error(ErrorCode::RingMismatch, c.ring().to_string() + " vs " + f.ring_.to_string());
  HomPoly r(f.ring_, f.nvars_, f.degree_);
  for (const auto& [m, x] : f.terms_) r.add_term(m, c * x);
  return r;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  if (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly HomPoly::pow(unsigned e) const {
  HomPoly result = constant(Scalar::one(ring_), nvars_);
  HomPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Scalar HomPoly::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::ArityMismatch, "point dimension mismatch");
  Scalar acc = Scalar::zero(ring_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= point[static_cast<std::size_t>(i)].pow(m[i]);
    acc += t;
  }
  return acc;
}

long HomPoly::param_degree() const {
  if (!ring_.is_param()) return 0;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, c.param().degree());
  return d;
}

namespace {

std::string monomial_text(Monomial m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string HomPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m, nvars_);
    bool negative = false;
    std::string coeff;
    switch (ring_.kind()) {
      case RingKind::Integers:
      case RingKind::Rationals: {
        negative = ring_.is_integers() ? c.integer() < 0 : c.rational() < 0;
        coeff = (-c).to_string();
        if (!negative) coeff = c.to_string();
        break;
      }
      case RingKind::ModP: coeff = c.to_string(); break;
      case RingKind::IntParam: {
        const ParamPoly& p = c.param();
        negative = p.leading() < 0;
        const ParamPoly mag = negative ? -p : p;
        coeff = mag.is_constant() ? mag.coeff(0).get_str() : "(" + mag.to_string(ring_.param()) + ")";
        break;
      }
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- LinearChange

Scalar small_det(std::span<const Scalar> entries, int n) {
  if (n == 0) throw Error(ErrorCode::ArityMismatch, "empty matrix");
  const RingSpec& ring = entries.front().ring();
  if (n == 1) return entries[0];
  Scalar det = Scalar::zero(ring);
  std::vector<Scalar> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int col = 0; col < n; ++col) {
    const Scalar& a = entries[static_cast<std::size_t>(col)];
    if (a.is_zero()) continue;
    std::size_t k = 0;
    for (int r = 1; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (c != col) minor[k++] = entries[static_cast<std::size_t>(r * n + c)];
    Scalar term = a * small_det(minor, n - 1);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

LinearChange::LinearChange(std::vector<Scalar> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (n < 1 || static_cast<int>(entries_.size()) != n * n)
    throw Error(ErrorCode::ArityMismatch, "linear change needs n*n entries");
  for (const auto& e : entries_)
    if (!(e.ring() == entries_.front().ring())) throw Error(ErrorCode::RingMismatch, "mixed rings in linear change");
  det_ = small_det(entries_, n_);
}

LinearChange LinearChange::identity(const RingSpec& ring, int n) {
  std::vector<Scalar> e(static_cast<std::size_t>(n * n), Scalar::zero(ring));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = Scalar::one(ring);
  return LinearChange(std::move(e), n);
}

LinearChange LinearChange::operator*(const LinearChange& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::ArityMismatch, "linear change dimensions differ");
  std::vector<Scalar> e(entries_.size(), Scalar::zero(ring()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) e[static_cast<std::size_t>(i * n_ + j)] += (*this)(i, k) * o(k, j);
  return LinearChange(std::move(e), n_);
}

std::string LinearChange::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < n_; ++j) out += (j ? "," : "") + (*this)(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------- operations

HomPoly partial(const HomPoly& f, int j) {
  if (j < 0 || j >= f.nvars()) throw Error(ErrorCode::ArityMismatch, "derivative index out of range");
  HomPoly r(f.ring(), f.nvars(), f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m[j];
    if (e == 0) continue;
    r.add_term(m.with(j, e - 1), c * Scalar::from_integer(f.ring(), Integer(e)));
  }
  return r;
}

HomPoly jac_minor(const HomPoly& f, const HomPoly& g, int i, int j) {
  if (!(f.ring() == g.ring())) throw Error(ErrorCode::RingMismatch, f.ring().to_string() + " vs " + g.ring().to_string());
  return partial(f, i) * partial(g, j) - partial(f, j) * partial(g, i);
}

namespace {

HomPoly poly_det(std::vector<HomPoly>& m, int n, std::vector<int>& cols, int row) {
  if (row == n - 1) return m[static_cast<std::size_t>(row * n + cols[0])];
  HomPoly acc;
  bool first = true;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    std::vector<int> rest;
    for (std::size_t q = 0; q < cols.size(); ++q)
      if (q != k) rest.push_back(cols[q]);
    HomPoly term = m[static_cast<std::size_t>(row * n + col)] * poly_det(m, n, rest, row + 1);
    if (k % 2) term = -term;
    if (first) {
      acc = term;
      first = false;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

HomPoly jac_det(std::span<const HomPoly> polys) {
  const int n = static_cast<int>(polys.size());
  if (n == 0) throw Error(ErrorCode::ArityMismatch, "empty Jacobian");
  for (const auto& p : polys) {
    if (p.nvars() != n)
      throw Error(ErrorCode::ArityMismatch,
                  "Jacobian determinant needs " + std::to_string(p.nvars()) + " polynomials, got " + std::to_string(n));
    if (!(p.ring() == polys[0].ring())) throw Error(ErrorCode::RingMismatch, "mixed rings in Jacobian");
  }
  std::vector<HomPoly> m;
  m.reserve(static_cast<std::size_t>(n * n));
  for (const auto& p : polys)
    for (int j = 0; j < n; ++j) m.push_back(partial(p, j));
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
  return poly_det(m, n, cols, 0);
}

HomPoly set_var_zero(const HomPoly& f, int j) {
  if (j < 0 || j >= f.nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  if (f.nvars() < 2) throw Error(ErrorCode::ArityMismatch, "cannot eliminate the only variable");
  HomPoly r(f.ring(), f.nvars() - 1, f.degree());
  for (const auto& [m, c] : f.terms()) {
    if (m[j] != 0) continue;
    std::array<unsigned, Monomial::kMaxVars> e{};
    int k = 0;
    for (int i = 0; i < f.nvars(); ++i)
      if (i != j) e[static_cast<std::size_t>(k++)] = m[i];
    r.add_term(Monomial(std::span<const unsigned>(e.data(), static_cast<std::size_t>(k))), c);
  }
  return r;
}

HomPoly substitute(const HomPoly& f, std::span<const HomPoly> images) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  const int m = images.front().nvars();
  const int e = images.front().degree();
  for (const auto& img : images) {
    if (!(img.ring() == f.ring())) throw Error(ErrorCode::RingMismatch, "substitution ring mismatch");
    if (img.nvars() != m || (img.degree() != e && !img.is_zero()))
      throw Error(ErrorCode::ArityMismatch, "substitution images must share variables and degree");
  }
  HomPoly result(f.ring(), m, f.degree() * e);
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<HomPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const HomPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(HomPoly::constant(Scalar::one(f.ring()), m));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  for (const auto& [mono, c] : f.terms()) {
    HomPoly term = HomPoly::constant(c, m);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (mono[static_cast<int>(i)]) term = term * power(i, mono[static_cast<int>(i)]);
    result += term;
  }
  return result;
}

HomPoly compose_linear(const HomPoly& f, const LinearChange& phi) {
  if (phi.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "linear change dimension mismatch");
  if (!(phi.ring() == f.ring())) throw Error(ErrorCode::RingMismatch, phi.ring().to_string() + " vs " + f.ring().to_string());
  std::vector<HomPoly> images;
  for (int i = 0; i < phi.size(); ++i) {
    std::vector<Scalar> row(phi.entries().begin() + i * phi.size(), phi.entries().begin() + (i + 1) * phi.size());
    images.push_back(HomPoly::linear(row));
  }
  return substitute(f, images);
}

HomPoly embed(const HomPoly& f, int nvars) {
  if (nvars < f.nvars()) throw Error(ErrorCode::ArityMismatch, "embedding into fewer variables");
  HomPoly r(f.ring(), nvars, f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

HomPoly change_ring(const HomPoly& f, const RingSpec& target) {
  HomPoly r(target, f.nvars(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, convert(c, target));
  return r;
}

HomPoly eval_param(const HomPoly& f, const Integer& t0) {
  if (!f.ring().is_param()) throw Error(ErrorCode::WrongRing, "eval_param needs a Z[t] polynomial");
  HomPoly r(RingSpec::integers(), f.nvars(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, eval_param(c, t0));
  return r;
}

HomPoly clear_denominators(const HomPoly& f, Integer& lambda) {
  if (!f.ring().is_rationals()) throw Error(ErrorCode::WrongRing, "clear_denominators needs a Q polynomial");
  lambda = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), c.rational().get_den_mpz_t());
  HomPoly r(RingSpec::integers(), f.nvars(), f.degree());
  const Rational l(lambda);
  for (const auto& [m, c] : f.terms()) {
    Rational q = c.rational() * l;
    q.canonicalize();
    r.add_term(m, Scalar::from_integer(RingSpec::integers(), q.get_num()));
  }
  return r;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

HomPoly random_poly(const RingSpec& ring, int nvars, int degree, std::mt19937_64& rng, int bound) {
  HomPoly f(ring, nvars, degree);
  for (Monomial m : monomials_of_degree(nvars, degree))
    f.add_term(m, Scalar::from_integer(ring, Integer(uniform_int(rng, -bound, bound))));
  return f;
}

LinearChange random_unimodular(const RingSpec& ring, int n, std::mt19937_64& rng) {
  std::vector<long> a(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 1;
  if (n > 1) {
    for (int step = 0; step < 2 * n; ++step) {
      const int i = static_cast<int>(uniform_int(rng, 0, n - 1));
      int j = static_cast<int>(uniform_int(rng, 0, n - 2));
      if (j >= i) ++j;
      long c = uniform_int(rng, -2, 1);
      if (c >= 0) ++c;
      // row_i += c * row_j keeps the determinant at 1.
      for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(i * n + k)] += c * a[static_cast<std::size_t>(j * n + k)];
    }
  }
  std::vector<Scalar> entries;
  entries.reserve(a.size());
  for (long v : a) entries.push_back(Scalar::from_integer(ring, Integer(v)));
  return LinearChange(std::move(entries), n);
}

}  // namespace curvedisc
