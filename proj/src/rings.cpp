#include "curvedisc/rings.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "curvedisc/modarith.hpp"

namespace curvedisc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InconsistentResidues: return "InconsistentResidues";
    case ErrorCode::WrongRing: return "WrongRing";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorCode::DegreeConstraint: return "DegreeConstraint";
    case ErrorCode::DegenerateLinearForms: return "DegenerateLinearForms";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
  }
  return "Error";
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

ParamPoly::ParamPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ParamPoly ParamPoly::monomial(Integer coeff, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coeff);
  return ParamPoly(std::move(c));
}

void ParamPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ParamPoly::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Integer ParamPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
  return g;
}

ParamPoly ParamPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  std::vector<Integer> c = coeffs_;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ParamPoly(std::move(c));
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return ParamPoly(std::move(c));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ParamPoly(std::move(c));
}

ParamPoly operator*(const ParamPoly& a, const Integer& k) {
  std::vector<Integer> c = a.coeffs_;
  for (auto& x : c) x *= k;
  return ParamPoly(std::move(c));
}

ParamPoly ParamPoly::divexact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorCode::NotDivisible, "degree of divisor exceeds dividend");
  std::vector<Integer> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - db);
  const Integer& lc = b.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
      throw Error(ErrorCode::NotDivisible, "leading coefficient does not divide in Z[t]");
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) throw Error(ErrorCode::NotDivisible, "nonzero remainder in Z[t]");
  return ParamPoly(std::move(quot));
}

std::string ParamPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- RingSpec

namespace {

bool reserved_name(std::string_view name) {
  static constexpr std::string_view kNames[] = {"x1", "x2", "x3", "x4", "x", "y", "z", "w"};
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

RingSpec RingSpec::mod_p(std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidRing, "modulus " + std::to_string(p) + " is not prime");
  return RingSpec(RingKind::ModP, p, {});
}

RingSpec RingSpec::int_param(std::string name) {
  if (!is_identifier(name) || reserved_name(name))
    throw Error(ErrorCode::InvalidRing, "invalid parameter name '" + name + "'");
  return RingSpec(RingKind::IntParam, 0, std::move(name));
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "z" || s == "zz" || s == "int") return integers();
  if (s == "q" || s == "qq") return rationals();
  if (s == "zt") return int_param("t");
  if (s.rfind("zt:", 0) == 0) return int_param(std::string(text.substr(3)));
  if (s.rfind("zmod:", 0) == 0) {
    const std::string digits = s.substr(5);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 20)
      throw Error(ErrorCode::InvalidRing, "bad modulus in '" + std::string(text) + "'");
    Integer p(digits);
    if (p >= Integer("18446744073709551616"))
      throw Error(ErrorCode::InvalidRing, "modulus must be below 2^64");
    return mod_p(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidRing, "unknown ring '" + std::string(text) + "'");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::ModP: return "zmod:" + std::to_string(modulus_);
    case RingKind::IntParam: return "zt:" + param_;
  }
  return "?";
}

// ---------------------------------------------------------------- Scalar

std::uint64_t reduce_mod(const Integer& value, std::uint64_t p) {
  Integer r;
  Integer m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

namespace {

Integer from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

Integer symmetric_lift(std::uint64_t residue, std::uint64_t p) {
  Integer r = from_u64(residue);
  if (residue > p / 2) r -= from_u64(p);
  return r;
}

Integer symmetric_mod(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  if (2 * r > modulus) r -= modulus;
  return r;
}

Scalar Scalar::from_integer(const RingSpec& ring, const Integer& n) {
  switch (ring.kind()) {
    case RingKind::Integers: return Scalar(ring, n);
    case RingKind::Rationals: return Scalar(ring, Rational(n));
    case RingKind::ModP: return Scalar(ring, reduce_mod(n, ring.modulus()));
    case RingKind::IntParam: return Scalar(ring, ParamPoly(n));
  }
  return {};
}

Scalar Scalar::from_rational(const RingSpec& ring, const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (ring.is_rationals()) return Scalar(ring, q);
  if (ring.is_mod_p()) {
    std::uint64_t den = reduce_mod(q.get_den(), ring.modulus());
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(ring.modulus()));
    std::uint64_t num = reduce_mod(q.get_num(), ring.modulus());
    return Scalar(ring, mulmod(num, invmod(den, ring.modulus()), ring.modulus()));
  }
  if (q.get_den() != 1) throw Error(ErrorCode::NotDivisible, q.get_str() + " is not integral in " + ring.to_string());
  return from_integer(ring, q.get_num());
}

Scalar Scalar::from_param(const RingSpec& ring, ParamPoly p) {
  if (!ring.is_param()) throw Error(ErrorCode::WrongRing, "parameter polynomial outside Z[t]");
  return Scalar(ring, std::move(p));
}

Scalar Scalar::parameter(const RingSpec& ring) { return from_param(ring, ParamPoly::monomial(Integer(1), 1)); }

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ParamPoly>) return v.is_zero();
        else return v == 0;
      },
      value_);
}

bool Scalar::is_one() const { return *this == one(ring_); }

const Integer& Scalar::integer() const {
  if (!ring_.is_integers()) throw Error(ErrorCode::WrongRing, "expected an integer, ring is " + ring_.to_string());
  return std::get<Integer>(value_);
}

const Rational& Scalar::rational() const {
  if (!ring_.is_rationals()) throw Error(ErrorCode::WrongRing, "expected a rational, ring is " + ring_.to_string());
  return std::get<Rational>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!ring_.is_mod_p()) throw Error(ErrorCode::WrongRing, "expected a residue, ring is " + ring_.to_string());
  return std::get<std::uint64_t>(value_);
}

const ParamPoly& Scalar::param() const {
  if (!ring_.is_param()) throw Error(ErrorCode::WrongRing, "expected a Z[t] element, ring is " + ring_.to_string());
  return std::get<ParamPoly>(value_);
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::RingMismatch, ring_.to_string() + " vs " + o.ring_.to_string());
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return Scalar(ring_, Integer(-std::get<Integer>(value_)));
    case RingKind::Rationals: return Scalar(ring_, Rational(-std::get<Rational>(value_)));
    case RingKind::ModP: return Scalar(ring_, submod(0, std::get<std::uint64_t>(value_), ring_.modulus()));
    case RingKind::IntParam: return Scalar(ring_, -std::get<ParamPoly>(value_));
  }
  return {};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::Integers: std::get<Integer>(value_) += std::get<Integer>(o.value_); break;
    case RingKind::Rationals: std::get<Rational>(value_) += std::get<Rational>(o.value_); break;
    case RingKind::ModP: {
      auto& v = std::get<std::uint64_t>(value_);
      v = addmod(v, std::get<std::uint64_t>(o.value_), ring_.modulus());
      break;
    }
    case RingKind::IntParam: value_ = std::get<ParamPoly>(value_) + std::get<ParamPoly>(o.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::Integers: std::get<Integer>(value_) -= std::get<Integer>(o.value_); break;
    case RingKind::Rationals: std::get<Rational>(value_) -= std::get<Rational>(o.value_); break;
    case RingKind::ModP: {
      auto& v = std::get<std::uint64_t>(value_);
      v = submod(v, std::get<std::uint64_t>(o.value_), ring_.modulus());
      break;
    }
    case RingKind::IntParam: value_ = std::get<ParamPoly>(value_) - std::get<ParamPoly>(o.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::Integers: std::get<Integer>(value_) *= std::get<Integer>(o.value_); break;
    case RingKind::Rationals: std::get<Rational>(value_) *= std::get<Rational>(o.value_); break;
    case RingKind::ModP: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mulmod(v, std::get<std::uint64_t>(o.value_), ring_.modulus());
      break;
    }
    case RingKind::IntParam: value_ = std::get<ParamPoly>(value_) * std::get<ParamPoly>(o.value_); break;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

Scalar Scalar::pow(unsigned long e) const {
  Scalar result = one(ring_);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return exact_div(one(ring_), *this);
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return std::get<Integer>(value_).get_str();
    case RingKind::Rationals: return std::get<Rational>(value_).get_str();
    case RingKind::ModP: return std::to_string(std::get<std::uint64_t>(value_));
    case RingKind::IntParam: return std::get<ParamPoly>(value_).to_string(ring_.param());
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar exact_div(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().to_string() + " vs " + b.ring().to_string());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by zero");
  const RingSpec& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers: {
      const Integer& x = a.integer();
      const Integer& y = b.integer();
      if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()))
        throw Error(ErrorCode::NotDivisible, y.get_str() + " does not divide " + x.get_str());
      Integer q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      return Scalar::from_integer(ring, q);
    }
    case RingKind::Rationals: return Scalar::from_rational(ring, Rational(a.rational() / b.rational()));
    case RingKind::ModP: {
      const std::uint64_t p = ring.modulus();
      return Scalar::from_integer(ring, from_u64(mulmod(a.residue(), invmod(b.residue(), p), p)));
    }
    case RingKind::IntParam: return Scalar::from_param(ring, ParamPoly::divexact(a.param(), b.param()));
  }
  return {};
}

Integer crt_combine(std::span<const Residue> residues, bool symmetric) {
  Integer x = 0;
  Integer m = 1;
  for (const auto& r : residues) {
    if (r.modulus <= 0) throw Error(ErrorCode::InconsistentResidues, "moduli must be positive");
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), r.modulus.get_mpz_t());
    Integer diff = r.value - x;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()))
      throw Error(ErrorCode::InconsistentResidues, "residues disagree modulo " + g.get_str());
    Integer lcm = m / g * r.modulus;
    // x + m * s * diff / g solves both congruences.
    Integer step = m * s * (diff / g);
    x += step;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), lcm.get_mpz_t());
    m = lcm;
  }
  if (symmetric && 2 * x > m) x -= m;
  return x;
}

Scalar eval_param(const Scalar& a, const Integer& t0) {
  if (!a.ring().is_param()) throw Error(ErrorCode::WrongRing, "eval_param needs a Z[t] element, got " + a.ring().to_string());
  return Scalar::from_integer(RingSpec::integers(), a.param().eval(t0));
}

Scalar convert(const Scalar& a, const RingSpec& target) {
  if (a.ring() == target) return a;
  switch (a.ring().kind()) {
    case RingKind::Integers: return Scalar::from_integer(target, a.integer());
    case RingKind::Rationals: return Scalar::from_rational(target, a.rational());
    case RingKind::ModP:
      if (target.is_integers() || target.is_rationals() || target.is_param())
        return Scalar::from_integer(target, symmetric_lift(a.residue(), a.ring().modulus()));
      break;
    case RingKind::IntParam:
      if (a.param().is_constant()) return Scalar::from_integer(target, a.param().coeff(0));
      break;
  }
  throw Error(ErrorCode::WrongRing, "cannot map " + a.to_string() + " from " + a.ring().to_string() + " to " +
                                        target.to_string());
}

ParamPoly interpolate(std::span<const Integer> points, std::span<const Integer> values) {
  const std::size_t n = points.size();
  if (values.size() != n) throw Error(ErrorCode::ArityMismatch, "interpolation needs one value per point");
  // Newton divided differences over Q.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form.
  std::vector<Rational> poly;
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (t - points[k]) + dd[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(points[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error(ErrorCode::NotDivisible, "interpolant has non-integral coefficients");
    coeffs.push_back(c.get_num());
  }
  return ParamPoly(std::move(coeffs));
}

Integer interpolate_at_zero(std::span<const Integer> points, std::span<const Integer> values) {
  const std::size_t n = points.size();
  if (values.size() != n) throw Error(ErrorCode::ArityMismatch, "interpolation needs one value per point");
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational w = values[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      w *= Rational(-points[j]) / Rational(points[i] - points[j]);
    }
    acc += w;
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw Error(ErrorCode::NotDivisible, "interpolated value at 0 is not integral");
  return acc.get_num();
}

Integer sample_point(std::size_t index) {
  if (index == 0) return 0;
  Integer k = static_cast<unsigned long>((index + 1) / 2);
  return (index % 2 == 1) ? k : Integer(-k);
}

}  // namespace curvedisc
