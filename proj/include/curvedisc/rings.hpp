#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "curvedisc/errors.hpp"

namespace curvedisc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; the leading coefficient is never zero.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(Integer constant);
  explicit ParamPoly(std::vector<Integer> coeffs);

  static ParamPoly monomial(Integer coeff, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  Integer eval(const Integer& t) const;
  Integer content() const;
  ParamPoly primitive_part() const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const Integer& c);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Exact quotient a / b; throws NotDivisible when b does not divide a in Z[t].
  static ParamPoly divexact(const ParamPoly& a, const ParamPoly& b);

  std::string to_string(std::string_view var) const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

enum class RingKind { Integers, Rationals, ModP, IntParam };

/// Coefficient ring descriptor: Z, Q, Z/p (p prime, < 2^64) or Z[t].
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec integers() { return RingSpec(RingKind::Integers, 0, {}); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0, {}); }
  static RingSpec mod_p(std::uint64_t p);
  static RingSpec int_param(std::string name);

  // Accepts "z", "q", "zmod:<p>", "zt" (parameter "t") and "zt:<name>".
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::string& param() const { return param_; }

  bool is_integers() const { return kind_ == RingKind::Integers; }
  bool is_rationals() const { return kind_ == RingKind::Rationals; }
  bool is_mod_p() const { return kind_ == RingKind::ModP; }
  bool is_param() const { return kind_ == RingKind::IntParam; }

  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.param_ == b.param_;
  }

 private:
  RingSpec(RingKind kind, std::uint64_t modulus, std::string param)
      : kind_(kind), modulus_(modulus), param_(std::move(param)) {}

  RingKind kind_ = RingKind::Integers;
  std::uint64_t modulus_ = 0;
  std::string param_;
};

/// An exact element of a RingSpec. Values are kept canonical: reduced
/// fractions with positive denominator, residues in [0,p), stripped Z[t]
/// polynomials.
class Scalar {
 public:
  Scalar() : ring_(RingSpec::integers()), value_(Integer(0)) {}

  static Scalar zero(const RingSpec& ring) { return from_integer(ring, Integer(0)); }
  static Scalar one(const RingSpec& ring) { return from_integer(ring, Integer(1)); }
  static Scalar from_integer(const RingSpec& ring, const Integer& n);
  static Scalar from_rational(const RingSpec& ring, const Rational& q);
  static Scalar from_param(const RingSpec& ring, ParamPoly p);
  // The parameter t itself in Z[t].
  static Scalar parameter(const RingSpec& ring);

  const RingSpec& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  const Integer& integer() const;    // Integers
  const Rational& rational() const;  // Rationals
  std::uint64_t residue() const;     // ModP
  const ParamPoly& param() const;    // IntParam

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned long e) const;

  // Inverse in a field (Q or Z/p); NotDivisible for non-units elsewhere.
  Scalar inverse() const;

  // Canonical decimal text; Z[t] values print as polynomials in the parameter.
  std::string to_string() const;

 private:
  using Value = std::variant<Integer, Rational, std::uint64_t, ParamPoly>;
  Scalar(RingSpec ring, Value v) : ring_(std::move(ring)), value_(std::move(v)) {}
  void check_same_ring(const Scalar& o) const;

  RingSpec ring_;
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// q with q*b == a. DivisionByZero if b == 0, NotDivisible if no such q exists.
Scalar exact_div(const Scalar& a, const Scalar& b);

/// Symmetric-range lift in Z of a residue modulo p.
Integer symmetric_lift(std::uint64_t residue, std::uint64_t p);
Integer symmetric_mod(const Integer& value, const Integer& modulus);

/// Reduce an integer (or Z-valued scalar) into Z/p.
std::uint64_t reduce_mod(const Integer& value, std::uint64_t p);

struct Residue {
  Integer value;
  Integer modulus;
};

/// Chinese remaindering. With symmetric=true the result lies in (-M/2, M/2],
/// otherwise in [0, M). InconsistentResidues when moduli share a factor and
/// the residues disagree on it.
Integer crt_combine(std::span<const Residue> residues, bool symmetric = true);

/// Evaluate an element of Z[t] at an integer.
Scalar eval_param(const Scalar& a, const Integer& t0);

/// Map an element into another ring: Z -> anything, Z/p -> Z (symmetric lift),
/// Z[t] -> Z (only for constants).
Scalar convert(const Scalar& a, const RingSpec& target);

/// The unique polynomial of degree < points.size() through (points[i], values[i]).
/// Throws NotDivisible if that polynomial does not have integer coefficients.
ParamPoly interpolate(std::span<const Integer> points, std::span<const Integer> values);

/// Value at 0 of the interpolating polynomial (Lagrange), exact over Q, must be integral.
Integer interpolate_at_zero(std::span<const Integer> points, std::span<const Integer> values);

/// Sample points 0, 1, -1, 2, -2, ...
Integer sample_point(std::size_t index);

}  // namespace curvedisc
