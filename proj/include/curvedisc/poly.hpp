#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvedisc/rings.hpp"

namespace curvedisc {

/// Exponent vector of up to four variables packed into one machine word,
/// 16 bits per variable (variable 0 in the lowest bits).
class Monomial {
 public:
  static constexpr int kMaxVars = 4;

  constexpr Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  static Monomial variable(int index, unsigned power = 1);

  unsigned operator[](int i) const { return static_cast<unsigned>((bits_ >> (16 * i)) & 0xFFFF); }
  unsigned total_degree() const;
  std::uint64_t packed() const { return bits_; }

  bool divides(Monomial other) const;
  // Exponent-wise difference; the caller guarantees divisibility.
  Monomial quotient(Monomial divisor) const { return from_bits(bits_ - divisor.bits_); }
  Monomial with(int i, unsigned exponent) const;

  friend Monomial operator*(Monomial a, Monomial b) { return from_bits(a.bits_ + b.bits_); }
  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

 private:
  static constexpr Monomial from_bits(std::uint64_t b) {
    Monomial m;
    m.bits_ = b;
    return m;
  }
  std::uint64_t bits_ = 0;
};

/// Strict "comes first" relation for graded reverse lexicographic order, descending.
struct GrevlexGreater {
  bool operator()(Monomial a, Monomial b) const;
};

/// All monomials of the given degree in nvars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Sparse homogeneous polynomial in 1..4 variables. The zero polynomial keeps a
/// nominal degree so that degree bookkeeping stays total.
class HomPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

  HomPoly() : HomPoly(RingSpec::integers(), 4, 0) {}
  HomPoly(RingSpec ring, int nvars, int degree);

  static HomPoly constant(const Scalar& c, int nvars);
  static HomPoly variable(const RingSpec& ring, int nvars, int index);
  static HomPoly monomial(const Scalar& c, int nvars, Monomial m);
  /// sum_i coeffs[i] * x_{i+1}
  static HomPoly linear(std::span<const Scalar> coeffs);

  const RingSpec& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Monomial m) const;
  /// Adds c*m to the polynomial; m must have the polynomial's degree.
  void add_term(Monomial m, const Scalar& c);

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(const Scalar& c, const HomPoly& f);
  friend bool operator==(const HomPoly& a, const HomPoly& b);

  HomPoly pow(unsigned e) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Largest parameter degree among the coefficients (Z[t] only; 0 otherwise).
  long param_degree() const;

  std::string to_string() const;

 private:
  void check_compatible(const HomPoly& o) const;

  RingSpec ring_;
  int nvars_;
  int degree_;
  TermMap terms_;
};

/// n×n matrix of scalars with its determinant cached at construction.
class LinearChange {
 public:
  LinearChange(std::vector<Scalar> entries, int n);

  static LinearChange identity(const RingSpec& ring, int n);

  int size() const { return n_; }
  const RingSpec& ring() const { return entries_.front().ring(); }
  const Scalar& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const Scalar& det() const { return det_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  /// Matrix product (this * other).
  LinearChange operator*(const LinearChange& other) const;

  std::string to_string() const;

 private:
  std::vector<Scalar> entries_;
  int n_;
  Scalar det_;
};

/// Determinant by cofactor expansion; intended for n <= 4.
Scalar small_det(std::span<const Scalar> entries, int n);

HomPoly partial(const HomPoly& f, int j);  // j is 0-based
/// ∂_i f·∂_j g − ∂_j f·∂_i g (0-based indices)
HomPoly jac_minor(const HomPoly& f, const HomPoly& g, int i, int j);
/// Determinant of the Jacobian matrix of nvars polynomials.
HomPoly jac_det(std::span<const HomPoly> polys);
/// f with x_j set to zero, re-indexed into nvars-1 variables.
HomPoly set_var_zero(const HomPoly& f, int j);
/// f(sum_j c_{0,j} x_j, ..., sum_j c_{n-1,j} x_j)
HomPoly compose_linear(const HomPoly& f, const LinearChange& phi);
/// f(images[0], ..., images[n-1]) for homogeneous images of a common degree.
HomPoly substitute(const HomPoly& f, std::span<const HomPoly> images);
/// The same polynomial viewed in more variables.
HomPoly embed(const HomPoly& f, int nvars);

/// Coefficient-wise ring map (see convert()).
HomPoly change_ring(const HomPoly& f, const RingSpec& target);
/// Z[t] -> Z by t := t0.
HomPoly eval_param(const HomPoly& f, const Integer& t0);
/// Q -> Z: returns lambda*f with lambda the lcm of denominators.
HomPoly clear_denominators(const HomPoly& f, Integer& lambda);

/// Polynomial text in the documented grammar. nvars = 0 infers the count
/// from the highest variable used (at least 2).
HomPoly parse(std::string_view text, const RingSpec& ring, int nvars = 0);
inline std::string render(const HomPoly& f) { return f.to_string(); }

/// Dense random form with coefficients uniform in [-bound, bound].
HomPoly random_poly(const RingSpec& ring, int nvars, int degree, std::mt19937_64& rng, int bound = 5);
/// Uniform integer in [lo, hi] from a 64-bit engine; portable across standard libraries.
long uniform_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace curvedisc
