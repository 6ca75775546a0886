#include "curvedisc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "curvedisc/modarith.hpp"
#include "curvedisc/parallel.hpp"

namespace curvedisc {

namespace {

std::size_t bit_length(const Integer& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

Scalar det_over_mod_p(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  std::vector<u64> entries(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries[i] = m.data()[i].residue();
  return Scalar::from_integer(m.data().front().ring(), Integer(static_cast<unsigned long>(det_mod_p(std::move(entries), n, m.data().front().ring().modulus()))));
}

Matrix<Integer> to_integer_matrix(const Matrix<Scalar>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).integer();
  return out;
}

}  // namespace

Scalar det_bareiss(const Matrix<Scalar>& m) {
  if (!m.square()) throw Error(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(RingSpec::integers());
  Matrix<Scalar> a = m;
  const RingSpec ring = a(0, 0).ring();
  Scalar prev = Scalar::one(ring);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (!a(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) return Scalar::zero(ring);
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pr, j), a(k, j));
      negate = !negate;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, pc), a(i, k));
      negate = !negate;
    }
    // Invariant: after step k every a(i, j) with i, j > k is a (k+1)-minor.
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = Scalar::zero(ring);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Integer det_multimodular(const Matrix<Integer>& m) {
  if (!m.square()) throw Error(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // log2 of the Hadamard bound prod_i |row_i|, rounded up.
  double log2_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer sq = 0;
    for (std::size_t j = 0; j < n; ++j) sq += m(i, j) * m(i, j);
    if (sq == 0) return 0;
    log2_bound += 0.5 * static_cast<double>(bit_length(sq));
  }
  // Primes exceed 2^61.9; the product must exceed twice the bound.
  const auto primes = static_cast<std::size_t>(std::ceil((log2_bound + 2.0) / 61.9));
  std::vector<Residue> residues(primes);
  parallel_for(primes, [&](std::size_t k) {
    const u64 p = nth_large_prime(k);
    std::vector<u64> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        entries[i * n + j] = static_cast<u64>(mpz_fdiv_ui(m(i, j).get_mpz_t(), static_cast<unsigned long>(p)));
    const u64 d = det_mod_p(std::move(entries), n, p);
    residues[k] = Residue{Integer(static_cast<unsigned long>(d)), Integer(static_cast<unsigned long>(p))};
  });
  return crt_combine(residues, true);
}

Scalar det_param(const Matrix<Scalar>& m, std::optional<long> degree_bound) {
  if (!m.square()) throw Error(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(RingSpec::integers());
  const RingSpec ring = m(0, 0).ring();
  if (!ring.is_param()) throw Error(ErrorCode::WrongRing, "det_param needs a Z[t] matrix");
  long bound = 0;
  if (degree_bound) {
    bound = *degree_bound;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      long row_max = -1;
      for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, m(i, j).param().degree());
      if (row_max < 0) return Scalar::zero(ring);
      bound += row_max;
    }
  }
  const auto count = static_cast<std::size_t>(bound + 1);
  std::vector<Integer> points(count), values(count);
  parallel_for(count, [&](std::size_t k) {
    points[k] = sample_point(k);
    Matrix<Integer> at(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).param().eval(points[k]);
    if (n > kMultimodularThreshold) {
      values[k] = det_multimodular(at);
    } else {
      Matrix<Scalar> s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) = Scalar::from_integer(RingSpec::integers(), at(i, j));
      values[k] = det_bareiss(s).integer();
    }
  });
  return Scalar::from_param(ring, interpolate(points, values));
}

Scalar determinant(const Matrix<Scalar>& m) {
  if (!m.square()) throw Error(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar::one(RingSpec::integers());
  const RingSpec& ring = m(0, 0).ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      if (m.rows() > kMultimodularThreshold)
        return Scalar::from_integer(ring, det_multimodular(to_integer_matrix(m)));
      return det_bareiss(m);
    case RingKind::IntParam: return det_param(m);
    case RingKind::ModP: return det_over_mod_p(m);
    case RingKind::Rationals: return det_bareiss(m);
  }
  return det_bareiss(m);
}

}  // namespace curvedisc
