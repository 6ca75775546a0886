#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvedisc/rings.hpp"

namespace curvedisc {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free Gaussian elimination with full pivot search. Works over any
/// of the supported rings (exact division at every step).
Scalar det_bareiss(const Matrix<Scalar>& m);

/// Integer determinant via word-size primes and Chinese remaindering; the
/// number of primes comes from the Hadamard bound.
Integer det_multimodular(const Matrix<Integer>& m);

/// Z[t] determinant via evaluation at degree_bound+1 integer points and
/// interpolation. Without a bound, the sum of row-wise maximal degrees is used.
Scalar det_param(const Matrix<Scalar>& m, std::optional<long> degree_bound = std::nullopt);

/// Kernel selection: Z above 40x40 -> multimodular, Z[t] -> det_param,
/// Z/p -> modular elimination, otherwise Bareiss.
Scalar determinant(const Matrix<Scalar>& m);

/// Number of rows above which integer determinants go multimodular.
inline constexpr std::size_t kMultimodularThreshold = 40;

}  // namespace curvedisc
