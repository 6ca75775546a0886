#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "curvedisc/matrix.hpp"
#include "curvedisc/poly.hpp"
#include "curvedisc/trace.hpp"

namespace curvedisc {

/// The Macaulay matrix of n forms in n variables at the critical degree,
/// together with its extraneous minor.
///
/// Rows and columns are both indexed by the monomials of degree
/// nu = sum(d_i - 1) + 1 in grevlex-descending order. The row of monomial m is
/// the coefficient vector of (m / x_i^{d_i}) * f_i where i is the least index
/// with x_i^{d_i} | m. The extraneous minor keeps the rows and columns of the
/// monomials divisible by at least two of the x_i^{d_i}. For generic input,
/// det(matrix) = Res * det(extraneous).
struct MacaulayData {
  std::vector<int> degrees;
  int critical_degree = 0;
  std::vector<Monomial> row_monomials;
  std::vector<int> assignment;
  Matrix<Scalar> matrix;
  std::vector<std::size_t> extraneous_indices;
  Matrix<Scalar> extraneous;
};

/// Requires n forms in n variables, all of positive degree.
MacaulayData macaulay_data(std::span<const HomPoly> polys);

/// det(M) / det(M'), or nullopt when det(M') vanishes.
std::optional<Scalar> macaulay_ratio(std::span<const HomPoly> polys);

/// Res(f_1, ..., f_n), normalised by Res(x_1^{d_1}, ..., x_n^{d_n}) = 1.
///
/// A degree-0 input c contributes c^{prod_{j != i} d_j}. When the extraneous
/// minor vanishes after specialisation the fallback ladder runs: random
/// unimodular changes of variables, then (over Z) perturbation
/// f_i + t*x_i^{d_i} evaluated at t = 0; Z/p inputs are lifted to Z for the
/// last rung and Z[t] inputs are evaluated pointwise and interpolated.
Scalar resultant(std::span<const HomPoly> polys, const FallbackOptions& options = {}, Trace* trace = nullptr);

inline Scalar resultant(std::initializer_list<HomPoly> polys, const FallbackOptions& options = {},
                        Trace* trace = nullptr) {
  return resultant(std::span<const HomPoly>(polys.begin(), polys.size()), options, trace);
}

/// CSV dump, one line per nonzero entry: row monomial, column monomial, entry.
void write_macaulay_csv(const MacaulayData& data, std::ostream& matrix_out, std::ostream& extraneous_out);

}  // namespace curvedisc
