#include "qent/density_operator.hpp"

#include <algorithm>
#include <cmath>

#include "qent/error.hpp"

namespace qent {

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<std::size_t> dims,
                                 std::vector<std::string> labels, double tol)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty() || product_of(dims_) != matrix.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "subsystem dims do not multiply to " + std::to_string(matrix.dim()));
  }
  for (const std::size_t d : dims_)
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "zero subsystem dimension");
  if (!labels_.empty() && labels_.size() != dims_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "label count differs from subsystem count");
  }
  if (!matrix.all_finite()) throw Error(ErrorCode::InvalidDensity, "non-finite entries");
  if (!is_hermitian(matrix, tol)) throw Error(ErrorCode::InvalidDensity, "not Hermitian");
  matrix_ = hermitian_part(matrix);
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorCode::InvalidDensity, "trace " + std::to_string(tr.real()) + " is not 1");
  }
  const auto eigenvalues = hermitian_eigenvalues(matrix_, tol);
  if (!eigenvalues.empty() && eigenvalues.back() < -tol) {
    throw Error(ErrorCode::InvalidDensity,
                "negative eigenvalue " + std::to_string(eigenvalues.back()));
  }
}

DensityOperator DensityOperator::marginal(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  ComplexMatrix reduced = partial_trace(matrix_, dims_, kept);
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  for (const std::size_t k : kept) {
    dims.push_back(dims_[k]);
    if (!labels_.empty()) labels.push_back(labels_[k]);
  }
  // Partial traces of a valid state are valid up to rounding; relax to absorb it.
  return DensityOperator(std::move(reduced), std::move(dims), std::move(labels), 1e-9);
}

}  // namespace qent
