#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qent/complex_matrix.hpp"
#include "qent/linalg.hpp"

namespace qent {

/// A validated density operator on a tensor product of subsystems.
///
/// Basis convention: computational basis |a b ...>, the first subsystem being the
/// slowest (most significant) index. The constructor checks every invariant
/// (Hermitian, unit trace, eigenvalues >= -tol, prod(dims) == matrix.dim()) and throws
/// InvalidDensity or DimensionMismatch; the stored matrix is the exact Hermitian part
/// of the input.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, std::vector<std::size_t> dims,
                  std::vector<std::string> labels = {}, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }

  /// Reduced state on `keep` (original order), labels carried along.
  DensityOperator marginal(std::span<const std::size_t> keep) const;
  DensityOperator marginal(std::initializer_list<std::size_t> keep) const {
    return marginal(std::span<const std::size_t>(keep.begin(), keep.size()));
  }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
};

}  // namespace qent
