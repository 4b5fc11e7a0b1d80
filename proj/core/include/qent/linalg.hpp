#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qent/complex_matrix.hpp"

namespace qent {

/// Tolerance for rank, support and Hermiticity decisions.
inline constexpr double kDefaultTol = 1e-10;

/// Sweep budget of the Jacobi eigensolver.
inline constexpr int kMaxJacobiSweeps = 100;

/// Eigenpairs of a Hermitian matrix. Eigenvalues are sorted descending; column k of
/// `vectors` pairs with `values[k]`. Near-equal eigenvalues (within the solver
/// tolerance) are ordered lexicographically by their phase-fixed eigenvectors so that
/// identical inputs give bit-identical spectra.
struct Spectrum {
  std::vector<double> values;
  ComplexMatrix vectors;

  /// V diag(values) V^dagger.
  ComplexMatrix reconstruct() const;
};

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

/// Cyclic complex Jacobi diagonalisation.
///
/// Throws NotHermitian when max|M - M^dagger| > tol, NoConvergence when the
/// off-diagonal Frobenius norm is still >= tol after kMaxJacobiSweeps sweeps.
Spectrum hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// Eigenvalues only (descending).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);

/// V diag(f(lambda)) V^dagger over every eigenvalue; M may be indefinite.
ComplexMatrix hermitian_func(const ComplexMatrix& m, const std::function<double(double)>& f,
                             double tol = kDefaultTol);

/// V diag(f(lambda) if lambda > tol else 0) V^dagger for positive semi-definite M.
/// Kernel eigenvalues are never passed to f. Throws NegativeEigenvalue if some
/// lambda < -tol.
ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f,
                                     double tol = kDefaultTol);

/// Orthogonal projector onto the eigenvectors with lambda > tol.
ComplexMatrix support_projector(const ComplexMatrix& m, double tol = kDefaultTol);

/// Kronecker product: entry (i*dB + k, j*dB + l) = A(i,j) B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::size_t product_of(std::span<const std::size_t> dims);

/// Reduced operator on the subsystems in `keep` (kept in their original order).
/// Throws DimensionMismatch if prod(dims) != M.dim() or `keep` is empty, out of range
/// or repeats an index.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Transpose of the second factor of a bipartite operator; dims = {dA, dB}.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims);

/// Lifts `op`, acting on `targets` (op index digits follow the order of `targets`),
/// to the full space; identity on the remaining subsystems.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> dims,
                             std::span<const std::size_t> targets);

/// (M + M^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace qent
