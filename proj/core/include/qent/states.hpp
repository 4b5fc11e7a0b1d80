#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qent/density_operator.hpp"

namespace qent {

/// Bell basis order used everywhere: Phi+, Phi-, Psi+, Psi- (the singlet is index 3).
enum class Bell : int { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

/// sum_i w_i rho_A^(i) (x) rho_B^(i).
struct SeparableMixtureSpec {
  std::vector<double> weights;
  std::vector<std::pair<DensityOperator, DensityOperator>> factors;
};

/// |psi><psi| / <psi|psi>. Throws ZeroVector, DimensionMismatch.
DensityOperator pure_state(std::span<const Complex> amplitudes, std::vector<std::size_t> dims);

/// Throws IndexOutOfRange for index outside 0..3.
DensityOperator bell_state(int index);
DensityOperator bell_state(Bell which);

/// Amplitudes of the Bell vector, |00>,|01>,|10>,|11> order.
std::vector<Complex> bell_vector(int index);

/// x * singlet + (1 - x)/4 * identity(4). Throws ParameterOutOfRange unless 0 <= x <= 1.
DensityOperator werner_state(double x);

/// 50/50 mixture of |01> and |10>.
DensityOperator classically_correlated_pair();

/// Two independent maximally mixed qubits, (I/2) (x) (I/2).
DensityOperator independent_pair();

/// Throws InvalidWeights or DimensionMismatch.
DensityOperator from_separable_spec(const SeparableMixtureSpec& spec);

/// Ginibre-style random state: G G^dagger / Tr, G a dim x rank complex Gaussian matrix.
/// Deterministic per seed. Throws ParameterOutOfRange unless 1 <= rank <= dim.
DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Haar-like random unitary: Gram-Schmidt on a seeded Gaussian matrix, column phases
/// fixed so the diagonal of R is positive.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Random separable mixture with `terms` product terms, random factor ranks and
/// Dirichlet weights.
SeparableMixtureSpec random_separable_spec(std::size_t dim_a, std::size_t dim_b,
                                           std::size_t terms, std::uint64_t seed);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger. Throws NotUnitary, DimensionMismatch.
DensityOperator apply_local_unitary(const DensityOperator& rho, const ComplexMatrix& u_a,
                                    const ComplexMatrix& u_b);

/// Exchanges the two parties of a bipartite state.
DensityOperator swap_parties(const DensityOperator& rho);

/// Diagonal bipartite state from a joint distribution p(a, b), p given row-major
/// (index a * dim_b + b). Throws NotAProbabilityVector.
DensityOperator diagonal_state(std::span<const double> joint, std::size_t dim_a,
                               std::size_t dim_b);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace qent
