#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qent/complex_matrix.hpp"
#include "qent/density_operator.hpp"
#include "qent/linalg.hpp"

namespace qent {

// All entropies are in bits.

/// Which party a bipartite conditional quantity conditions on: OnB gives the A|B
/// direction, OnA gives B|A.
enum class Given { B, A };

enum class AmplitudeKind { Conditional, Mutual };

/// Conditional or mutual amplitude operator on the joint space. Positive on the
/// support of rho_AB and zero on its kernel; eigenvalues may exceed 1.
struct AmplitudeOperator {
  ComplexMatrix matrix;
  AmplitudeKind kind;
  ComplexMatrix support_projector;
};

/// Entropy Venn diagram of a bipartite state.
struct VennDiagram {
  double s_a_given_b;
  double s_mutual;
  double s_b_given_a;
  double s_a;
  double s_b;
  double s_ab;

  /// Largest violation of the three bookkeeping identities
  /// S(A|B) + S(A:B) = S(A), S(B|A) + S(A:B) = S(B), sum of the three = S(AB).
  double consistency_residual() const;
};

/// -sum p log2 p, 0 log 0 = 0. Throws NotAProbabilityVector.
double shannon_entropy(std::span<const double> p, double tol = kDefaultTol);

/// -sum lambda log2 lambda over the positive part of a spectrum.
double entropy_of_spectrum(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityOperator& rho);
double von_neumann_entropy(const ComplexMatrix& rho);

/// S of the reduced state on `keep`.
double subsystem_entropy(const DensityOperator& rho, std::span<const std::size_t> keep);

/// 1_A (x) log2 rho_B - log2 rho_AB compressed onto the support of rho_AB (with
/// `given` = A the roles swap: log2 rho_A (x) 1_B - log2 rho_AB).
ComplexMatrix sigma_operator(const DensityOperator& rho_ab, Given given = Given::B,
                             double tol = kDefaultTol);

/// exp2(-sigma) on the support of rho_AB; the kernel is mapped to 0.
AmplitudeOperator conditional_amplitude(const DensityOperator& rho_ab, Given given = Given::B,
                                        double tol = kDefaultTol);

/// [rho_AB^{1/n} (1_A (x) rho_B)^{-1/n}]^n for full-rank rho_AB.
/// Throws RankDeficient if some eigenvalue of rho_AB is <= tol, ParameterOutOfRange
/// for n == 0.
ComplexMatrix conditional_amplitude_trotter(const DensityOperator& rho_ab, std::size_t n,
                                            double tol = kDefaultTol);

/// S(AB) - S(B) (or S(AB) - S(A) for Given::A).
double conditional_entropy(const DensityOperator& rho_ab, Given given = Given::B);

/// -Tr[rho_AB log2 rho_{A|B}] computed from the amplitude operator itself.
double conditional_entropy_operator_trace(const DensityOperator& rho_ab, Given given = Given::B,
                                          double tol = kDefaultTol);

/// exp2(log2(rho_A (x) rho_B) - log2 rho_AB) on the support of rho_AB.
AmplitudeOperator mutual_amplitude(const DensityOperator& rho_ab, double tol = kDefaultTol);

/// S(A) + S(B) - S(AB).
double mutual_entropy(const DensityOperator& rho_ab);

/// -Tr[rho_AB log2 rho_{A:B}].
double mutual_entropy_operator_trace(const DensityOperator& rho_ab, double tol = kDefaultTol);

VennDiagram venn(const DensityOperator& rho_ab);

/// Groups of subsystems; any group may be empty only for `c`.
struct Partition {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;
};

/// S(AC) + S(BC) - S(ABC) - S(C). Throws BadPartition when groups overlap, reference
/// missing subsystems, or a or b is empty.
double conditional_mutual_entropy(const DensityOperator& rho, const Partition& partition);

/// S(target, given) - S(given) over arbitrary subsystem groups; `given` may be empty.
double conditional_entropy_of(const DensityOperator& rho, std::span<const std::size_t> target,
                              std::span<const std::size_t> given);

/// S(a) + S(b) - S(a, b) over arbitrary disjoint subsystem groups.
double mutual_entropy_of(const DensityOperator& rho, std::span<const std::size_t> a,
                         std::span<const std::size_t> b);

}  // namespace qent
