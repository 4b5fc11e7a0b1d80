#pragma once

#include <array>
#include <span>
#include <vector>

#include "qent/density_operator.hpp"

namespace qent {

/// Eigenvalue comparisons in verdicts; looser than the linear-algebra tolerance so that
/// boundary states (Werner x = 1/3) are decided by the non-strict inequality.
inline constexpr double kVerdictTol = 1e-8;

struct SeparabilityVerdict {
  double max_conditional_eigenvalue_ab = 0.0;
  double max_conditional_eigenvalue_ba = 0.0;
  double conditional_entropy_ab = 0.0;
  double conditional_entropy_ba = 0.0;
  double min_ppt_eigenvalue = 0.0;
  bool spectrum_test_pass = false;
  bool entropy_test_pass = false;
  bool ppt_pass = false;
  double tol = kVerdictTol;

  /// PPT detects entanglement that the conditional spectrum misses.
  bool ppt_stronger() const { return spectrum_test_pass && !ppt_pass; }
};

struct SpectrumTestResult {
  double max_eigenvalue_ab;
  double max_eigenvalue_ba;
  bool pass;
};

struct EntropySignResult {
  double conditional_entropy_ab;
  double conditional_entropy_ba;
  bool pass_ab;
  bool pass_ba;
  bool pass() const { return pass_ab && pass_ba; }
};

struct PptResult {
  double min_eigenvalue;
  bool pass;
};

/// Passes iff every eigenvalue of rho_{A|B} and rho_{B|A} is <= 1 + tol.
SpectrumTestResult conditional_spectrum_test(const DensityOperator& rho_ab, double tol = kVerdictTol);

/// Passes iff S(A|B) >= -eps and S(B|A) >= -eps.
EntropySignResult entropy_sign_test(const DensityOperator& rho_ab, double eps = kVerdictTol);

/// Passes iff the partial transpose has no eigenvalue below -tol.
PptResult peres_ppt_test(const DensityOperator& rho_ab, double tol = kVerdictTol);

/// All three tests in one verdict.
SeparabilityVerdict assess_separability(const DensityOperator& rho_ab, double tol = kVerdictTol);

/// Closed-form conditional spectrum of the Werner state, descending:
/// {(1+3x)/2, (1-x)/2, (1-x)/2, (1-x)/2}. Throws ParameterOutOfRange.
std::array<double, 4> werner_conditional_spectrum(double x);

struct WernerScanRow {
  double x;
  std::array<double, 4> conditional_spectrum;  // numerical, descending
  double conditional_entropy;
  double min_ppt_eigenvalue;
  bool spectrum_test_pass;
  bool entropy_test_pass;
  bool ppt_pass;
};

/// One row per grid point, ordered by x. Throws ParameterOutOfRange.
std::vector<WernerScanRow> werner_scan(std::span<const double> grid, double tol = kVerdictTol);

/// sum_i w_i bell_state(i). Throws InvalidWeights.
DensityOperator bell_mixture(std::span<const double> weights);

/// True iff the conditional spectrum test and PPT reach the same verdict on the Bell mixture.
bool bell_mixture_agreement_check(std::span<const double> weights, double tol = kVerdictTol);

}  // namespace qent
