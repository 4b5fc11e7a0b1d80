#include "qent/separability.hpp"

#include <algorithm>
#include <cmath>

#include "qent/entropy.hpp"
#include "qent/error.hpp"
#include "qent/states.hpp"

namespace qent {

SpectrumTestResult conditional_spectrum_test(const DensityOperator& rho_ab, double tol) {
  const auto ab = hermitian_eigenvalues(conditional_amplitude(rho_ab, Given::B).matrix);
  const auto ba = hermitian_eigenvalues(conditional_amplitude(rho_ab, Given::A).matrix);
  SpectrumTestResult r{ab.front(), ba.front(), false};
  r.pass = r.max_eigenvalue_ab <= 1.0 + tol && r.max_eigenvalue_ba <= 1.0 + tol;
  return r;
}

EntropySignResult entropy_sign_test(const DensityOperator& rho_ab, double eps) {
  EntropySignResult r{conditional_entropy(rho_ab, Given::B), conditional_entropy(rho_ab, Given::A),
                      false, false};
  r.pass_ab = r.conditional_entropy_ab >= -eps;
  r.pass_ba = r.conditional_entropy_ba >= -eps;
  return r;
}

PptResult peres_ppt_test(const DensityOperator& rho_ab, double tol) {
  if (rho_ab.subsystem_count() != 2) throw Error(ErrorCode::DimensionMismatch, "state is not bipartite");
  const auto eigenvalues = hermitian_eigenvalues(partial_transpose(rho_ab.matrix(), rho_ab.dims()));
  return {eigenvalues.back(), eigenvalues.back() >= -tol};
}

SeparabilityVerdict assess_separability(const DensityOperator& rho_ab, double tol) {
  const auto spectrum = conditional_spectrum_test(rho_ab, tol);
  const auto entropy = entropy_sign_test(rho_ab, tol);
  const auto ppt = peres_ppt_test(rho_ab, tol);
  SeparabilityVerdict v;
  v.max_conditional_eigenvalue_ab = spectrum.max_eigenvalue_ab;
  v.max_conditional_eigenvalue_ba = spectrum.max_eigenvalue_ba;
  v.conditional_entropy_ab = entropy.conditional_entropy_ab;
  v.conditional_entropy_ba = entropy.conditional_entropy_ba;
  v.min_ppt_eigenvalue = ppt.min_eigenvalue;
  v.spectrum_test_pass = spectrum.pass;
  v.entropy_test_pass = entropy.pass();
  v.ppt_pass = ppt.pass;
  v.tol = tol;
  return v;
}

std::array<double, 4> werner_conditional_spectrum(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "Werner singlet fraction " + std::to_string(x));
  }
  const double low = (1.0 - x) / 2.0;
  return {(1.0 + 3.0 * x) / 2.0, low, low, low};
}

std::vector<WernerScanRow> werner_scan(std::span<const double> grid, double tol) {
  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  std::vector<WernerScanRow> rows;
  rows.reserve(xs.size());
  for (const double x : xs) {
    const DensityOperator rho = werner_state(x);
    const auto eigenvalues = hermitian_eigenvalues(conditional_amplitude(rho).matrix);
    const auto spectrum = conditional_spectrum_test(rho, tol);
    const auto entropy = entropy_sign_test(rho, tol);
    const auto ppt = peres_ppt_test(rho, tol);
    WernerScanRow row{};
    row.x = x;
    std::copy_n(eigenvalues.begin(), 4, row.conditional_spectrum.begin());
    row.conditional_entropy = entropy.conditional_entropy_ab;
    row.min_ppt_eigenvalue = ppt.min_eigenvalue;
    row.spectrum_test_pass = spectrum.pass;
    row.entropy_test_pass = entropy.pass();
    row.ppt_pass = ppt.pass;
    rows.push_back(row);
  }
  return rows;
}

DensityOperator bell_mixture(std::span<const double> weights) {
  if (weights.size() != 4) throw Error(ErrorCode::InvalidWeights, "need four Bell weights");
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::InvalidWeights, "weight outside [0,1]");
    total += w;
  }
  if (std::abs(total - 1.0) > kDefaultTol) throw Error(ErrorCode::InvalidWeights, "weights do not sum to 1");
  ComplexMatrix rho(4);
  for (int i = 0; i < 4; ++i) rho += bell_state(i).matrix() * weights[static_cast<std::size_t>(i)];
  return DensityOperator(std::move(rho), {2, 2});
}

bool bell_mixture_agreement_check(std::span<const double> weights, double tol) {
  const DensityOperator rho = bell_mixture(weights);
  return conditional_spectrum_test(rho, tol).pass == peres_ppt_test(rho, tol).pass;
}

}  // namespace qent
