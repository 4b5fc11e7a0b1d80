#include "qent/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "qent/error.hpp"

namespace qent {

namespace {

double log2_positive(double x) { return std::log2(x); }

void require_bipartite(const DensityOperator& rho) {
  if (rho.subsystem_count() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a bipartite state, got " + std::to_string(rho.subsystem_count()) +
                    " subsystems");
  }
}

// -Tr[rho log2 X] for a positive operator X supported on the support of rho.
double operator_trace_entropy(const ComplexMatrix& rho, const ComplexMatrix& amplitude,
                              double tol) {
  const Spectrum spec = hermitian_eig(amplitude, tol);
  const std::size_t n = rho.dim();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = spec.values[k];
    if (lambda <= tol * tol) continue;
    Complex weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * spec.vectors(j, k);
      weight += std::conj(spec.vectors(i, k)) * row;
    }
    total -= weight.real() * std::log2(lambda);
  }
  return total;
}

struct SupportSplit {
  ComplexMatrix projector;
  ComplexMatrix log2_on_support;
};

SupportSplit split_support(const ComplexMatrix& rho, double tol) {
  const Spectrum spec = hermitian_eig(rho, tol);
  Spectrum proj = spec;
  Spectrum logs = spec;
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    const double lambda = spec.values[k];
    if (lambda < -tol) {
      throw Error(ErrorCode::NegativeEigenvalue, "eigenvalue " + std::to_string(lambda));
    }
    proj.values[k] = lambda > tol ? 1.0 : 0.0;
    logs.values[k] = lambda > tol ? std::log2(lambda) : 0.0;
  }
  return {proj.reconstruct(), logs.reconstruct()};
}

ComplexMatrix exp2_on_support(const ComplexMatrix& exponent, const ComplexMatrix& projector,
                              double tol) {
  const ComplexMatrix full = hermitian_func(exponent, [](double v) { return std::exp2(v); }, tol);
  return hermitian_part(projector * full * projector);
}

void check_groups(const DensityOperator& rho, std::initializer_list<std::span<const std::size_t>> groups) {
  std::vector<bool> used(rho.subsystem_count(), false);
  for (const auto group : groups) {
    for (const std::size_t s : group) {
      if (s >= rho.subsystem_count()) {
        throw Error(ErrorCode::BadPartition, "subsystem " + std::to_string(s) + " out of range");
      }
      if (used[s]) throw Error(ErrorCode::BadPartition, "subsystem groups overlap");
      used[s] = true;
    }
  }
}

std::vector<std::size_t> join(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::vector<std::size_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double VennDiagram::consistency_residual() const {
  return std::max({std::abs(s_a_given_b + s_mutual - s_a), std::abs(s_b_given_a + s_mutual - s_b),
                   std::abs(s_a_given_b + s_mutual + s_b_given_a - s_ab)});
}

double shannon_entropy(std::span<const double> p, double tol) {
  double total = 0.0;
  for (const double v : p) {
    if (!(v >= -tol) || !std::isfinite(v)) {
      throw Error(ErrorCode::NotAProbabilityVector, "negative or non-finite entry");
    }
    total += v;
  }
  if (p.empty() || std::abs(total - 1.0) > tol) {
    throw Error(ErrorCode::NotAProbabilityVector, "entries do not sum to 1");
  }
  return entropy_of_spectrum(p);
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (const double v : eigenvalues)
    if (v > 0.0) h -= v * log2_positive(v);
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityOperator& rho) { return von_neumann_entropy(rho.matrix()); }

double subsystem_entropy(const DensityOperator& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) return 0.0;
  if (keep.size() == rho.subsystem_count()) return von_neumann_entropy(rho);
  return von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), keep));
}

ComplexMatrix sigma_operator(const DensityOperator& rho_ab, Given given, double tol) {
  require_bipartite(rho_ab);
  const auto joint = split_support(rho_ab.matrix(), tol);
  const std::size_t da = rho_ab.dims()[0];
  const std::size_t db = rho_ab.dims()[1];
  ComplexMatrix marginal_log;
  if (given == Given::B) {
    const ComplexMatrix rho_b = rho_ab.marginal({1}).matrix();
    marginal_log = kron(ComplexMatrix::identity(da), matrix_func_on_support(rho_b, log2_positive, tol));
  } else {
    const ComplexMatrix rho_a = rho_ab.marginal({0}).matrix();
    marginal_log = kron(matrix_func_on_support(rho_a, log2_positive, tol), ComplexMatrix::identity(db));
  }
  return hermitian_part(joint.projector * marginal_log * joint.projector - joint.log2_on_support);
}

AmplitudeOperator conditional_amplitude(const DensityOperator& rho_ab, Given given, double tol) {
  ComplexMatrix sigma = sigma_operator(rho_ab, given, tol);
  sigma *= -1.0;
  ComplexMatrix projector = support_projector(rho_ab.matrix(), tol);
  ComplexMatrix amplitude = exp2_on_support(sigma, projector, tol);
  return {std::move(amplitude), AmplitudeKind::Conditional, std::move(projector)};
}

ComplexMatrix conditional_amplitude_trotter(const DensityOperator& rho_ab, std::size_t n,
                                            double tol) {
  require_bipartite(rho_ab);
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "Trotter order must be positive");
  const auto eigenvalues = hermitian_eigenvalues(rho_ab.matrix(), tol);
  if (eigenvalues.back() <= tol) {
    throw Error(ErrorCode::RankDeficient, "smallest eigenvalue " + std::to_string(eigenvalues.back()));
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  const ComplexMatrix joint_root =
      hermitian_func(rho_ab.matrix(), [inv_n](double v) { return std::pow(v, inv_n); }, tol);
  const ComplexMatrix rho_b = rho_ab.marginal({1}).matrix();
  const ComplexMatrix marginal_root = kron(
      ComplexMatrix::identity(rho_ab.dims()[0]),
      hermitian_func(rho_b, [inv_n](double v) { return std::pow(v, -inv_n); }, tol));

  ComplexMatrix base = joint_root * marginal_root;
  ComplexMatrix result = ComplexMatrix::identity(base.dim());
  for (std::size_t e = n; e > 0; e >>= 1) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

double conditional_entropy(const DensityOperator& rho_ab, Given given) {
  require_bipartite(rho_ab);
  const std::size_t conditioning = given == Given::B ? 1 : 0;
  const std::size_t keep[] = {conditioning};
  return von_neumann_entropy(rho_ab) - subsystem_entropy(rho_ab, keep);
}

double conditional_entropy_operator_trace(const DensityOperator& rho_ab, Given given, double tol) {
  const auto amplitude = conditional_amplitude(rho_ab, given, tol);
  return operator_trace_entropy(rho_ab.matrix(), amplitude.matrix, tol);
}

AmplitudeOperator mutual_amplitude(const DensityOperator& rho_ab, double tol) {
  require_bipartite(rho_ab);
  const auto joint = split_support(rho_ab.matrix(), tol);
  const ComplexMatrix product = kron(rho_ab.marginal({0}).matrix(), rho_ab.marginal({1}).matrix());
  const ComplexMatrix product_log = matrix_func_on_support(product, log2_positive, tol);
  const ComplexMatrix exponent =
      hermitian_part(joint.projector * product_log * joint.projector - joint.log2_on_support);
  ComplexMatrix amplitude = exp2_on_support(exponent, joint.projector, tol);
  return {std::move(amplitude), AmplitudeKind::Mutual, joint.projector};
}

double mutual_entropy(const DensityOperator& rho_ab) {
  require_bipartite(rho_ab);
  const std::size_t a[] = {0};
  const std::size_t b[] = {1};
  return subsystem_entropy(rho_ab, a) + subsystem_entropy(rho_ab, b) - von_neumann_entropy(rho_ab);
}

double mutual_entropy_operator_trace(const DensityOperator& rho_ab, double tol) {
  const auto amplitude = mutual_amplitude(rho_ab, tol);
  return operator_trace_entropy(rho_ab.matrix(), amplitude.matrix, tol);
}

VennDiagram venn(const DensityOperator& rho_ab) {
  require_bipartite(rho_ab);
  const std::size_t a[] = {0};
  const std::size_t b[] = {1};
  VennDiagram d{};
  d.s_a = subsystem_entropy(rho_ab, a);
  d.s_b = subsystem_entropy(rho_ab, b);
  d.s_ab = von_neumann_entropy(rho_ab);
  d.s_a_given_b = d.s_ab - d.s_b;
  d.s_b_given_a = d.s_ab - d.s_a;
  d.s_mutual = d.s_a + d.s_b - d.s_ab;
  return d;
}

double conditional_mutual_entropy(const DensityOperator& rho, const Partition& partition) {
  if (partition.a.empty() || partition.b.empty()) {
    throw Error(ErrorCode::BadPartition, "groups A and B must be nonempty");
  }
  check_groups(rho, {partition.a, partition.b, partition.c});
  const auto ac = join(partition.a, partition.c);
  const auto bc = join(partition.b, partition.c);
  const auto abc = join(join(partition.a, partition.b), partition.c);
  return subsystem_entropy(rho, ac) + subsystem_entropy(rho, bc) - subsystem_entropy(rho, abc) -
         subsystem_entropy(rho, partition.c);
}

double conditional_entropy_of(const DensityOperator& rho, std::span<const std::size_t> target,
                              std::span<const std::size_t> given) {
  if (target.empty()) throw Error(ErrorCode::BadPartition, "empty target group");
  check_groups(rho, {target, given});
  return subsystem_entropy(rho, join(target, given)) - subsystem_entropy(rho, given);
}

double mutual_entropy_of(const DensityOperator& rho, std::span<const std::size_t> a,
                         std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::BadPartition, "empty group");
  check_groups(rho, {a, b});
  return subsystem_entropy(rho, a) + subsystem_entropy(rho, b) - subsystem_entropy(rho, join(a, b));
}

}  // namespace qent
