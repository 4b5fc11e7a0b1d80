#include "qent/states.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "qent/error.hpp"

namespace qent {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  // Stored in a square buffer of size max(rows, cols); callers read the leading block.
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(std::max(rows, cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

std::vector<double> dirichlet_weights(std::size_t count, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(count);
  for (auto& v : w) v = expo(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= total;
  return w;
}

}  // namespace

DensityOperator pure_state(std::span<const Complex> amplitudes, std::vector<std::size_t> dims) {
  if (amplitudes.size() != product_of(dims)) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude count differs from product of dims");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 == 0.0 || !std::isfinite(norm2)) throw Error(ErrorCode::ZeroVector, "zero-norm state vector");
  ComplexMatrix rho = ComplexMatrix::outer(amplitudes);
  rho *= 1.0 / norm2;
  return DensityOperator(std::move(rho), std::move(dims));
}

std::vector<Complex> bell_vector(int index) {
  const double s = kInvSqrt2;
  switch (index) {
    case 0: return {s, 0.0, 0.0, s};
    case 1: return {s, 0.0, 0.0, -s};
    case 2: return {0.0, s, s, 0.0};
    case 3: return {0.0, s, -s, 0.0};
    default: throw Error(ErrorCode::IndexOutOfRange, "Bell index " + std::to_string(index));
  }
}

DensityOperator bell_state(int index) { return pure_state(bell_vector(index), {2, 2}); }

DensityOperator bell_state(Bell which) { return bell_state(static_cast<int>(which)); }

DensityOperator werner_state(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "Werner singlet fraction " + std::to_string(x));
  }
  ComplexMatrix rho = bell_state(Bell::PsiMinus).matrix() * x;
  rho += ComplexMatrix::identity(4) * ((1.0 - x) / 4.0);
  return DensityOperator(std::move(rho), {2, 2});
}

DensityOperator classically_correlated_pair() {
  const std::vector<double> diag{0.0, 0.5, 0.5, 0.0};
  return DensityOperator(ComplexMatrix::diagonal(diag), {2, 2});
}

DensityOperator independent_pair() {
  return DensityOperator(ComplexMatrix::identity(4) * 0.25, {2, 2});
}

DensityOperator from_separable_spec(const SeparableMixtureSpec& spec) {
  if (spec.weights.empty() || spec.weights.size() != spec.factors.size()) {
    throw Error(ErrorCode::InvalidWeights, "need one weight per factor pair");
  }
  double total = 0.0;
  for (const double w : spec.weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorCode::InvalidWeights, "weight outside [0,1]");
    total += w;
  }
  if (std::abs(total - 1.0) > kDefaultTol) throw Error(ErrorCode::InvalidWeights, "weights do not sum to 1");

  const std::size_t da = spec.factors.front().first.dim();
  const std::size_t db = spec.factors.front().second.dim();
  ComplexMatrix rho(da * db);
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    const auto& [rho_a, rho_b] = spec.factors[i];
    if (rho_a.dim() != da || rho_b.dim() != db) {
      throw Error(ErrorCode::DimensionMismatch, "factor pairs must share dims");
    }
    rho += kron(rho_a.matrix(), rho_b.matrix()) * spec.weights[i];
  }
  return DensityOperator(std::move(rho), {da, db});
}

DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "rank " + std::to_string(rank) + " for dim " + std::to_string(dim));
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = gaussian_matrix(dim, rank, rng);
  ComplexMatrix rho(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < rank; ++k) sum += g(i, k) * std::conj(g(j, k));
      rho(i, j) = sum;
    }
  rho *= 1.0 / rho.trace().real();
  return DensityOperator(std::move(rho), {dim});
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexMatrix q = gaussian_matrix(dim, dim, rng);
  // Modified Gram-Schmidt on columns; normalising to a positive R diagonal fixes phases.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < dim; ++i) q(i, k) -= overlap * q(i, j);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(q(i, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < dim; ++i) q(i, k) *= inv;
  }
  return q;
}

SeparableMixtureSpec random_separable_spec(std::size_t dim_a, std::size_t dim_b,
                                           std::size_t terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SeparableMixtureSpec spec;
  spec.weights = dirichlet_weights(terms, rng);
  std::uniform_int_distribution<std::size_t> rank_a(1, dim_a);
  std::uniform_int_distribution<std::size_t> rank_b(1, dim_b);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t ra = rank_a(rng);
    const std::size_t rb = rank_b(rng);
    auto rho_a = random_density(dim_a, ra, rng());
    auto rho_b = random_density(dim_b, rb, rng());
    spec.factors.emplace_back(std::move(rho_a), std::move(rho_b));
  }
  return spec;
}

DensityOperator apply_local_unitary(const DensityOperator& rho, const ComplexMatrix& u_a,
                                    const ComplexMatrix& u_b) {
  if (rho.subsystem_count() != 2 || rho.dims()[0] != u_a.dim() || rho.dims()[1] != u_b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "local unitaries do not match bipartite dims");
  }
  if (!is_unitary(u_a) || !is_unitary(u_b)) throw Error(ErrorCode::NotUnitary, "local operator is not unitary");
  const ComplexMatrix u = kron(u_a, u_b);
  return DensityOperator(u * rho.matrix() * u.adjoint(),
                         std::vector<std::size_t>(rho.dims().begin(), rho.dims().end()),
                         rho.labels());
}

DensityOperator swap_parties(const DensityOperator& rho) {
  if (rho.subsystem_count() != 2) throw Error(ErrorCode::DimensionMismatch, "state is not bipartite");
  const std::size_t da = rho.dims()[0];
  const std::size_t db = rho.dims()[1];
  ComplexMatrix out(rho.dim());
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2)
          out(b * da + a, b2 * da + a2) = rho.matrix()(a * db + b, a2 * db + b2);
  std::vector<std::string> labels;
  if (!rho.labels().empty()) labels = {rho.labels()[1], rho.labels()[0]};
  return DensityOperator(std::move(out), {db, da}, std::move(labels));
}

DensityOperator diagonal_state(std::span<const double> joint, std::size_t dim_a,
                               std::size_t dim_b) {
  if (joint.size() != dim_a * dim_b) {
    throw Error(ErrorCode::NotAProbabilityVector, "joint distribution has wrong length");
  }
  double total = 0.0;
  for (const double p : joint) {
    if (!(p >= 0.0)) throw Error(ErrorCode::NotAProbabilityVector, "negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kDefaultTol) {
    throw Error(ErrorCode::NotAProbabilityVector, "probabilities do not sum to 1");
  }
  return DensityOperator(ComplexMatrix::diagonal(joint), {dim_a, dim_b});
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace qent
