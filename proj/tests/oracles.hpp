#pragma once

// Test-only reference routines. They go through Eigen or explicit index loops and
// never call the qent routine they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qent/complex_matrix.hpp"

namespace qent::oracle {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

/// Descending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// f applied to eigenvalues above `cut`, zero elsewhere (cut = -inf applies f everywhere).
inline ComplexMatrix spectral_func(const ComplexMatrix& m, const std::function<double(double)>& f,
                                   double cut) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  Eigen::VectorXd values = solver.eigenvalues();
  for (Eigen::Index k = 0; k < values.size(); ++k) values(k) = values(k) > cut ? f(values(k)) : 0.0;
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return from_eigen(v * values.cast<std::complex<double>>().asDiagonal() * v.adjoint());
}

/// Reduced operator on A (keep_a) or B of a bipartite matrix via explicit index sums.
inline ComplexMatrix reduce_bipartite(const ComplexMatrix& m, std::size_t da, std::size_t db,
                                      bool keep_a) {
  ComplexMatrix out(keep_a ? da : db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t a2 = 0; a2 < da; ++a2)
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          const auto v = m(a * db + b, a2 * db + b2);
          if (keep_a && b == b2) out(a, a2) += v;
          if (!keep_a && a == a2) out(b, b2) += v;
        }
  return out;
}

/// exp2(-(P (1 (x) log2 rho_B) P - log2 rho)) compressed to the support P of rho,
/// computed entirely with Eigen.
inline ComplexMatrix conditional_amplitude(const ComplexMatrix& rho, std::size_t da,
                                           std::size_t db, double cut = 1e-10) {
  const Eigen::MatrixXcd rho_b = to_eigen(reduce_bipartite(rho, da, db, false));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(rho_b);
  Eigen::VectorXd lb = sb.eigenvalues();
  for (Eigen::Index k = 0; k < lb.size(); ++k) lb(k) = lb(k) > cut ? std::log2(lb(k)) : 0.0;
  const Eigen::MatrixXcd log_b =
      sb.eigenvectors() * lb.cast<std::complex<double>>().asDiagonal() * sb.eigenvectors().adjoint();
  const auto nb = static_cast<Eigen::Index>(db);
  Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(nb * static_cast<Eigen::Index>(da), nb * static_cast<Eigen::Index>(da));
  for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(da); ++a) lifted.block(a * nb, a * nb, nb, nb) = log_b;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sj(to_eigen(rho));
  Eigen::VectorXd lj = sj.eigenvalues();
  Eigen::VectorXd pj = sj.eigenvalues();
  for (Eigen::Index k = 0; k < lj.size(); ++k) {
    pj(k) = lj(k) > cut ? 1.0 : 0.0;
    lj(k) = lj(k) > cut ? std::log2(lj(k)) : 0.0;
  }
  const Eigen::MatrixXcd& vj = sj.eigenvectors();
  const Eigen::MatrixXcd p = vj * pj.cast<std::complex<double>>().asDiagonal() * vj.adjoint();
  const Eigen::MatrixXcd log_j = vj * lj.cast<std::complex<double>>().asDiagonal() * vj.adjoint();
  Eigen::MatrixXcd sigma = p * lifted * p - log_j;
  sigma = (0.5 * (sigma + sigma.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ss(sigma);
  Eigen::VectorXd e = ss.eigenvalues();
  for (Eigen::Index k = 0; k < e.size(); ++k) e(k) = std::exp2(-e(k));
  const Eigen::MatrixXcd full = ss.eigenvectors() * e.cast<std::complex<double>>().asDiagonal() *
                                ss.eigenvectors().adjoint();
  return from_eigen(p * full * p);
}

/// Coefficients c_0..c_n of det(lambda I - M) (c_n = 1) by Faddeev-LeVerrier.
inline std::vector<std::complex<double>> characteristic_polynomial(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  const Eigen::MatrixXcd a = to_eigen(m);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXcd mk = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = a * mk + c[static_cast<std::size_t>(n - k + 1)] * Eigen::MatrixXcd::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(a * mk).trace() / static_cast<double>(k);
  }
  return c;
}

/// Coefficients of prod_k (lambda - roots[k]), lowest degree first.
inline std::vector<double> polynomial_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (const double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const std::complex<double> z(normal(rng), normal(rng));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

/// Random probability vector with occasional exact zeros.
inline std::vector<double> random_distribution(std::size_t n, std::uint64_t seed, bool allow_zeros) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution drop(0.2);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& v : p) {
    v = (allow_zeros && drop(rng)) ? 0.0 : expo(rng);
    total += v;
  }
  if (total == 0.0) {
    p[0] = 1.0;
    total = 1.0;
  }
  for (auto& v : p) v /= total;
  return p;
}

inline double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (const double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace qent::oracle
