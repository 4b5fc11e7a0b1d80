#include "qent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qent/error.hpp"

namespace qent {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary J = D R, D = diag(1, e^{-i phi}) removing the phase of
// a(p,q) and R the real Jacobi rotation of the resulting symmetric 2x2 block.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq / mag);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

// Makes the first component of non-negligible magnitude real and positive. Some
// component always has |v_k| >= 1/sqrt(n), so the threshold 0.5/sqrt(n) is never empty.
void fix_phase(ComplexMatrix& v, std::size_t col) {
  const std::size_t n = v.dim();
  const double threshold = 0.5 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double mag = std::abs(v(k, col));
    if (mag > threshold) {
      const Complex phase = std::conj(v(k, col)) / mag;
      for (std::size_t r = 0; r < n; ++r) v(r, col) *= phase;
      v(k, col) = mag;
      return;
    }
  }
}

bool lexicographically_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const Complex x = v(k, a);
    const Complex y = v(k, b);
    if (x.real() != y.real()) return x.real() > y.real();
    if (x.imag() != y.imag()) return x.imag() > y.imag();
  }
  return false;
}

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

// Full-space offsets of every composite index over `subsystems` (last one fastest).
std::vector<std::size_t> offsets_of(std::span<const std::size_t> dims,
                                    std::span<const std::size_t> strides,
                                    std::span<const std::size_t> subsystems) {
  std::vector<std::size_t> offsets{0};
  for (const std::size_t s : subsystems) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[s]);
    for (const std::size_t base : offsets)
      for (std::size_t d = 0; d < dims[s]; ++d) next.push_back(base + d * strides[s]);
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> complement_of(std::size_t count, std::span<const std::size_t> subset) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < count; ++k)
    if (std::find(subset.begin(), subset.end(), k) == subset.end()) rest.push_back(k);
  return rest;
}

void validate_subsystems(std::span<const std::size_t> dims, std::span<const std::size_t> subset,
                         const char* what) {
  if (subset.empty()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is empty");
  std::vector<bool> seen(dims.size(), false);
  for (const std::size_t s : subset) {
    if (s >= dims.size() || seen[s]) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " has invalid subsystem index " + std::to_string(s));
    }
    seen[s] = true;
  }
}

void validate_dims(const ComplexMatrix& m, std::span<const std::size_t> dims) {
  if (dims.empty() || product_of(dims) != m.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subsystem dims do not multiply to " +
                                                  std::to_string(m.dim()));
  }
}

}  // namespace

ComplexMatrix Spectrum::reconstruct() const {
  const std::size_t n = vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = vectors(i, k) * values[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(vectors(j, k));
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim())) <= tol;
}

Spectrum hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.all_finite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  if (!is_hermitian(m, tol)) throw Error(ErrorCode::NotHermitian, "max|M - M^dagger| exceeds tol");

  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Sweep past the tol contract down to rounding level; quadratic convergence makes the
  // extra sweep or two cheap and the eigenvectors much sharper.
  const double floor = 1e-15 * std::max(a.frobenius_norm(), 1e-300);
  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < kMaxJacobiSweeps && off > floor; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    const double next = off_diagonal_norm(a);
    if (next >= off && next < tol) {
      off = next;
      break;
    }
    off = next;
  }
  if (off >= tol && off > floor) {
    throw Error(ErrorCode::NoConvergence,
                "off-diagonal norm " + std::to_string(off) + " after sweep budget");
  }

  for (std::size_t k = 0; k < n; ++k) fix_phase(v, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  for (std::size_t start = 0; start < n;) {
    std::size_t stop = start + 1;
    while (stop < n && a(order[stop - 1], order[stop - 1]).real() -
                               a(order[stop], order[stop]).real() <=
                           tol)
      ++stop;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(stop),
              [&](std::size_t x, std::size_t y) { return lexicographically_less(v, x, y); });
    start = stop;
  }

  Spectrum result{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  return hermitian_eig(m, tol).values;
}

ComplexMatrix hermitian_func(const ComplexMatrix& m, const std::function<double(double)>& f,
                             double tol) {
  Spectrum spec = hermitian_eig(m, tol);
  for (auto& value : spec.values) value = f(value);
  return spec.reconstruct();
}

ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f, double tol) {
  Spectrum spec = hermitian_eig(m, tol);
  for (auto& value : spec.values) {
    if (value < -tol) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  "eigenvalue " + std::to_string(value) + " below -tol");
    }
    value = value > tol ? f(value) : 0.0;
  }
  return spec.reconstruct();
}

ComplexMatrix support_projector(const ComplexMatrix& m, double tol) {
  Spectrum spec = hermitian_eig(m, tol);
  for (auto& value : spec.values) value = value > tol ? 1.0 : 0.0;
  return spec.reconstruct();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

std::size_t product_of(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  validate_dims(m, dims);
  validate_subsystems(dims, keep, "keep set");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  const auto traced = complement_of(dims.size(), kept);
  const auto strides = strides_of(dims);
  const auto kept_offsets = offsets_of(dims, strides, kept);
  const auto traced_offsets = offsets_of(dims, strides, traced);

  ComplexMatrix out(kept_offsets.size());
  for (std::size_t r = 0; r < kept_offsets.size(); ++r)
    for (std::size_t c = 0; c < kept_offsets.size(); ++c) {
      Complex sum = 0.0;
      for (const std::size_t t : traced_offsets) sum += m(kept_offsets[r] + t, kept_offsets[c] + t);
      out(r, c) = sum;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims) {
  if (dims.size() != 2) throw Error(ErrorCode::DimensionMismatch, "partial transpose is bipartite");
  validate_dims(m, dims);
  const std::size_t da = dims[0];
  const std::size_t db = dims[1];
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> dims,
                             std::span<const std::size_t> targets) {
  validate_subsystems(dims, targets, "target set");
  std::size_t target_dim = 1;
  for (const std::size_t t : targets) target_dim *= dims[t];
  if (target_dim != op.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator does not match target subsystems");
  }
  const auto strides = strides_of(dims);
  const auto rest = complement_of(dims.size(), targets);
  const auto target_offsets = offsets_of(dims, strides, targets);
  const auto rest_offsets = offsets_of(dims, strides, rest);

  ComplexMatrix out(product_of(dims));
  for (const std::size_t r : rest_offsets)
    for (std::size_t a = 0; a < op.dim(); ++a)
      for (std::size_t b = 0; b < op.dim(); ++b)
        out(target_offsets[a] + r, target_offsets[b] + r) = op(a, b);
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m + m.adjoint();
  out *= 0.5;
  return out;
}

}  // namespace qent
