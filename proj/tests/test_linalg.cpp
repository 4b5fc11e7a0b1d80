#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qent/error.hpp"
#include "qent/linalg.hpp"
#include "qent/states.hpp"

using namespace qent;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  const std::vector<double> v(values);
  return ComplexMatrix::diagonal(v);
}

}  // namespace

TEST_CASE("hermitian_eig on textbook matrices") {
  const auto id = hermitian_eig(ComplexMatrix::identity(2));
  CHECK(id.values == std::vector<double>{1.0, 1.0});

  const auto px = hermitian_eig({{0.0, 1.0}, {1.0, 0.0}});
  REQUIRE(px.values.size() == 2);
  CHECK(px.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(px.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(max_abs_diff(px.reconstruct(), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) < 1e-14);
}

TEST_CASE("Werner(0.5) spectrum agrees with the characteristic polynomial") {
  const ComplexMatrix rho = werner_state(0.5).matrix();
  const auto values = hermitian_eigenvalues(rho);
  const std::vector<double> expected{0.625, 0.125, 0.125, 0.125};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(values[k] - expected[k]) < 1e-12);

  const auto charpoly = oracle::characteristic_polynomial(rho);
  const auto from_roots = oracle::polynomial_from_roots(expected);
  for (std::size_t k = 0; k < charpoly.size(); ++k) CHECK(std::abs(charpoly[k] - from_roots[k]) < 1e-12);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  const ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eig(m), Error);
  try {
    hermitian_eig(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on random Hermitian matrices") {
  const double tol = kDefaultTol;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t dim = 2 + seed % 15;
    const ComplexMatrix m = oracle::random_hermitian(dim, seed);
    const Spectrum spec = hermitian_eig(m, tol);
    CHECK(max_abs_diff(spec.reconstruct(), m) <= 100.0 * tol * static_cast<double>(dim));
    CHECK(max_abs_diff(spec.vectors.adjoint() * spec.vectors, ComplexMatrix::identity(dim)) <=
          100.0 * tol * static_cast<double>(dim));
    CHECK(std::is_sorted(spec.values.rbegin(), spec.values.rend()));
    const auto reference = oracle::eigenvalues(m);
    for (std::size_t k = 0; k < dim; ++k) CHECK(std::abs(spec.values[k] - reference[k]) < 1e-10);
  }
}

TEST_CASE("hermitian_eig is bit-for-bit reproducible and orders degenerate eigenvectors") {
  const ComplexMatrix m = werner_state(0.3).matrix();
  const Spectrum a = hermitian_eig(m);
  const Spectrum b = hermitian_eig(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);

  const Spectrum id = hermitian_eig(ComplexMatrix::identity(3));
  CHECK(id.vectors == ComplexMatrix::identity(3));
}

TEST_CASE("matrix_func_on_support") {
  const auto log2f = [](double v) { return std::log2(v); };
  CHECK(matrix_func_on_support(ComplexMatrix::identity(3), log2f).max_abs() < 1e-15);
  CHECK(max_abs_diff(matrix_func_on_support(diag({0.5, 0.5}), log2f), diag({-1.0, -1.0})) < 1e-15);

  // Rank-one Bell projector: the support eigenvalue is 1 and the kernel is never logged.
  int calls = 0;
  const auto counting_log = [&](double v) {
    ++calls;
    return std::log2(v);
  };
  const ComplexMatrix out = matrix_func_on_support(bell_state(0).matrix(), counting_log);
  CHECK(out.max_abs() < 1e-14);
  CHECK(calls == 1);

  CHECK_THROWS_AS(matrix_func_on_support(diag({1.0, -0.5}), log2f), Error);

  // Identity function compresses onto the support; idempotent for full-support PSD input.
  const ComplexMatrix rho = random_density(4, 4, 7).matrix();
  const auto ident = [](double v) { return v; };
  const ComplexMatrix once = matrix_func_on_support(rho, ident);
  CHECK(max_abs_diff(once, rho) < 1e-13);
  CHECK(max_abs_diff(matrix_func_on_support(once, ident), once) < 1e-13);
}

TEST_CASE("kron examples and associativity") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(diag({1, 0}), diag({0, 1})) == diag({0, 1, 0, 0}));
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2) * 0.5, ComplexMatrix::identity(2) * 0.5),
                     ComplexMatrix::identity(4) * 0.25) == 0.0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = oracle::random_hermitian(2, seed);
    const auto b = oracle::random_hermitian(3, seed + 100);
    const auto c = oracle::random_hermitian(2, seed + 200);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
  }
}

TEST_CASE("partial_trace examples") {
  const std::size_t dims[] = {2, 2};
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const auto half = ComplexMatrix::identity(2) * 0.5;
  CHECK(max_abs_diff(partial_trace(bell_state(3).matrix(), dims, keep_b), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(classically_correlated_pair().matrix(), dims, keep_a), half) == 0.0);

  const auto rho_a = random_density(2, 2, 1).matrix();
  const auto rho_b = random_density(3, 2, 2).matrix();
  const std::size_t dims23[] = {2, 3};
  CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), dims23, keep_a), rho_a) < 1e-15);
  CHECK(max_abs_diff(partial_trace(kron(rho_a, rho_b), dims23, keep_b), rho_b) < 1e-15);
}

TEST_CASE("partial_trace agrees with explicit index sums and preserves trace") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t da = 2 + seed % 2;
    const std::size_t db = 2 + (seed / 2) % 3;
    const ComplexMatrix m = oracle::random_hermitian(da * db, seed);
    const std::size_t dims[] = {da, db};
    const std::size_t keep_a[] = {0};
    const std::size_t keep_b[] = {1};
    const std::size_t keep_both[] = {0, 1};
    const auto ra = partial_trace(m, dims, keep_a);
    const auto rb = partial_trace(m, dims, keep_b);
    CHECK(max_abs_diff(ra, oracle::reduce_bipartite(m, da, db, true)) < 1e-13);
    CHECK(max_abs_diff(rb, oracle::reduce_bipartite(m, da, db, false)) < 1e-13);
    CHECK(std::abs(ra.trace() - m.trace()) < 1e-12);
    CHECK(std::abs(rb.trace() - m.trace()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(m, dims, keep_both), m) == 0.0);
  }
}

TEST_CASE("partial_trace composes over three subsystems in any order") {
  const ComplexMatrix m = random_density(12, 5, 3).matrix();
  const std::size_t dims[] = {2, 3, 2};
  const std::size_t keep_02[] = {0, 2};
  const std::size_t keep_0[] = {0};
  const std::size_t keep_2[] = {2};
  const std::size_t dims02[] = {2, 2};
  const std::size_t first[] = {0};
  const std::size_t second[] = {1};
  const auto reduced = partial_trace(m, dims, keep_02);
  CHECK(max_abs_diff(partial_trace(reduced, dims02, first), partial_trace(m, dims, keep_0)) < 1e-14);
  CHECK(max_abs_diff(partial_trace(reduced, dims02, second), partial_trace(m, dims, keep_2)) < 1e-14);
}

TEST_CASE("partial_trace rejects bad dims and keep sets") {
  const auto m = ComplexMatrix::identity(4);
  const std::size_t bad_dims[] = {2, 3};
  const std::size_t dims[] = {2, 2};
  const std::size_t keep[] = {0};
  const std::size_t out_of_range[] = {2};
  const std::size_t repeated[] = {0, 0};
  CHECK_THROWS_AS(partial_trace(m, bad_dims, keep), Error);
  CHECK_THROWS_AS(partial_trace(m, dims, std::span<const std::size_t>{}), Error);
  CHECK_THROWS_AS(partial_trace(m, dims, out_of_range), Error);
  CHECK_THROWS_AS(partial_trace(m, dims, repeated), Error);
}

TEST_CASE("partial_transpose examples") {
  const std::size_t dims[] = {2, 2};
  const auto rho_a = random_density(2, 2, 11).matrix();
  const auto rho_b = random_density(2, 2, 12).matrix();
  const auto product = kron(rho_a, rho_b);
  const auto pt = partial_transpose(product, dims);
  CHECK(max_abs_diff(pt, kron(rho_a, rho_b.transpose())) < 1e-15);
  const auto before = hermitian_eigenvalues(product);
  const auto after = hermitian_eigenvalues(pt);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(before[k] - after[k]) < 1e-12);

  const auto singlet_pt = oracle::eigenvalues(partial_transpose(bell_state(3).matrix(), dims));
  CHECK(std::abs(singlet_pt.back() + 0.5) < 1e-12);

  const auto boundary = oracle::eigenvalues(partial_transpose(werner_state(1.0 / 3.0).matrix(), dims));
  CHECK(std::abs(boundary.back()) < 1e-12);

  const std::size_t wrong[] = {2, 3};
  CHECK_THROWS_AS(partial_transpose(product, wrong), Error);
  const std::size_t three[] = {2, 2, 1};
  CHECK_THROWS_AS(partial_transpose(product, three), Error);
}

TEST_CASE("partial_transpose preserves the spectrum of product states in 2x3") {
  const std::size_t dims[] = {2, 3};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto product = kron(random_density(2, 1 + seed % 2, seed).matrix(),
                              random_density(3, 1 + seed % 3, seed + 50).matrix());
    const auto before = hermitian_eigenvalues(product);
    const auto after = hermitian_eigenvalues(partial_transpose(product, dims));
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(std::abs(before[k] - after[k]) < 1e-12);
  }
}

TEST_CASE("embed_operator lifts onto arbitrary target orders") {
  const auto op = oracle::random_hermitian(2, 5);
  const std::size_t dims[] = {2, 2};
  const std::size_t first[] = {0};
  const std::size_t second[] = {1};
  CHECK(max_abs_diff(embed_operator(op, dims, first), kron(op, ComplexMatrix::identity(2))) == 0.0);
  CHECK(max_abs_diff(embed_operator(op, dims, second), kron(ComplexMatrix::identity(2), op)) == 0.0);

  // Targets listed in reverse order act as a swapped two-qubit operator.
  const auto a = oracle::random_hermitian(2, 6);
  const auto b = oracle::random_hermitian(2, 7);
  const std::size_t reversed[] = {1, 0};
  CHECK(max_abs_diff(embed_operator(kron(a, b), dims, reversed), kron(b, a)) < 1e-15);
}
