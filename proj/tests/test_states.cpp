#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qent/entropy.hpp"
#include "qent/error.hpp"
#include "qent/separability.hpp"
#include "qent/states.hpp"

using namespace qent;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qent::Error");
  return ErrorCode::ParseError;
}

ComplexMatrix diag(std::initializer_list<double> values) {
  const std::vector<double> v(values);
  return ComplexMatrix::diagonal(v);
}

}  // namespace

TEST_CASE("DensityOperator validates its invariants") {
  CHECK(code_of([] { DensityOperator(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}, {2}); }) ==
        ErrorCode::InvalidDensity);
  CHECK(code_of([] { DensityOperator(diag({0.5, 0.4}), {2}); }) == ErrorCode::InvalidDensity);
  CHECK(code_of([] { DensityOperator(diag({1.5, -0.5}), {2}); }) == ErrorCode::InvalidDensity);
  CHECK(code_of([] { DensityOperator(diag({0.5, 0.5}), {3}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { DensityOperator(diag({0.5, 0.5}), {2}, {"A", "B"}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("pure_state") {
  const Complex zero_ket[] = {1.0, 0.0};
  CHECK(pure_state(zero_ket, {2}).matrix() == diag({1.0, 0.0}));

  const Complex unnormalised[] = {2.0, 0.0};
  CHECK(pure_state(unnormalised, {2}).matrix() == diag({1.0, 0.0}));

  const double s = 1.0 / std::sqrt(2.0);
  const Complex singlet[] = {0.0, s, -s, 0.0};
  const auto rho = pure_state(singlet, {2, 2});
  CHECK(max_abs_diff(rho.matrix(), bell_state(3).matrix()) < 1e-15);
  CHECK(max_abs_diff(rho.matrix() * rho.matrix(), rho.matrix()) < 1e-15);

  const Complex zeros[] = {0.0, 0.0};
  CHECK(code_of([&] { pure_state(zeros, {2}); }) == ErrorCode::ZeroVector);
  CHECK(code_of([&] { pure_state(zeros, {3}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("bell_state basis") {
  const auto singlet = bell_state(Bell::PsiMinus);
  CHECK(von_neumann_entropy(singlet) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(venn(singlet).s_a - 1.0) < 1e-12);
  CHECK(std::abs(venn(singlet).s_b - 1.0) < 1e-12);

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double overlap = trace_of_product(bell_state(i).matrix(), bell_state(j).matrix()).real();
      CHECK(std::abs(overlap - (i == j ? 1.0 : 0.0)) < 1e-15);
    }
    const auto half = ComplexMatrix::identity(2) * 0.5;
    CHECK(max_abs_diff(bell_state(i).marginal({0}).matrix(), half) < 1e-15);
    CHECK(max_abs_diff(bell_state(i).marginal({1}).matrix(), half) < 1e-15);
  }
  CHECK(code_of([] { bell_state(4); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { bell_state(-1); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("werner_state") {
  CHECK(max_abs_diff(werner_state(1.0).matrix(), bell_state(3).matrix()) < 1e-15);
  CHECK(max_abs_diff(werner_state(0.0).matrix(), ComplexMatrix::identity(4) * 0.25) < 1e-15);
  const auto values = oracle::eigenvalues(werner_state(1.0 / 3.0).matrix());
  CHECK(std::abs(values[0] - 0.5) < 1e-14);
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(values[k] - 1.0 / 6.0) < 1e-14);
  CHECK(code_of([] { werner_state(-0.1); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { werner_state(1.01); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { werner_state(std::nan("")); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("werner conditional spectrum matches the closed form on a 101-point grid") {
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    const auto numeric = hermitian_eigenvalues(conditional_amplitude(werner_state(x)).matrix);
    const auto closed = werner_conditional_spectrum(x);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(numeric[k] - closed[k]) < 1e-9);
  }
}

TEST_CASE("classically_correlated_pair") {
  const auto rho = classically_correlated_pair();
  const auto half = diag({0.5, 0.5});
  CHECK(rho.marginal({0}).matrix() == half);
  CHECK(rho.marginal({1}).matrix() == half);
  CHECK(std::abs(von_neumann_entropy(rho) - 1.0) < 1e-14);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(rho.matrix()(i, j) == Complex{});
}

TEST_CASE("from_separable_spec") {
  const auto rho_a = random_density(2, 2, 3);
  const auto rho_b = random_density(2, 1, 4);
  SeparableMixtureSpec single{{1.0}, {{rho_a, rho_b}}};
  CHECK(max_abs_diff(from_separable_spec(single).matrix(), kron(rho_a.matrix(), rho_b.matrix())) < 1e-15);

  const auto zero = DensityOperator(diag({1.0, 0.0}), {2});
  const auto one = DensityOperator(diag({0.0, 1.0}), {2});
  SeparableMixtureSpec classical{{0.5, 0.5}, {{zero, one}, {one, zero}}};
  CHECK(from_separable_spec(classical).matrix() == classically_correlated_pair().matrix());

  SeparableMixtureSpec bad_sum{{0.5, 0.4}, {{zero, one}, {one, zero}}};
  CHECK(code_of([&] { from_separable_spec(bad_sum); }) == ErrorCode::InvalidWeights);
  SeparableMixtureSpec negative{{1.5, -0.5}, {{zero, one}, {one, zero}}};
  CHECK(code_of([&] { from_separable_spec(negative); }) == ErrorCode::InvalidWeights);
  SeparableMixtureSpec count{{1.0}, {{zero, one}, {one, zero}}};
  CHECK(code_of([&] { from_separable_spec(count); }) == ErrorCode::InvalidWeights);
  SeparableMixtureSpec mixed_dims{{0.5, 0.5}, {{zero, one}, {one, random_density(3, 3, 1)}}};
  CHECK(code_of([&] { from_separable_spec(mixed_dims); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("separable specs pass the conditional spectrum test") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t db = 2 + seed % 2;
    const auto spec = random_separable_spec(2, db, 1 + seed % 4, seed);
    const auto rho = from_separable_spec(spec);
    CHECK(conditional_spectrum_test(rho).pass);
  }
}

TEST_CASE("random_density") {
  const auto full = random_density(4, 4, 42);
  CHECK(hermitian_eigenvalues(full.matrix()).back() > 0.0);
  CHECK(random_density(4, 2, 9).matrix() == random_density(4, 2, 9).matrix());
  CHECK(!(random_density(4, 2, 9).matrix() == random_density(4, 2, 10).matrix()));

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto rho = random_density(4, 1 + seed % 4, seed);
    CHECK(std::abs(rho.matrix().trace() - 1.0) <= 1e-12);
  }
  for (std::size_t rank = 1; rank <= 5; ++rank) {
    const auto values = hermitian_eigenvalues(random_density(5, rank, rank).matrix());
    std::size_t numeric_rank = 0;
    for (const double v : values) numeric_rank += v > kDefaultTol ? 1 : 0;
    CHECK(numeric_rank == rank);
  }
  CHECK(code_of([] { random_density(3, 0, 1); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { random_density(3, 4, 1); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("random_unitary is unitary and deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = random_unitary(2 + seed % 3, seed);
    CHECK(is_unitary(u, 1e-12));
    CHECK(u == random_unitary(2 + seed % 3, seed));
  }
}

TEST_CASE("apply_local_unitary") {
  const auto rho = random_density(4, 3, 5);
  const auto id = ComplexMatrix::identity(2);
  const DensityOperator rho2(rho.matrix(), {2, 2});
  CHECK(max_abs_diff(apply_local_unitary(rho2, id, id).matrix(), rho2.matrix()) < 1e-15);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rotated = apply_local_unitary(bell_state(3), random_unitary(2, seed), random_unitary(2, seed + 1));
    CHECK(std::abs(conditional_entropy(rotated) + 1.0) < 1e-9);
  }

  const auto flipped = apply_local_unitary(classically_correlated_pair(), pauli::x(), id);
  CHECK(max_abs_diff(flipped.matrix(), diag({0.5, 0.0, 0.0, 0.5})) < 1e-15);
  const auto d = venn(flipped);
  CHECK(std::abs(d.s_a_given_b) < 1e-9);
  CHECK(std::abs(d.s_mutual - 1.0) < 1e-9);
  CHECK(std::abs(d.s_b_given_a) < 1e-9);

  const ComplexMatrix not_unitary{{1.0, 1.0}, {0.0, 1.0}};
  CHECK(code_of([&] { apply_local_unitary(rho2, not_unitary, id); }) == ErrorCode::NotUnitary);
  CHECK(code_of([&] { apply_local_unitary(rho2, ComplexMatrix::identity(3), id); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("apply_local_unitary preserves every Venn entry") {
  const std::size_t shapes[][2] = {{2, 2}, {2, 3}, {3, 3}};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto [da, db] = shapes[seed % 3];
    const auto raw = random_density(da * db, 1 + seed % (da * db), seed);
    const DensityOperator rho(raw.matrix(), {da, db});
    const auto rotated = apply_local_unitary(rho, random_unitary(da, 3 * seed + 1), random_unitary(db, 3 * seed + 2));
    const auto before = venn(rho);
    const auto after = venn(rotated);
    CHECK(std::abs(before.s_a - after.s_a) < 1e-9);
    CHECK(std::abs(before.s_b - after.s_b) < 1e-9);
    CHECK(std::abs(before.s_ab - after.s_ab) < 1e-9);
    CHECK(std::abs(before.s_a_given_b - after.s_a_given_b) < 1e-9);
    CHECK(std::abs(before.s_b_given_a - after.s_b_given_a) < 1e-9);
    CHECK(std::abs(before.s_mutual - after.s_mutual) < 1e-9);
    CHECK(std::abs(conditional_entropy_operator_trace(rho) - conditional_entropy_operator_trace(rotated)) < 1e-9);
  }
}

TEST_CASE("swap_parties exchanges marginals") {
  const auto raw = random_density(6, 4, 8);
  const DensityOperator rho(raw.matrix(), {2, 3}, {"A", "B"});
  const auto swapped = swap_parties(rho);
  CHECK(swapped.dims()[0] == 3);
  CHECK(swapped.labels() == std::vector<std::string>{"B", "A"});
  CHECK(max_abs_diff(swapped.marginal({0}).matrix(), rho.marginal({1}).matrix()) < 1e-15);
  CHECK(std::abs(conditional_entropy(swapped) - conditional_entropy(rho, Given::A)) < 1e-12);
}
