#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qent/density_operator.hpp"

namespace qent {

inline constexpr double kLedgerTol = 1e-8;

/// Upper bound on the joint register dimension (five qubits or equivalent).
inline constexpr std::size_t kMaxJointDim = 64;

enum class RegisterKind { Classical, Quantum };

struct Register {
  std::string name;
  std::size_t dim;
  RegisterKind kind;
};

using Names = std::vector<std::string>;

/// A density operator over named registers. Classical registers must stay diagonal:
/// tracing out every quantum register has to leave a diagonal matrix.
class RegisterSystem {
 public:
  RegisterSystem(DensityOperator state, std::vector<Register> registers);

  const DensityOperator& state() const noexcept { return state_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  const Register& reg(std::string_view name) const { return registers_[index_of(name)]; }

  /// Throws BadRegister for unknown names.
  std::size_t index_of(std::string_view name) const;
  std::vector<std::size_t> indices_of(const Names& names) const;

  /// Reduced state of the named registers (in register order).
  ComplexMatrix reduced(const Names& names) const;

  double entropy(const Names& names) const;
  double conditional_entropy(const Names& target, const Names& given) const;
  double mutual_entropy(const Names& a, const Names& b) const;
  double conditional_mutual_entropy(const Names& a, const Names& b, const Names& given) const;

  RegisterSystem renamed(std::string_view from, std::string to) const;

 private:
  DensityOperator state_;
  std::vector<Register> registers_;
};

enum class Pauli { I, X, Y, Z };

ComplexMatrix pauli_matrix(Pauli p);

/// Pauli applied per classical value 0..3.
using PauliTable = std::array<Pauli, 4>;

/// Bob's correction for Bell outcome m when the shared pair is Phi+; also the
/// superdense encoding that maps Phi+ onto bell_state(m) when applied to the first
/// member of the pair.
inline constexpr PauliTable kBellPauliTable = {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};

/// Projective Bell-basis measurement of two qubit registers, outcome kept as a new
/// classical register of dim 4 appended at the end:
///   sum_m Pi_m rho Pi_m (x) |m><m|.
/// Throws BadRegister.
RegisterSystem bell_measurement(const RegisterSystem& sys, std::string_view first,
                                std::string_view second, std::string outcome);

/// Applies table[m] to `target` in the block where classical register `control` = m.
/// Throws BadRegister.
RegisterSystem conditioned_pauli(const RegisterSystem& sys, std::string_view control,
                                 std::string_view target, const PauliTable& table);

/// Packs a two-bit classical message into `carrier` (one half of a Phi+ pair).
RegisterSystem superdense_encode(const RegisterSystem& sys, std::string_view message,
                                 std::string_view carrier, const PauliTable& table = kBellPauliTable);

enum class Stage { Prepare, U, M, Finish };

std::string_view to_string(Stage stage) noexcept;

struct LedgerTerm {
  std::string label;
  double value;
};

/// One bookkeeping identity lhs = sum(rhs), every value measured on a simulated state.
struct LedgerEntry {
  Stage stage;
  std::string identity;
  LedgerTerm lhs;
  std::vector<LedgerTerm> rhs;
  std::optional<double> expected;

  double residual() const;
};

/// A scalar property of the run compared against its known value.
struct LedgerCheck {
  Stage stage;
  std::string name;
  double value;
  double expected;
  double tolerance;

  bool pass() const;
};

struct ProtocolLedger {
  std::string protocol;
  std::vector<LedgerEntry> entries;
  std::vector<LedgerCheck> checks;
  std::vector<std::string> annotations;

  double max_residual() const;
  /// Every residual <= tol, every expected value met within tol, every check passes.
  bool holds(double tol = kLedgerTol) const;
  /// Throws LedgerViolation naming the first failing record.
  void verify(double tol = kLedgerTol) const;
  /// First entry whose lhs label matches.
  const LedgerEntry* find(std::string_view lhs_label) const;
  const LedgerCheck* find_check(std::string_view name) const;
};

/// Teleports q (maximally entangled with a reference R) over a Phi+ pair (e, ebar).
/// Throws LedgerViolation.
ProtocolLedger run_teleportation();

/// Superdense coding of a uniformly random two-bit register 2c over a Phi+ pair.
/// Throws LedgerViolation.
ProtocolLedger run_superdense();

/// Output qubit of the teleportation circuit for an arbitrary single-qubit input.
DensityOperator teleport_qubit(const DensityOperator& input);

struct DecodeResult {
  int decoded;
  double outcome_entropy;
};

/// Encodes the fixed message m (0..3), measures, and reads back the most likely outcome.
DecodeResult superdense_roundtrip(int message);

}  // namespace qent
