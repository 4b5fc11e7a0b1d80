#include "qent/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "qent/entropy.hpp"
#include "qent/error.hpp"
#include "qent/states.hpp"

namespace qent {

namespace {

std::vector<std::string> names_of(const std::vector<Register>& registers) {
  std::vector<std::string> names;
  for (const auto& r : registers) names.push_back(r.name);
  return names;
}

std::vector<std::size_t> dims_of(const std::vector<Register>& registers) {
  std::vector<std::size_t> dims;
  for (const auto& r : registers) dims.push_back(r.dim);
  return dims;
}

const Register& require_qubit(const RegisterSystem& sys, std::string_view name) {
  const Register& r = sys.reg(name);
  if (r.kind != RegisterKind::Quantum || r.dim != 2) {
    throw Error(ErrorCode::BadRegister, "register " + std::string(name) + " is not a qubit");
  }
  return r;
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t k) {
  ComplexMatrix p(dim);
  p(k, k) = 1.0;
  return p;
}

double trace_deviation(const RegisterSystem& sys) {
  return std::abs(sys.state().matrix().trace() - 1.0);
}

LedgerCheck trace_check(Stage stage, const RegisterSystem& sys) {
  return {stage, "trace_deviation", trace_deviation(sys), 0.0, 1e-12};
}

RegisterSystem bell_pair_system(const std::string& first, const std::string& second) {
  return RegisterSystem(bell_state(Bell::PhiPlus),
                        {{first, 2, RegisterKind::Quantum}, {second, 2, RegisterKind::Quantum}});
}

RegisterSystem combine(const RegisterSystem& a, const RegisterSystem& b) {
  std::vector<Register> registers = a.registers();
  registers.insert(registers.end(), b.registers().begin(), b.registers().end());
  return RegisterSystem(DensityOperator(kron(a.state().matrix(), b.state().matrix()),
                                        dims_of(registers), names_of(registers)),
                        registers);
}

RegisterSystem classical_register(const std::string& name, std::span<const double> distribution) {
  return RegisterSystem(
      DensityOperator(ComplexMatrix::diagonal(distribution), {distribution.size()}, {name}),
      {{name, distribution.size(), RegisterKind::Classical}});
}

}  // namespace

RegisterSystem::RegisterSystem(DensityOperator state, std::vector<Register> registers)
    : state_(std::move(state)), registers_(std::move(registers)) {
  if (registers_.size() != state_.subsystem_count()) {
    throw Error(ErrorCode::BadRegister, "register count differs from subsystem count");
  }
  for (std::size_t k = 0; k < registers_.size(); ++k) {
    if (registers_[k].dim != state_.dims()[k]) {
      throw Error(ErrorCode::BadRegister, "register " + registers_[k].name + " has wrong dim");
    }
    for (std::size_t j = 0; j < k; ++j)
      if (registers_[j].name == registers_[k].name) {
        throw Error(ErrorCode::BadRegister, "duplicate register " + registers_[k].name);
      }
  }
  if (state_.dim() > kMaxJointDim) {
    throw Error(ErrorCode::BadRegister, "joint dimension " + std::to_string(state_.dim()) +
                                            " exceeds " + std::to_string(kMaxJointDim));
  }
  std::vector<std::size_t> classical;
  for (std::size_t k = 0; k < registers_.size(); ++k)
    if (registers_[k].kind == RegisterKind::Classical) classical.push_back(k);
  if (!classical.empty()) {
    const ComplexMatrix reduced = partial_trace(state_.matrix(), state_.dims(), classical);
    for (std::size_t i = 0; i < reduced.dim(); ++i)
      for (std::size_t j = 0; j < reduced.dim(); ++j)
        if (i != j && std::abs(reduced(i, j)) > kDefaultTol) {
          throw Error(ErrorCode::BadRegister, "classical registers are not diagonal");
        }
  }
}

std::size_t RegisterSystem::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < registers_.size(); ++k)
    if (registers_[k].name == name) return k;
  throw Error(ErrorCode::BadRegister, "unknown register " + std::string(name));
}

std::vector<std::size_t> RegisterSystem::indices_of(const Names& names) const {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(index_of(n));
  return out;
}

ComplexMatrix RegisterSystem::reduced(const Names& names) const {
  return partial_trace(state_.matrix(), state_.dims(), indices_of(names));
}

double RegisterSystem::entropy(const Names& names) const {
  return subsystem_entropy(state_, indices_of(names));
}

double RegisterSystem::conditional_entropy(const Names& target, const Names& given) const {
  return conditional_entropy_of(state_, indices_of(target), indices_of(given));
}

double RegisterSystem::mutual_entropy(const Names& a, const Names& b) const {
  return mutual_entropy_of(state_, indices_of(a), indices_of(b));
}

double RegisterSystem::conditional_mutual_entropy(const Names& a, const Names& b,
                                                  const Names& given) const {
  return qent::conditional_mutual_entropy(
      state_, Partition{indices_of(a), indices_of(b), indices_of(given)});
}

RegisterSystem RegisterSystem::renamed(std::string_view from, std::string to) const {
  std::vector<Register> registers = registers_;
  registers[index_of(from)].name = std::move(to);
  return RegisterSystem(DensityOperator(state_.matrix(), dims_of(registers), names_of(registers)),
                        registers);
}

ComplexMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return pauli::identity();
    case Pauli::X: return pauli::x();
    case Pauli::Y: return pauli::y();
    case Pauli::Z: return pauli::z();
  }
  return pauli::identity();
}

RegisterSystem bell_measurement(const RegisterSystem& sys, std::string_view first,
                                std::string_view second, std::string outcome) {
  require_qubit(sys, first);
  require_qubit(sys, second);
  if (first == second) throw Error(ErrorCode::BadRegister, "measurement targets must differ");
  const std::size_t targets[] = {sys.index_of(first), sys.index_of(second)};
  const auto dims = sys.state().dims();
  if (sys.state().dim() * 4 > kMaxJointDim) {
    throw Error(ErrorCode::BadRegister, "outcome register would exceed the joint dimension limit");
  }

  const ComplexMatrix& rho = sys.state().matrix();
  ComplexMatrix next(rho.dim() * 4);
  for (int m = 0; m < 4; ++m) {
    const ComplexMatrix projector = embed_operator(bell_state(m).matrix(), dims, targets);
    next += kron(projector * rho * projector, basis_projector(4, static_cast<std::size_t>(m)));
  }
  std::vector<Register> registers = sys.registers();
  registers.push_back({std::move(outcome), 4, RegisterKind::Classical});
  return RegisterSystem(DensityOperator(std::move(next), dims_of(registers), names_of(registers)),
                        registers);
}

RegisterSystem conditioned_pauli(const RegisterSystem& sys, std::string_view control,
                                 std::string_view target, const PauliTable& table) {
  const Register& ctrl = sys.reg(control);
  if (ctrl.kind != RegisterKind::Classical || ctrl.dim != 4) {
    throw Error(ErrorCode::BadRegister, "control " + std::string(control) + " is not a 4-valued classical register");
  }
  require_qubit(sys, target);
  const std::size_t targets[] = {sys.index_of(control), sys.index_of(target)};
  ComplexMatrix block_unitary(8);
  for (std::size_t m = 0; m < 4; ++m) block_unitary += kron(basis_projector(4, m), pauli_matrix(table[m]));
  const ComplexMatrix u = embed_operator(block_unitary, sys.state().dims(), targets);
  const auto dims = sys.state().dims();
  return RegisterSystem(
      DensityOperator(u * sys.state().matrix() * u.adjoint(),
                      std::vector<std::size_t>(dims.begin(), dims.end()), sys.state().labels()),
      sys.registers());
}

RegisterSystem superdense_encode(const RegisterSystem& sys, std::string_view message,
                                 std::string_view carrier, const PauliTable& table) {
  return conditioned_pauli(sys, message, carrier, table);
}

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::Prepare: return "prepare";
    case Stage::U: return "U";
    case Stage::M: return "M";
    case Stage::Finish: return "finish";
  }
  return "?";
}

double LedgerEntry::residual() const {
  double sum = 0.0;
  for (const auto& term : rhs) sum += term.value;
  return std::abs(lhs.value - sum);
}

bool LedgerCheck::pass() const { return std::abs(value - expected) <= tolerance; }

double ProtocolLedger::max_residual() const {
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, e.residual());
  return worst;
}

bool ProtocolLedger::holds(double tol) const {
  try {
    verify(tol);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void ProtocolLedger::verify(double tol) const {
  for (const auto& e : entries) {
    if (e.residual() > tol) {
      throw Error(ErrorCode::LedgerViolation,
                  protocol + " [" + std::string(to_string(e.stage)) + "] " + e.identity +
                      ": residual " + std::to_string(e.residual()));
    }
    if (e.expected && std::abs(e.lhs.value - *e.expected) > tol) {
      throw Error(ErrorCode::LedgerViolation,
                  protocol + " [" + std::string(to_string(e.stage)) + "] " + e.lhs.label + " = " +
                      std::to_string(e.lhs.value) + ", expected " + std::to_string(*e.expected));
    }
  }
  for (const auto& c : checks) {
    if (!c.pass()) {
      throw Error(ErrorCode::LedgerViolation,
                  protocol + " [" + std::string(to_string(c.stage)) + "] " + c.name + " = " +
                      std::to_string(c.value) + ", expected " + std::to_string(c.expected));
    }
  }
}

const LedgerEntry* ProtocolLedger::find(std::string_view lhs_label) const {
  for (const auto& e : entries)
    if (e.lhs.label == lhs_label) return &e;
  return nullptr;
}

const LedgerCheck* ProtocolLedger::find_check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ProtocolLedger run_teleportation() {
  ProtocolLedger ledger{"teleport", {}, {}, {}};

  // R-q carries the unknown qubit via its entanglement with the reference.
  const RegisterSystem prepared = combine(bell_pair_system("R", "q"), bell_pair_system("e", "ebar"));
  const double s_q = prepared.entropy({"q"});
  const double s_e = prepared.entropy({"e"});
  const double s_qe = prepared.entropy({"q", "e"});
  const double s_qeebar = prepared.entropy({"q", "e", "ebar"});
  const double s_ebar_given_qe = prepared.conditional_entropy({"ebar"}, {"q", "e"});

  ledger.checks.push_back({Stage::Prepare, "S(q)", s_q, 1.0, kLedgerTol});
  ledger.checks.push_back({Stage::Prepare, "S(e)", s_e, 1.0, kLedgerTol});
  ledger.checks.push_back(trace_check(Stage::Prepare, prepared));
  ledger.entries.push_back({Stage::Prepare, "S(qe) = S(q) + S(e)", {"S(qe)", s_qe},
                            {{"S(q)", s_q}, {"S(e)", s_e}}, 2.0});
  ledger.entries.push_back({Stage::Prepare, "S(ebar|qe) = S(qe ebar) - S(qe)",
                            {"S(ebar|qe)", s_ebar_given_qe},
                            {{"S(qe ebar)", s_qeebar}, {"-S(qe)", -s_qe}}, -1.0});

  const RegisterSystem measured = bell_measurement(prepared, "q", "e", "2c");
  const double s_2c = measured.entropy({"2c"});
  ledger.checks.push_back(trace_check(Stage::M, measured));
  ledger.entries.push_back({Stage::M, "S(2c) = S(qe)", {"S(2c)", s_2c}, {{"S(qe)", s_qe}}, 2.0});
  ledger.entries.push_back({Stage::M, "S(2c) = S(q) + S(e)", {"S(2c)", s_2c},
                            {{"S(q)", s_q}, {"S(e)", s_e}}, 2.0});

  const RegisterSystem corrected =
      conditioned_pauli(measured, "2c", "ebar", kBellPauliTable).renamed("ebar", "q'");
  const double s_qprime = corrected.entropy({"q'"});
  ledger.checks.push_back(trace_check(Stage::U, corrected));
  ledger.entries.push_back({Stage::U, "S(q') = S(qe ebar)", {"S(q')", s_qprime},
                            {{"S(qe ebar)", s_qeebar}}, 1.0});
  ledger.entries.push_back({Stage::U, "S(q') = S(qe) + S(ebar|qe)", {"S(q')", s_qprime},
                            {{"S(qe)", s_qe}, {"S(ebar|qe)", s_ebar_given_qe}}, 1.0});

  const double s_r = corrected.entropy({"R"});
  const double s_rq = corrected.entropy({"R", "q'"});
  ledger.entries.push_back({Stage::Finish, "S(R:q') = S(R) + S(q') - S(Rq')",
                            {"S(R:q')", corrected.mutual_entropy({"R"}, {"q'"})},
                            {{"S(R)", s_r}, {"S(q')", s_qprime}, {"-S(Rq')", -s_rq}}, 2.0});
  const double deviation = max_abs_diff(corrected.reduced({"R", "q'"}), bell_state(Bell::PhiPlus).matrix());
  ledger.checks.push_back({Stage::Finish, "bell_deviation(R,q')", deviation, 0.0, 1e-10});

  ledger.annotations = {
      "e carries +1 bit of virtual information: S(e) = 1",
      "ebar carries -1 bit: S(ebar|qe) = -1",
      "vertex M: q + e -> 2c",
      "vertex U: 2c + ebar -> q'",
  };
  ledger.verify();
  return ledger;
}

ProtocolLedger run_superdense() {
  ProtocolLedger ledger{"superdense", {}, {}, {}};

  const double uniform[] = {0.25, 0.25, 0.25, 0.25};
  const RegisterSystem prepared = combine(classical_register("2c", uniform), bell_pair_system("e", "ebar"));
  const double s_2c = prepared.entropy({"2c"});
  const double s_e = prepared.entropy({"e"});
  const double s_ebar_given_e = prepared.conditional_entropy({"ebar"}, {"e"});
  const double s_2cebar_given_e = prepared.conditional_entropy({"2c", "ebar"}, {"e"});
  ledger.checks.push_back(trace_check(Stage::Prepare, prepared));
  ledger.entries.push_back({Stage::Prepare, "S(2c ebar|e) = S(2c) + S(ebar|e)",
                            {"S(2c ebar|e)", s_2cebar_given_e},
                            {{"S(2c)", s_2c}, {"S(ebar|e)", s_ebar_given_e}}, 1.0});
  ledger.checks.push_back({Stage::Prepare, "S(ebar|e)", s_ebar_given_e, -1.0, kLedgerTol});
  ledger.checks.push_back({Stage::Prepare, "S(e)", s_e, 1.0, kLedgerTol});

  const RegisterSystem encoded = superdense_encode(prepared, "2c", "ebar").renamed("ebar", "q");
  const double s_q_given_e = encoded.conditional_entropy({"q"}, {"e"});
  const double s_qe = encoded.entropy({"q", "e"});
  const double s_e_after = encoded.entropy({"e"});
  ledger.checks.push_back(trace_check(Stage::U, encoded));
  ledger.entries.push_back({Stage::U, "S(q|e) = S(2c ebar|e)", {"S(q|e)", s_q_given_e},
                            {{"S(2c ebar|e)", s_2cebar_given_e}}, 1.0});
  ledger.entries.push_back({Stage::U, "S(q|e) = S(2c) + S(ebar|e)", {"S(q|e)", s_q_given_e},
                            {{"S(2c)", s_2c}, {"S(ebar|e)", s_ebar_given_e}}, 1.0});
  ledger.checks.push_back({Stage::U, "S(e)", s_e_after, 1.0, kLedgerTol});
  const double s_2ce = encoded.entropy({"2c", "e"});
  const double s_2cqe = encoded.entropy({"2c", "q", "e"});
  ledger.entries.push_back(
      {Stage::U, "S(2c:q|e) = S(2c e) + S(qe) - S(2c qe) - S(e)",
       {"S(2c:q|e)", encoded.conditional_mutual_entropy({"2c"}, {"q"}, {"e"})},
       {{"S(2c e)", s_2ce}, {"S(qe)", s_qe}, {"-S(2c qe)", -s_2cqe}, {"-S(e)", -s_e_after}},
       2.0});

  const RegisterSystem measured = bell_measurement(encoded, "q", "e", "2c'");
  const double s_2cprime = measured.entropy({"2c'"});
  ledger.checks.push_back(trace_check(Stage::M, measured));
  ledger.entries.push_back({Stage::M, "S(2c') = S(qe)", {"S(2c')", s_2cprime}, {{"S(qe)", s_qe}}, 2.0});
  ledger.entries.push_back({Stage::M, "S(2c') = S(q|e) + S(e)", {"S(2c')", s_2cprime},
                            {{"S(q|e)", s_q_given_e}, {"S(e)", s_e_after}}, 2.0});

  const double s_2c_final = measured.entropy({"2c"});
  const double s_joint = measured.entropy({"2c", "2c'"});
  ledger.entries.push_back({Stage::Finish, "S(2c:2c') = S(2c) + S(2c') - S(2c 2c')",
                            {"S(2c:2c')", measured.mutual_entropy({"2c"}, {"2c'"})},
                            {{"S(2c)", s_2c_final}, {"S(2c')", s_2cprime}, {"-S(2c 2c')", -s_joint}},
                            2.0});

  for (int m = 0; m < 4; ++m) {
    const DecodeResult r = superdense_roundtrip(m);
    ledger.checks.push_back({Stage::Finish, "decode(" + std::to_string(m) + ")",
                             static_cast<double>(r.decoded), static_cast<double>(m), 0.0});
    ledger.checks.push_back({Stage::Finish, "S(2c')|m=" + std::to_string(m),
                             r.outcome_entropy, 0.0, kLedgerTol});
  }

  ledger.annotations = {
      "ebar carries -1 bit of virtual information: S(ebar|e) = -1",
      "e keeps its unconditional entropy S(e) = 1",
      "vertex U: 2c + ebar -> q",
      "vertex M: q + e -> 2c'",
      "sender-side 2c is excluded from the receiver accounting; it is correlated with 2c'",
  };
  ledger.verify();
  return ledger;
}

DensityOperator teleport_qubit(const DensityOperator& input) {
  if (input.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "input must be a single qubit");
  const RegisterSystem source(DensityOperator(input.matrix(), {2}, {"q"}), {{"q", 2, RegisterKind::Quantum}});
  const RegisterSystem prepared = combine(source, bell_pair_system("e", "ebar"));
  const RegisterSystem measured = bell_measurement(prepared, "q", "e", "2c");
  const RegisterSystem corrected = conditioned_pauli(measured, "2c", "ebar", kBellPauliTable);
  return DensityOperator(corrected.reduced({"ebar"}), {2});
}

DecodeResult superdense_roundtrip(int message) {
  if (message < 0 || message > 3) throw Error(ErrorCode::IndexOutOfRange, "message " + std::to_string(message));
  double distribution[4] = {0.0, 0.0, 0.0, 0.0};
  distribution[message] = 1.0;
  const RegisterSystem prepared = combine(classical_register("2c", distribution), bell_pair_system("e", "ebar"));
  const RegisterSystem encoded = superdense_encode(prepared, "2c", "ebar").renamed("ebar", "q");
  const RegisterSystem measured = bell_measurement(encoded, "q", "e", "2c'");
  const ComplexMatrix outcome = measured.reduced({"2c'"});
  int best = 0;
  for (int k = 1; k < 4; ++k)
    if (outcome(k, k).real() > outcome(best, best).real()) best = k;
  return {best, measured.entropy({"2c'"})};
}

}  // namespace qent
