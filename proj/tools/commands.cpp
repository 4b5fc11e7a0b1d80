#include "commands.hpp"

#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qent/entropy.hpp"
#include "qent/error.hpp"
#include "qent/linalg.hpp"
#include "qent/protocol.hpp"
#include "qent/separability.hpp"
#include "qent/state_file.hpp"
#include "qent/states.hpp"

namespace qent::cli {

namespace {

constexpr double kVennTol = 1e-9;

std::string sci(double v) { return fmt::format("{:g}", v); }

Report base_report(std::string command, const StateInput& input, double tol) {
  Report r;
  r.command = std::move(command);
  r.input = input.description;
  r.digest = input.digest;
  r.settings = {{"tol", sci(tol)}, {"support_tol", sci(kDefaultTol)}};
  return r;
}

ReportSection ledger_section(const LedgerEntry& entry) {
  ReportSection s{fmt::format("{}: {}", to_string(entry.stage), entry.identity), {}};
  s.fields.push_back({entry.lhs.label, entry.lhs.value});
  for (const auto& term : entry.rhs) s.fields.push_back({term.label, term.value});
  s.fields.push_back({"residual", entry.residual()});
  if (entry.expected) s.fields.push_back({"expected", *entry.expected});
  return s;
}

int exit_status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::FlagError:
    case ErrorCode::UnknownProtocol:
    case ErrorCode::DimensionMismatch:
      return kExitUsage;
    default:
      return kExitViolation;
  }
}

}  // namespace

StateInput preset_input(std::string_view name, std::optional<double> x) {
  auto make = [&](DensityOperator rho, std::string description) {
    std::string digest = digest_hex(serialize_state(rho));
    return StateInput{std::move(rho), std::move(description), std::move(digest)};
  };
  if (name == "epr") return make(bell_state(Bell::PsiMinus), "preset:epr");
  if (name == "classical") return make(classically_correlated_pair(), "preset:classical");
  if (name == "independent") return make(independent_pair(), "preset:independent");
  if (name == "werner") {
    if (!x) throw Error(ErrorCode::FlagError, "preset werner needs --x");
    if (!(*x >= 0.0 && *x <= 1.0)) throw Error(ErrorCode::FlagError, "--x must lie in [0, 1]");
    return make(werner_state(*x), "preset:werner x=" + format_number(*x));
  }
  throw Error(ErrorCode::FlagError, "unknown preset " + std::string(name));
}

StateInput file_input(const std::string& path) {
  DensityOperator rho = load_state(path);
  std::string digest = digest_hex(serialize_state(rho));
  return {std::move(rho), "file:" + path, std::move(digest)};
}

Report cmd_entropy(const StateInput& input, double tol) {
  const DensityOperator& rho = input.state;
  if (rho.subsystem_count() != 2) throw Error(ErrorCode::DimensionMismatch, "entropy needs a bipartite state");
  Report r = base_report("entropy", input, tol);
  const VennDiagram d = venn(rho);
  const double cond_trace = conditional_entropy_operator_trace(rho, Given::B);
  const double cond_trace_ba = conditional_entropy_operator_trace(rho, Given::A);
  const double mutual_trace = mutual_entropy_operator_trace(rho);

  r.sections.push_back({"entropies",
                        {{"S(A)", d.s_a},
                         {"S(B)", d.s_b},
                         {"S(AB)", d.s_ab},
                         {"S(A|B)", d.s_a_given_b},
                         {"S(B|A)", d.s_b_given_a},
                         {"S(A:B)", d.s_mutual}}});
  r.sections.push_back(
      {"venn", {{"S(A|B)", d.s_a_given_b}, {"S(A:B)", d.s_mutual}, {"S(B|A)", d.s_b_given_a}}});
  const double route_gap = std::max({std::abs(cond_trace - d.s_a_given_b),
                                     std::abs(cond_trace_ba - d.s_b_given_a),
                                     std::abs(mutual_trace - d.s_mutual)});
  r.sections.push_back({"consistency",
                        {{"venn_residual", d.consistency_residual()},
                         {"S(A|B) operator trace", cond_trace},
                         {"S(B|A) operator trace", cond_trace_ba},
                         {"S(A:B) operator trace", mutual_trace},
                         {"route_gap", route_gap}}});
  if (d.consistency_residual() > tol || route_gap > std::max(tol, 1e-8)) {
    r.status = "violation: entropy bookkeeping exceeds tolerance";
  }
  return r;
}

Report cmd_separability(const StateInput& input, double tol) {
  if (input.state.subsystem_count() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "separability needs a bipartite state");
  }
  Report r = base_report("separability", input, tol);
  const SeparabilityVerdict v = assess_separability(input.state, tol);
  r.sections.push_back({"conditional spectrum",
                        {{"max eig rho(A|B)", v.max_conditional_eigenvalue_ab},
                         {"max eig rho(B|A)", v.max_conditional_eigenvalue_ba},
                         {"spectrum_test", v.spectrum_test_pass}}});
  r.sections.push_back({"conditional entropy",
                        {{"S(A|B)", v.conditional_entropy_ab},
                         {"S(B|A)", v.conditional_entropy_ba},
                         {"entropy_test", v.entropy_test_pass}}});
  r.sections.push_back(
      {"peres", {{"min eig partial transpose", v.min_ppt_eigenvalue}, {"ppt_test", v.ppt_pass}}});
  r.sections.push_back({"summary",
                        {{"all_pass", v.spectrum_test_pass && v.entropy_test_pass && v.ppt_pass},
                         {"ppt_detects_more", std::string(v.ppt_stronger() ? "yes" : "no")}}});
  return r;
}

std::vector<double> scan_grid(double min, double max, std::size_t steps) {
  if (!(min >= 0.0 && max <= 1.0 && min <= max)) {
    throw Error(ErrorCode::FlagError, "need 0 <= min <= max <= 1");
  }
  if (steps < 1) throw Error(ErrorCode::FlagError, "steps must be at least 1");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = steps == 1 ? min
                         : min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

Report cmd_werner_scan(double min, double max, std::size_t steps, double tol) {
  const auto grid = scan_grid(min, max, steps);
  const std::string params = fmt::format("min={} max={} steps={}", format_number(min), format_number(max), steps);
  StateInput pseudo{werner_state(0.0), "werner-grid " + params, digest_hex(params)};
  Report r = base_report("werner-scan", pseudo, tol);

  const auto rows = werner_scan(grid, tol);
  ReportTable table{"werner-scan",
                    {"x", "lambda4", "lambda1", "S(A|B)", "ppt_min", "spectrum_test", "entropy_test",
                     "ppt_test"},
                    {}};
  std::optional<double> last_spectrum_pass;
  std::optional<double> first_spectrum_fail;
  std::optional<double> last_ppt_pass;
  std::optional<double> first_ppt_fail;
  bool agree = true;
  for (const auto& row : rows) {
    table.rows.push_back({row.x, row.conditional_spectrum[0], row.conditional_spectrum[3],
                          row.conditional_entropy, row.min_ppt_eigenvalue, row.spectrum_test_pass,
                          row.entropy_test_pass, row.ppt_pass});
    if (row.spectrum_test_pass) last_spectrum_pass = row.x;
    else if (!first_spectrum_fail) first_spectrum_fail = row.x;
    if (row.ppt_pass) last_ppt_pass = row.x;
    else if (!first_ppt_fail) first_ppt_fail = row.x;
    agree = agree && row.spectrum_test_pass == row.ppt_pass;
  }
  auto opt = [](const std::optional<double>& v) -> ReportValue {
    return v ? ReportValue(*v) : ReportValue(std::string("none"));
  };
  r.sections.push_back({"summary",
                        {{"rows", static_cast<std::int64_t>(rows.size())},
                         {"spectrum_last_pass", opt(last_spectrum_pass)},
                         {"spectrum_first_fail", opt(first_spectrum_fail)},
                         {"ppt_last_pass", opt(last_ppt_pass)},
                         {"ppt_first_fail", opt(first_ppt_fail)},
                         {"spectrum_ppt_agree", agree}}});
  r.tables.push_back(std::move(table));
  return r;
}

Report cmd_protocol(std::string_view name, double tol) {
  ProtocolLedger ledger;
  if (name == "teleport") {
    ledger = run_teleportation();
  } else if (name == "superdense") {
    ledger = run_superdense();
  } else {
    throw Error(ErrorCode::UnknownProtocol, std::string(name));
  }
  const std::string params = "protocol " + std::string(name);
  StateInput pseudo{werner_state(0.0), params, digest_hex(params)};
  Report r = base_report("protocol", pseudo, tol);
  for (const auto& entry : ledger.entries) r.sections.push_back(ledger_section(entry));

  ReportSection notes{"annotations", {}};
  for (std::size_t k = 0; k < ledger.annotations.size(); ++k)
    notes.fields.push_back({"note " + std::to_string(k + 1), ledger.annotations[k]});
  r.sections.push_back(std::move(notes));

  ReportTable checks{"checks", {"stage", "check", "value", "expected", "tolerance", "result"}, {}};
  for (const auto& c : ledger.checks)
    checks.rows.push_back({std::string(to_string(c.stage)), c.name, c.value, c.expected,
                           sci(c.tolerance), c.pass()});
  r.tables.push_back(std::move(checks));

  r.sections.push_back({"summary", {{"max_residual", ledger.max_residual()}, {"ledger", ledger.holds(tol)}}});
  if (!ledger.holds(tol)) r.status = "violation: ledger does not balance";
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional and mutual entropy toolkit for bipartite quantum states", "qent"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string preset;
  std::string path;
  std::optional<double> x;
  std::optional<double> tol;
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 11;
  std::string protocol;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--tol", tol, "verdict / bookkeeping tolerance");
  };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("input", path, "state file");
    sub->add_option("--preset", preset, "epr, classical, independent or werner");
    sub->add_option("--x", x, "Werner singlet fraction");
  };

  auto* entropy = app.add_subcommand("entropy", "entropies and Venn diagram of a bipartite state");
  add_state(entropy);
  add_common(entropy);
  auto* separability = app.add_subcommand("separability", "conditional-spectrum, entropy and PPT tests");
  add_state(separability);
  add_common(separability);
  auto* scan = app.add_subcommand("werner-scan", "separability tests across Werner states");
  scan->add_option("--min", min, "smallest x");
  scan->add_option("--max", max, "largest x");
  scan->add_option("--steps", steps, "number of grid points");
  add_common(scan);
  auto* proto = app.add_subcommand("protocol", "entropy ledger of teleportation or superdense coding");
  proto->add_option("name", protocol, "teleport or superdense")
      ->required()
      ->check(CLI::IsMember({"teleport", "superdense"}));
  add_common(proto);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const ReportFormat fmt_kind = format == "structured" ? ReportFormat::Structured : ReportFormat::Table;
  try {
    auto state_input = [&]() {
      if (!preset.empty() && !path.empty()) throw Error(ErrorCode::FlagError, "give either an input file or --preset");
      if (!preset.empty()) return preset_input(preset, x);
      if (!path.empty()) return file_input(path);
      throw Error(ErrorCode::FlagError, "an input file or --preset is required");
    };
    Report report;
    if (entropy->parsed()) {
      report = cmd_entropy(state_input(), tol.value_or(kVennTol));
    } else if (separability->parsed()) {
      report = cmd_separability(state_input(), tol.value_or(kVerdictTol));
    } else if (scan->parsed()) {
      report = cmd_werner_scan(min, max, steps, tol.value_or(kVerdictTol));
    } else {
      report = cmd_protocol(protocol, tol.value_or(kLedgerTol));
    }
    out << render(report, fmt_kind);
    return report.status == "ok" ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status_for(e);
  }
}

}  // namespace qent::cli
