#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qent/density_operator.hpp"
#include "qent/report.hpp"

namespace qent::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct StateInput {
  DensityOperator state;
  std::string description;  // "preset:epr", "file:path"
  std::string digest;
};

/// epr, classical, independent, werner (requires x). Throws FlagError.
StateInput preset_input(std::string_view name, std::optional<double> x);
StateInput file_input(const std::string& path);

/// Each command returns its report; `report.status` other than "ok" maps to exit 1.
Report cmd_entropy(const StateInput& input, double tol);
Report cmd_separability(const StateInput& input, double tol);
Report cmd_werner_scan(double min, double max, std::size_t steps, double tol);
Report cmd_protocol(std::string_view name, double tol);

/// Evenly spaced grid; steps == 1 gives {min}. Throws FlagError.
std::vector<double> scan_grid(double min, double max, std::size_t steps);

/// Full command-line entry point (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qent::cli
