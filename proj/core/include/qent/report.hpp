#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qent {

/// Report scalar. Doubles are always rendered with 9 fractional digits.
using ReportValue = std::variant<std::string, double, std::int64_t, bool>;

struct ReportField {
  std::string key;
  ReportValue value;
};

struct ReportSection {
  std::string name;
  std::vector<ReportField> fields;
};

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<ReportValue>> rows;
};

/// Output of one CLI command. Rendering is a pure function of the contents, so equal
/// inputs and settings give byte-identical documents.
struct Report {
  std::string command;
  std::string input;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<ReportSection> sections;
  std::vector<ReportTable> tables;
  std::string status = "ok";
};

enum class ReportFormat { Table, Structured };

/// Fixed 9-decimal rendering; negative zero prints as zero.
std::string format_number(double value);

std::string render_table(const Report& report);
std::string render_structured(const Report& report);
std::string render(const Report& report, ReportFormat format);

}  // namespace qent
