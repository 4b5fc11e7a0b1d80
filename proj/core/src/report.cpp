#include "qent/report.hpp"

#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace qent {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string render_value(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "pass" : "fail";
        } else {
          return std::to_string(x);
        }
      },
      v);
}

// JSON literal for a value: strings quoted, doubles as 9-decimal numbers.
std::string json_value(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return quoted(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(x) ? format_number(x) : quoted(format_number(x));
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return std::to_string(x);
        }
      },
      v);
}

}  // namespace

std::string format_number(double value) {
  std::string s = fmt::format("{:.9f}", value);
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

std::string render_table(const Report& report) {
  std::string out;
  out += fmt::format("command: {}\n", report.command);
  out += fmt::format("input: {}\n", report.input);
  out += fmt::format("digest: {}\n", report.digest);
  for (const auto& [key, value] : report.settings) out += fmt::format("setting {} = {}\n", key, value);
  for (const auto& section : report.sections) {
    out += fmt::format("\n[{}]\n", section.name);
    for (const auto& field : section.fields)
      out += fmt::format("  {} = {}\n", field.key, render_value(field.value));
  }
  for (const auto& table : report.tables) {
    out += fmt::format("\n[{}]\n#", table.name);
    for (const auto& c : table.columns) out += " " + c;
    out += "\n";
    for (const auto& row : table.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + render_value(row[k]);
      out += "\n";
    }
  }
  out += fmt::format("\nstatus: {}\n", report.status);
  return out;
}

std::string render_structured(const Report& report) {
  std::string out = "{\n";
  out += fmt::format("  \"command\": {},\n", quoted(report.command));
  out += fmt::format("  \"input\": {},\n", quoted(report.input));
  out += fmt::format("  \"digest\": {},\n", quoted(report.digest));
  out += "  \"settings\": {";
  for (std::size_t k = 0; k < report.settings.size(); ++k)
    out += fmt::format("{}{}: {}", k ? ", " : "", quoted(report.settings[k].first),
                       quoted(report.settings[k].second));
  out += "},\n  \"sections\": [";
  for (std::size_t s = 0; s < report.sections.size(); ++s) {
    const auto& section = report.sections[s];
    out += fmt::format("{}\n    {{\"name\": {}, \"fields\": {{", s ? "," : "", quoted(section.name));
    for (std::size_t k = 0; k < section.fields.size(); ++k)
      out += fmt::format("{}{}: {}", k ? ", " : "", quoted(section.fields[k].key),
                         json_value(section.fields[k].value));
    out += "}}";
  }
  out += report.sections.empty() ? "],\n" : "\n  ],\n";
  out += "  \"tables\": [";
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const auto& table = report.tables[t];
    out += fmt::format("{}\n    {{\"name\": {}, \"columns\": [", t ? "," : "", quoted(table.name));
    for (std::size_t k = 0; k < table.columns.size(); ++k)
      out += (k ? ", " : "") + quoted(table.columns[k]);
    out += "], \"rows\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out += r ? ",\n      [" : "\n      [";
      for (std::size_t k = 0; k < table.rows[r].size(); ++k)
        out += (k ? ", " : "") + json_value(table.rows[r][k]);
      out += "]";
    }
    out += table.rows.empty() ? "]}" : "\n    ]}";
  }
  out += report.tables.empty() ? "],\n" : "\n  ],\n";
  out += fmt::format("  \"status\": {}\n}}\n", quoted(report.status));
  return out;
}

std::string render(const Report& report, ReportFormat format) {
  return format == ReportFormat::Table ? render_table(report) : render_structured(report);
}

}  // namespace qent
