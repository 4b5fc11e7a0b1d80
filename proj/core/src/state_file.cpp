#include "qent/state_file.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qent/error.hpp"

namespace qent {

namespace {

constexpr std::string_view kFormatTag = "qent-state";

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number_at(const Json& value, const char* what) {
  if (!value.is_number()) fail(std::string(what) + " must be a number");
  return value.get<double>();
}

}  // namespace

DensityOperator parse_state(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("state document must be an object");
  if (!doc.contains("format") || doc["format"] != kFormatTag) fail("missing or wrong format tag");
  if (!doc.contains("version") || !doc["version"].is_number_integer()) fail("missing version");
  if (doc["version"].get<int>() != kStateFileVersion) {
    fail("unsupported version " + doc["version"].dump());
  }

  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) fail("dims must be a nonempty array");
  std::vector<std::size_t> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() <= 0) fail("dims must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) fail("labels must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) fail("matrix must be an array");
  const std::size_t dim = product_of(dims);
  const auto& entries = doc["matrix"];
  if (entries.size() != dim * dim) {
    fail("matrix has " + std::to_string(entries.size()) + " entries, expected " +
         std::to_string(dim * dim));
  }
  std::vector<Complex> values;
  values.reserve(dim * dim);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2) fail("matrix entries must be [real, imaginary] pairs");
    values.emplace_back(number_at(e[0], "real part"), number_at(e[1], "imaginary part"));
  }
  return DensityOperator(ComplexMatrix(dim, std::move(values)), std::move(dims), std::move(labels));
}

std::string serialize_state(const DensityOperator& rho) {
  Json doc;
  doc["format"] = kFormatTag;
  doc["version"] = kStateFileVersion;
  doc["dims"] = Json(std::vector<std::size_t>(rho.dims().begin(), rho.dims().end()));
  doc["labels"] = Json(rho.labels());
  Json entries = Json::array();
  for (const auto& z : rho.matrix().entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  doc["matrix"] = std::move(entries);
  return doc.dump() + "\n";
}

DensityOperator load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

void save_state(const DensityOperator& rho, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << serialize_state(rho);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", hash);
}

}  // namespace qent
