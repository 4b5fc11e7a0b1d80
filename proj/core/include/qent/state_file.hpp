#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qent/density_operator.hpp"

namespace qent {

/// Current state-file format version.
inline constexpr int kStateFileVersion = 1;

/// Parses a state document:
///
///   {"format": "qent-state", "version": 1, "dims": [2, 2], "labels": ["A", "B"],
///    "matrix": [[re, im], ...]}
///
/// `matrix` lists the dim*dim entries row-major. Throws ParseError for malformed
/// documents and InvalidDensity (or DimensionMismatch) when the matrix is not a
/// density operator.
DensityOperator parse_state(std::string_view document);

/// Canonical document: fixed key order, shortest round-trip decimals, trailing newline.
std::string serialize_state(const DensityOperator& rho);

DensityOperator load_state(const std::filesystem::path& path);
void save_state(const DensityOperator& rho, const std::filesystem::path& path);

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace qent
