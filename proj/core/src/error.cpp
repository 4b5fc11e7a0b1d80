#include "qent/error.hpp"

namespace qent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadRegister: return "BadRegister";
    case ErrorCode::LedgerViolation: return "LedgerViolation";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownProtocol: return "UnknownProtocol";
    case ErrorCode::FlagError: return "FlagError";
  }
  return "Unknown";
}

}  // namespace qent
