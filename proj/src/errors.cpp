#include "plancherel/errors.hpp"

namespace plancherel {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::EigensplitFailure: return "EigensplitFailure";
    case ErrorKind::ToleranceViolation: return "ToleranceViolation";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::IndexTooLarge: return "IndexTooLarge";
    case ErrorKind::ChainNotNested: return "ChainNotNested";
    case ErrorKind::ChainNotSymmetric: return "ChainNotSymmetric";
    case ErrorKind::ChainNotExhaustive: return "ChainNotExhaustive";
    case ErrorKind::DegenerateTestFunctions: return "DegenerateTestFunctions";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& spec)
    : Error(ErrorKind::ParseError,
            "at position " + std::to_string(position) + " in '" + spec + "': expected " + expected),
      position_(position),
      expected_(expected) {}

}  // namespace plancherel
