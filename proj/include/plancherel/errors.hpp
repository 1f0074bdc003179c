#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plancherel {

enum class ErrorKind {
  ClosureExceedsCap,
  InvalidPermutation,
  ParseError,
  UnsupportedParameter,
  OrderTooLarge,
  EigensplitFailure,
  ToleranceViolation,
  GroupMismatch,
  SubgroupMismatch,
  IndexOutOfRange,
  NonIntegralMultiplicity,
  IndexTooLarge,
  ChainNotNested,
  ChainNotSymmetric,
  ChainNotExhaustive,
  DegenerateTestFunctions,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Group-spec parse failure. position() is a 0-based byte offset into the
/// spec string where the parser stopped.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& expected, const std::string& spec);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace plancherel
