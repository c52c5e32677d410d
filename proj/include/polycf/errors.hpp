#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycf {

enum class ErrorKind {
  PoleAtArgument,
  ZeroFunction,
  NoSuchTerm,
  ZeroPartialNumerator,
  ZeroScaleFactor,
  RepeatedValue,
  ZeroTerm,
  UnitTerm,
  DegenerateTerm,
  ZeroEvenDenominator,
  ZeroOddDenominator,
  TransformDoesNotExist,
  NonzeroW0,
  ZeroW,
  HypothesisViolation,
  NonIntegerTerms,
  EmptyRange,
  UnsupportedConstant,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Per-index failures (degenerate
/// transform terms, poles, zero numerators) carry the first offending index.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<long> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<long> index_;
};

}  // namespace polycf
