#include "polycf/errors.hpp"

namespace polycf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAtArgument: return "PoleAtArgument";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::NoSuchTerm: return "NoSuchTerm";
    case ErrorKind::ZeroPartialNumerator: return "ZeroPartialNumerator";
    case ErrorKind::ZeroScaleFactor: return "ZeroScaleFactor";
    case ErrorKind::RepeatedValue: return "RepeatedValue";
    case ErrorKind::ZeroTerm: return "ZeroTerm";
    case ErrorKind::UnitTerm: return "UnitTerm";
    case ErrorKind::DegenerateTerm: return "DegenerateTerm";
    case ErrorKind::ZeroEvenDenominator: return "ZeroEvenDenominator";
    case ErrorKind::ZeroOddDenominator: return "ZeroOddDenominator";
    case ErrorKind::TransformDoesNotExist: return "TransformDoesNotExist";
    case ErrorKind::NonzeroW0: return "NonzeroW0";
    case ErrorKind::ZeroW: return "ZeroW";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NonIntegerTerms: return "NonIntegerTerms";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::UnsupportedConstant: return "UnsupportedConstant";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<long> index) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (index) out += " (index " + std::to_string(*index) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<long> index)
    : std::runtime_error(decorate(kind, message, index)),
      kind_(kind),
      index_(index) {}

}  // namespace polycf
