#include "opchain/errors.hpp"

namespace opchain {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::StreamExhausted: return "StreamExhausted";
    case Errc::NonEvenPolynomial: return "NonEvenPolynomial";
    case Errc::NonOddPolynomial: return "NonOddPolynomial";
    case Errc::NonPositiveGamma: return "NonPositiveGamma";
    case Errc::NotAChainSequence: return "NotAChainSequence";
    case Errc::InvalidGamma1: return "InvalidGamma1";
    case Errc::PositivityBreak: return "PositivityBreak";
    case Errc::PoleAtB: return "PoleAtB";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::Gamma1Zero: return "Gamma1Zero";
    case Errc::DegenerateFavard: return "DegenerateFavard";
    case Errc::PivotBreakdown: return "PivotBreakdown";
    case Errc::NonPositiveA2: return "NonPositiveA2";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegreeViolation: return "DegreeViolation";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::DegreeBeyondFamily: return "DegreeBeyondFamily";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_numerical(Errc code) noexcept {
  switch (code) {
    case Errc::NotAChainSequence:
    case Errc::PositivityBreak:
    case Errc::PoleAtB:
    case Errc::ZeroDenominator:
    case Errc::DegenerateFavard:
    case Errc::PivotBreakdown:
      return true;
    default:
      return false;
  }
}

namespace {

std::string decorate(Errc code, const std::string& message, std::optional<std::size_t> index) {
  std::string out{errc_name(code)};
  if (index) out += "(" + std::to_string(*index) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(Errc code, std::string message, std::optional<std::size_t> index)
    : std::runtime_error(decorate(code, message, index)), code_(code), index_(index) {}

}  // namespace opchain
