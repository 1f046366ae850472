#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opchain {

enum class Errc {
  StreamExhausted,
  NonEvenPolynomial,
  NonOddPolynomial,
  NonPositiveGamma,
  NotAChainSequence,
  InvalidGamma1,
  PositivityBreak,
  PoleAtB,
  ZeroDenominator,
  NotMinimal,
  ParameterOutOfRange,
  Gamma1Zero,
  DegenerateFavard,
  PivotBreakdown,
  NonPositiveA2,
  LengthMismatch,
  DegreeViolation,
  AlphaOutOfRange,
  DegreeBeyondFamily,
  NonPositiveInput,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// True for failures caused by the numbers themselves (breakdowns) rather than
/// by malformed or out-of-domain input.
bool is_numerical(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::optional<std::size_t> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  /// Offending index (1-based where the underlying sequence is), if any.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace opchain
