#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opchain/gamma.hpp"
#include "opchain/io.hpp"
#include "opchain/report.hpp"

namespace opchain {

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"theorem33", "gccs",     "kernel_invariance", "quasi_orth",
                                              "lu",        "laguerre", "moments"};
  return names;
}

struct VerifyOptions {
  std::string suite = "all";
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  std::optional<Corruption> corruption;
};

struct SuiteResult {
  std::string suite;
  std::size_t n = 0;
  /// Random gamma prefixes drawn for this suite, kept for replay.
  std::vector<std::vector<Rational>> samples;
  std::vector<IdentityReport> reports;

  bool ok() const;
};

struct VerifyResult {
  VerifyOptions options;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// gamma_1..gamma_len with gamma_k = p/q, q in [1, 64], p in [1, 3q]. The
/// draws use plain modulo reduction of mt19937_64 output so that the bytes are
/// the same on every standard library.
std::vector<Rational> random_gamma(std::mt19937_64& rng, std::size_t len);

/// Throws InvalidArgument for an unknown suite.
SuiteResult run_suite(const std::string& suite, const VerifyOptions& options);
VerifyResult run_verify(const VerifyOptions& options);

io::json to_json(const SuiteResult& result);
io::json to_json(const VerifyResult& result);

}  // namespace opchain
