#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opchain/polynomial.hpp"

namespace opchain {

/// One exact polynomial comparison at one degree.
struct IdentityCheck {
  std::string identity;
  std::size_t degree = 0;
  bool holds = false;
  /// lhs - rhs; zero when the identity holds.
  Polynomial<Rational> difference;
};

struct IdentityReport {
  std::string name;
  /// Which convention produced the reference polynomials.
  std::string branch;
  std::vector<IdentityCheck> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.holds) return false;
    }
    return true;
  }

  std::optional<IdentityCheck> first_failure() const {
    for (const auto& c : checks) {
      if (!c.holds) return c;
    }
    return std::nullopt;
  }

  void record(std::string identity, std::size_t degree, const Polynomial<Rational>& lhs, const Polynomial<Rational>& rhs) {
    auto diff = lhs - rhs;
    const bool holds = diff.is_zero();
    checks.push_back({std::move(identity), degree, holds, std::move(diff)});
  }
};

}  // namespace opchain
