#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opchain/rational.hpp"
#include "opchain/stream.hpp"

namespace opchain {

/// Decomposition gamma_1, gamma_2, ... of a recurrence with true interval in
/// [0, inf): b_{n+1} = gamma_{2n+1} + gamma_{2n+2}, a_n^2 = gamma_{2n} gamma_{2n+1}.
/// Reading an entry checks gamma_1 >= 0 and gamma_k > 0 for k >= 2.
class GammaSeq {
 public:
  GammaSeq() = default;
  explicit GammaSeq(Stream<Rational> gamma, std::optional<ClosedForm> closed_form = std::nullopt);
  static GammaSeq finite(std::vector<Rational> values);

  Rational at(std::size_t k) const;
  Rational operator[](std::size_t k) const { return at(k); }
  bool has(std::size_t k) const { return gamma_.has(k); }
  /// Last available index (nullopt for closed forms).
  std::optional<std::size_t> last() const { return gamma_.last(); }

  /// Checks the positivity invariant over [1, upto] (or the whole finite range).
  void validate(std::optional<std::size_t> upto = std::nullopt) const;

  std::vector<Rational> take(std::size_t last) const;

  GammaSeq with_gamma1(Rational gamma1) const;
  /// Copy with gamma_k replaced; the replacement is not validated.
  GammaSeq with_entry(std::size_t k, Rational value) const;

  const Stream<Rational>& stream() const { return gamma_; }
  const std::optional<ClosedForm>& closed_form() const { return closed_form_; }

 private:
  Stream<Rational> gamma_;
  std::optional<ClosedForm> closed_form_;
};

/// Test hook: perturb one gamma entry on one side of an identity.
struct Corruption {
  std::size_t index = 0;
  Rational delta{1};
};

GammaSeq apply_corruption(const GammaSeq& gamma, const std::optional<Corruption>& corruption);

/// Largest index n such that indices up to `scale * n + offset` are available.
inline std::optional<std::size_t> derived_last(const GammaSeq& gamma, std::size_t scale, std::size_t offset) {
  const auto last = gamma.last();
  if (!last) return std::nullopt;
  if (*last < offset) return 0;
  return (*last - offset) / scale;
}

}  // namespace opchain
