#include "opchain/recurrence.hpp"

#include "opchain/chainseq.hpp"

namespace opchain {

ThreeTermSystem<Rational> kernel_system(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  auto b = Stream<Rational>::generated([gamma](std::size_t k) { return gamma.at(2 * k) + gamma.at(2 * k + 1); }, 1,
                                       derived_last(gamma, 2, 1));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n + 1) * gamma.at(2 * n + 2); }, 1, derived_last(gamma, 2, 2));
  return {std::move(b), std::move(a2), std::nullopt};
}

IdentityReport kernel_identity_check(const GammaSeq& gamma, std::size_t n, const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "kernel_identity";
  report.branch = gamma.at(1).is_zero() ? "split (b1 = gamma2)" : "split (b1 = gamma2; input gamma1 not used)";

  const auto P = monic_sequence(split_system(gamma), n + 1);
  const auto K = monic_sequence(kernel_system(apply_corruption(gamma, corruption)), n);
  for (std::size_t m = 0; m <= n; ++m) {
    report.record("x K_m = P_{m+1} + gamma_{2m+2} P_m", m, K[m].times_x(), P[m + 1] + P[m] * gamma.at(2 * m + 2));
    if (m >= 1) report.record("K_m = P_m - gamma_{2m+1} K_{m-1}", m, K[m], P[m] - K[m - 1] * gamma.at(2 * m + 1));
  }
  return report;
}

}  // namespace opchain
