#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opchain/gamma.hpp"
#include "opchain/recurrence.hpp"
#include "opchain/report.hpp"

namespace opchain {

/// nu~_1..nu~_{2N}: the pairs {gamma_{2k-1}, gamma_{2k}} interchanged, i.e.
/// nu~_{2j} = gamma_{2j-1} and nu~_{2j+1} = gamma_{2j+2}.
SymmetricSystem<Rational> swapped_nu(const GammaSeq& gamma, std::size_t N);

/// OPS of the complementary chain: P~_1 = x - gamma_1 (b~_1 = gamma_1),
/// b~_{n+1} = gamma_{2n+1} + gamma_{2n+2}, a~_n^2 = gamma_{2n-1} gamma_{2n+2}.
/// Throws Gamma1Zero when gamma_1 = 0.
ThreeTermSystem<Rational> tilde_system(const GammaSeq& gamma);

/// OPS of the generalised complementary chain: the tilde recurrence run from
/// m = 0, so P^_1 = x - (gamma_1 + gamma_2).
struct HatSystem {
  ThreeTermSystem<Rational> system;
  /// Set to 1 when gamma_1 = 0 makes a^_1^2 vanish.
  std::optional<std::size_t> favard_degenerate_at;

  void require_favard() const;
};

HatSystem hat_system(const GammaSeq& gamma);

/// Kernel polynomials of the tilde family:
/// K~_m = [x - (gamma_{2m-1} + gamma_{2m+2})] K~_{m-1} - gamma_{2m-1} gamma_{2m} K~_{m-2}.
ThreeTermSystem<Rational> tilde_kernel_system(const GammaSeq& gamma);

/// First n <= N with gamma_{2n+1} - gamma_{2n-1} != gamma_{2n+2} - gamma_{2n}.
std::optional<std::size_t> kernel_invariance_violation(const GammaSeq& gamma, std::size_t N);
inline bool kernel_invariance_condition(const GammaSeq& gamma, std::size_t N) {
  return !kernel_invariance_violation(gamma, N).has_value();
}

/// Coefficient-level comparison of tilde_kernel_system and kernel_system for
/// b_1..b_N and a_1^2..a_N^2. `corruption` perturbs the gamma of the tilde side.
IdentityReport kernel_invariance_check(const GammaSeq& gamma, std::size_t N,
                                       const std::optional<Corruption>& corruption = std::nullopt);

enum class UnifiedVariant { TildeP, TildeK };

/// T_n = (x - xi_n) T_{n-1} - eta_n T_{n-2}; xi[0] holds xi_1.
struct UnifiedCoefficients {
  std::vector<Rational> xi;
  std::vector<Rational> eta;

  /// The same recurrence as a ThreeTermSystem (b_n = xi_n, a_n^2 = eta_{n+1}).
  ThreeTermSystem<Rational> system() const;
};

/// xi_1..xi_N and eta_1..eta_N assembled from the b^(1), b^(2), (a^2)^(1),
/// (a^2)^(2) streams. eta_1 of TildeP multiplies T_{-1} = 0 and is stored as 0.
UnifiedCoefficients unified_coefficients(const GammaSeq& gamma, UnifiedVariant variant, std::size_t N);

/// Q_{n+1} = (x - gamma_{2n+3} - gamma_{2n+4}) Q_n - gamma_{2n+2} gamma_{2n+3} Q_{n-1}.
ThreeTermSystem<Rational> q_system(const GammaSeq& gamma);

/// U_1 = x - gamma_3, sigma_{n+1} = gamma_{2n+3} + gamma_{2n+2},
/// mu_n = gamma_{2n+1} gamma_{2n+2}. Throws DegenerateFavard if a finite
/// gamma yields mu_n <= 0.
ThreeTermSystem<Rational> u_system(const GammaSeq& gamma);

/// x Q_m = U_{m+1} + gamma_{2m+3} U_m, U_{m+1}(0) = (-1)^{m+1} gamma_{2m+3} ... gamma_3
/// and U_m = K_m + gamma_2 K^(1)_m for m = 0..n.
IdentityReport q_u_identity_check(const GammaSeq& gamma, std::size_t n,
                                  const std::optional<Corruption>& corruption = std::nullopt);

/// x^2 Q_n - gamma_2 x [K^(1)_{n+1} + gamma_{2n+3} K^(1)_n]
///   = P_{n+2} + (gamma_{2n+3} + gamma_{2n+4}) P_{n+1} + gamma_{2n+2} gamma_{2n+3} P_n
/// with P the split-branch OPS. `corruption` perturbs the right-hand side's gamma.
IdentityReport quasi_orthogonality_check(const GammaSeq& gamma, std::size_t n,
                                         const std::optional<Corruption>& corruption = std::nullopt);

/// even_part(S~_{2n}) = P~_n and odd_part(S~_{2n+1}) = K~_n for n = 0..N.
/// With swap = false the unperturbed S (nu = gamma) is compared against the
/// split-branch P and kernel_system instead.
IdentityReport theorem33_check(const GammaSeq& gamma, std::size_t N, bool swap = true,
                               const std::optional<Corruption>& corruption = std::nullopt);

/// P~ and P^ share the recurrence for n >= 1 and P~_1 - P^_1 = gamma_2.
IdentityReport corecursive_check(const GammaSeq& gamma, std::size_t N,
                                 const std::optional<Corruption>& corruption = std::nullopt);

/// T_n from unified_coefficients equals P~_n (TildeP) and K~_n (TildeK), n <= N.
IdentityReport unified_check(const GammaSeq& gamma, std::size_t N,
                             const std::optional<Corruption>& corruption = std::nullopt);

enum class InterlacingVerdict { Excluded, ObservedNumerically, Undetermined };

std::string to_string(InterlacingVerdict verdict);

struct ZeroSumReport {
  std::size_t n = 0;
  std::vector<double> zeros_p;
  std::vector<double> zeros_tilde;
  double sum_p = 0.0;
  double sum_tilde = 0.0;
  /// Exact traces of the truncated Jacobi matrices.
  Rational trace_p;
  Rational trace_tilde;
  /// gamma_2 + gamma_3 + ... + gamma_{2n} and gamma_1 + gamma_3 + ... + gamma_{2n}.
  Rational gamma_sum_p;
  Rational gamma_sum_tilde;
  bool traces_match_gamma_sums = false;
  bool sums_within_tolerance = false;
  InterlacingVerdict verdict = InterlacingVerdict::Undetermined;
  std::string reason;
  /// j with sign(gamma_1 - gamma_2) = sign(x_{n,j} - x~_{n,j}).
  std::optional<std::size_t> obstruction_witness;
};

ZeroSumReport zero_sum_interlacing_report(const GammaSeq& gamma, std::size_t n, double tol);

}  // namespace opchain
