#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opchain/gamma.hpp"
#include "opchain/recurrence.hpp"

namespace opchain {

/// Monic Laguerre L^(alpha): b_k = 2k + alpha - 1, a_n^2 = n (n + alpha).
/// Throws AlphaOutOfRange unless alpha > -1.
ThreeTermSystem<Rational> laguerre_system(const Rational& alpha);

/// gamma_1 = 0: gamma_{2n} = n + alpha, gamma_{2n+1} = n (decomposes L^(alpha)).
/// gamma_1 = 1: gamma_{2n} = n + alpha, gamma_{2n+1} = n + 1 (decomposes the E family).
GammaSeq laguerre_gamma(const Rational& alpha, const Rational& gamma1);

/// E_{n+1} = (x - (2n + alpha + 2)) E_n - (n + 1)(n + alpha) E_{n-1}, i.e.
/// b_k = 2k + alpha, a_n^2 = (n + 1)(n + alpha).
ThreeTermSystem<Rational> e_family_system(const Rational& alpha);

/// The same recurrence obtained as the first associated family of
/// L^(alpha - 1): b_k -> b_{k+1}, a_n^2 -> a_{n+1}^2.
ThreeTermSystem<Rational> laguerre_assoc1_system(const Rational& alpha);

/// b_k -> b_{k+1}, a_n^2 -> a_{n+1}^2.
ThreeTermSystem<Rational> associated_shift(const ThreeTermSystem<Rational>& sys);

// Routh-Romanovski ---------------------------------------------------------

/// N_{n+1} = (A_n x + B_n) N_n - C_n N_{n-1}.
struct RRPieces {
  Rational A;
  Rational B;
  Rational C;
};

struct RRParams {
  Rational p;
  /// Largest degree n for which N_n is served (all denominators nonzero and
  /// a_k^2 > 0 for k < n).
  std::size_t n_max = 0;
};

/// Scan cap for parameters whose window never closes.
inline constexpr std::size_t kRRScanCap = 4096;

RRParams rr_params(const Rational& p);

/// A_n = (p-2n-2)(p-2n-1)/(p-n-1), B_n = -p(p-2n-1)/((p-n-1)(p-2n)),
/// C_n = n(p-2n-2)/((p-n-1)(p-2n)). Throws ZeroDenominator.
RRPieces rr_pieces(const Rational& p, std::size_t n);

struct MonicStep {
  Rational b;                  // b_{n+1}
  std::optional<Rational> a2;  // a_n^2, absent for n = 0
};

/// b_{n+1} = -B_n / A_n and a_n^2 = C_n / (A_n A_{n-1}) for any pieces.
MonicStep monicize(const RRPieces& current, const std::optional<RRPieces>& previous);

/// Throws ZeroDenominator when a denominator vanishes at n, otherwise
/// DegreeBeyondFamily for n >= n_max.
MonicStep rr_monicize(const RRParams& params, std::size_t n);

/// b_1..b_{n_max}, a_1^2..a_{n_max-1}^2.
ThreeTermSystem<Rational> routh_romanovski_system(const Rational& p);

// Christoffel pairs of symmetric measures ---------------------------------

/// l_0 = 1, l_n > 1 for n >= 1, with the Christoffel constant k > 0.
class LSequence {
 public:
  /// Throws NonPositiveInput when l_0 != 1, some l_n <= 1 or k <= 0.
  static LSequence make(std::vector<Rational> l, Rational k);

  const Rational& at(std::size_t n) const;
  std::size_t last() const { return l_.size() - 1; }
  const Rational& k() const { return k_; }
  const std::vector<Rational>& values() const { return l_; }

 private:
  std::vector<Rational> l_;
  Rational k_;
};

/// l_n = 1 + 4k gamma^{phi1}_{n+1} / (l_{n-1} + 1) for n = 1..N, reading
/// gamma^{phi1}_2..gamma^{phi1}_{N+1}.
LSequence l_from_gamma(const Stream<Rational>& gamma_phi1, const Rational& k, std::size_t N);

/// gamma^{phi1}_{n+1} = (l_n - 1)(l_{n-1} + 1) / 4k, n = 1..last (indices 2..last+1).
Stream<Rational> gamma_phi1_from_l(const LSequence& l);

/// gamma^{phi2}_{n+1} = (l_n - 1)(l_{n+1} + 1) / 4k, n = 1..last-1 (indices 2..last).
Stream<Rational> gamma_phi2_from_l(const LSequence& l);

/// First i >= from, with both sides defined, where gamma^{phi2}_i differs
/// from gamma^{phi1} at the pair partner of i (i + 1 for odd i, i - 1 for even i).
std::optional<std::size_t> pairwise_swap_violation(const Stream<Rational>& phi1, const Stream<Rational>& phi2,
                                                   std::size_t from = 3);

}  // namespace opchain
