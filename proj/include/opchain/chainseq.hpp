#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opchain/gamma.hpp"
#include "opchain/recurrence.hpp"

namespace opchain {

/// d_1, d_2, ... ; whether parameters exist is computed, never assumed.
template <ScalarType T>
struct ChainSequence {
  Stream<T> d;
};

/// g_0, g_1, ... with d_n = (1 - g_{n-1}) g_n.
template <ScalarType T>
struct ParameterSeq {
  Stream<T> g;
  /// Backward-iteration horizon when the sequence approximates maximal parameters.
  std::optional<std::size_t> horizon;

  bool minimal() const { return is_zero(g.at(0)); }
};

template <ScalarType T>
struct ChainWithParameters {
  ChainSequence<T> chain;
  ParameterSeq<T> params;
};

/// m_0 = 0, m_n = d_n / (1 - m_{n-1}) for n = 1..N. Throws NotAChainSequence(n)
/// at the first m_n outside (0, 1).
template <ScalarType T>
ParameterSeq<T> minimal_parameters(const ChainSequence<T>& d, std::size_t N) {
  std::vector<T> m{T(0)};
  m.reserve(N + 1);
  for (std::size_t n = 1; n <= N; ++n) {
    const T dn = d.d.at(n);
    if (dn <= T(0)) throw Error(Errc::NotAChainSequence, "chain entries must be positive", n);
    T mn = dn / (T(1) - m.back());
    if (mn <= T(0) || mn >= T(1)) throw Error(Errc::NotAChainSequence, "minimal parameter left (0,1)", n);
    m.push_back(std::move(mn));
  }
  return {Stream<T>::finite(std::move(m), 0), std::nullopt};
}

/// Approximate maximal parameters M_0..M_N by backward iteration
/// M_{n-1} = 1 - d_n / M_n from M_{end} = 1, where end = N + horizon, or the
/// last available index of a finite chain. Entries are clamped below by m_n.
template <ScalarType T>
ParameterSeq<T> maximal_parameters(const ChainSequence<T>& d, std::size_t N, std::size_t horizon) {
  std::size_t end = N + horizon;
  if (const auto last = d.d.last(); last && *last < end) end = std::max(*last, N);
  const auto m = minimal_parameters(d, end);

  std::vector<T> M(end + 1, T(1));
  for (std::size_t n = end; n >= 1; --n) {
    T prev = T(1) - d.d.at(n) / M[n];
    if (prev < m.g.at(n - 1)) prev = m.g.at(n - 1);
    M[n - 1] = std::move(prev);
  }
  M.resize(N + 1);
  return {Stream<T>::finite(std::move(M), 0), end - N};
}

/// omega_n(t) = a_n^2 / ((t - b_n)(t - b_{n+1})), n = 1..N.
template <ScalarType T>
ChainSequence<T> chain_at(const ThreeTermSystem<T>& sys, const T& t, std::size_t N) {
  std::vector<T> d;
  d.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const T lo = t - sys.b.at(n);
    const T hi = t - sys.b.at(n + 1);
    if (is_zero(lo)) throw Error(Errc::PoleAtB, "t equals b_n", n);
    if (is_zero(hi)) throw Error(Errc::PoleAtB, "t equals b_n", n + 1);
    d.push_back(sys.a2.at(n) / (lo * hi));
  }
  return {Stream<T>::finite(std::move(d), 1)};
}

/// d_n(t) from ratios of P_n(t); algebraically identical to chain_at.
template <ScalarType T>
ChainSequence<T> chain_at_via_polynomials(const ThreeTermSystem<T>& sys, const T& t, std::size_t N) {
  // P_0(t) .. P_{N+1}(t) by the scalar recurrence.
  std::vector<T> p{T(1)};
  T prev(0);
  for (std::size_t k = 0; k <= N && N > 0; ++k) {
    T next = (t - sys.b.at(k + 1)) * p.back();
    if (k >= 1) next -= sys.a2.at(k) * prev;
    prev = p.back();
    p.push_back(std::move(next));
  }
  std::vector<T> d;
  d.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const T lo = (t - sys.b.at(n)) * p[n - 1];
    const T hi = (t - sys.b.at(n + 1)) * p[n];
    if (is_zero(lo) || is_zero(hi)) throw Error(Errc::ZeroDenominator, "vanishing P_n(t) or t - b_n", n);
    d.push_back(p[n] / lo * (T(1) - p[n + 1] / hi));
  }
  return {Stream<T>::finite(std::move(d), 1)};
}

namespace detail {

template <ScalarType T>
ChainWithParameters<T> chain_from_parameters(std::vector<T> k) {
  std::vector<T> d;
  for (std::size_t n = 1; n < k.size(); ++n) d.push_back((T(1) - k[n - 1]) * k[n]);
  return {{Stream<T>::finite(std::move(d), 1)}, {Stream<T>::finite(std::move(k), 0), std::nullopt}};
}

template <ScalarType T>
std::size_t finite_last(const ParameterSeq<T>& g) {
  const auto last = g.g.last();
  if (!last) throw Error(Errc::InvalidArgument, "parameter sequence must be finite");
  return *last;
}

}  // namespace detail

/// Complementary chain: minimal parameters k_0 = 0, k_n = 1 - m_n.
template <ScalarType T>
ChainWithParameters<T> complementary(const ParameterSeq<T>& m) {
  if (!m.minimal()) throw Error(Errc::NotMinimal, "complementary chain needs minimal parameters (g_0 = 0)");
  const std::size_t last = detail::finite_last(m);
  std::vector<T> k{T(0)};
  for (std::size_t n = 1; n <= last; ++n) k.push_back(T(1) - m.g.at(n));
  return detail::chain_from_parameters(std::move(k));
}

/// Generalised complementary chain: parameters k'_n = 1 - g_n for all n >= 0.
/// With g_0 = 0 the value k'_0 = 1 is not an admissible parameter, and the
/// construction reduces to complementary(g).
template <ScalarType T>
ChainWithParameters<T> generalised_complementary(const ParameterSeq<T>& g) {
  const std::size_t last = detail::finite_last(g);
  const T g0 = g.g.at(0);
  if (g0 < T(0) || g0 >= T(1)) throw Error(Errc::ParameterOutOfRange, "g_0 must lie in [0,1)", 0);
  for (std::size_t n = 1; n <= last; ++n) {
    const T gn = g.g.at(n);
    if (gn <= T(0) || gn >= T(1)) throw Error(Errc::ParameterOutOfRange, "g_n must lie in (0,1)", n);
  }
  if (is_zero(g0)) return complementary(g);
  std::vector<T> k;
  for (std::size_t n = 0; n <= last; ++n) k.push_back(T(1) - g.g.at(n));
  return detail::chain_from_parameters(std::move(k));
}

enum class SppcsVerdict { UniqueByWall, ComplementIsSPPCS, Inconclusive };

struct SppcsResult {
  SppcsVerdict verdict = SppcsVerdict::Inconclusive;
  std::size_t window = 0;
  /// First n violating 0 < m_n < 1/2.
  std::optional<std::size_t> complement_witness;
  /// First n >= 1 violating m_n / (1 - m_n) > n / (n + 1).
  std::optional<std::size_t> wall_witness;

  std::string label() const;
};

/// Finite-window SPPCS evidence from minimal parameters m_0..m_N, checked in order:
/// UniqueByWall: m_n/(1 - m_n) > n/(n + 1) for 1 <= n <= N, so the products in
/// Wall's series exceed 1/(n + 1) and the series diverges.
/// ComplementIsSPPCS: 0 < m_n < 1/2 for 1 <= n <= N.
SppcsResult wall_sppcs_test(const ParameterSeq<Rational>& m, std::size_t N);

// gamma <-> recurrence coefficients --------------------------------------

/// b_1 = gamma_1 + gamma_2, b_{n+1} = gamma_{2n+1} + gamma_{2n+2},
/// a_n^2 = gamma_{2n} gamma_{2n+1}.
ThreeTermSystem<Rational> system_from_gamma(const GammaSeq& gamma);

/// The OPS whose symmetric split uses nu = gamma: system_from_gamma with
/// gamma_1 taken as 0 (b_1 = gamma_2).
ThreeTermSystem<Rational> split_system(const GammaSeq& gamma);

/// gamma_1..gamma_{last} recovered from (b, a^2) given gamma_1.
/// Throws InvalidGamma1 unless 0 <= gamma_1 < b_1 and PositivityBreak(n) when
/// a recovered entry is not positive.
GammaSeq recover_gamma(const ThreeTermSystem<Rational>& sys, const Rational& gamma1, std::size_t last);

/// gamma_1..gamma_{2N+2}.
GammaSeq gamma_from_system(const ThreeTermSystem<Rational>& sys, const Rational& gamma1, std::size_t N);

/// g_n = gamma_{2n+1} / b_{n+1}, n = 0..N (minimal iff gamma_1 = 0).
ParameterSeq<Rational> parameters_from_gamma(const GammaSeq& gamma, std::size_t N);

/// Upper end of a candidate interval; nullopt means +infinity.
using UpperBound = std::optional<Rational>;

struct IntervalVerdict {
  bool pass = false;
  std::size_t window = 0;
  /// "b_out_of_range", "chain_at_a" or "chain_at_b" on failure.
  std::string witness_kind;
  std::size_t witness_index = 0;

  std::string label() const;
};

/// Finite-window test that the true interval of orthogonality lies in (a, b):
/// b_1..b_{N+1} in (a, b) and omega_n(a), omega_n(b) chain sequences up to N.
IntervalVerdict true_interval_predicate(const ThreeTermSystem<Rational>& sys, const Rational& a, const UpperBound& b,
                                        std::size_t N);

}  // namespace opchain
