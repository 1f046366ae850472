#include "opchain/perturbations.hpp"

#include <cmath>

#include "opchain/chainseq.hpp"
#include "opchain/jacobi.hpp"

namespace opchain {

namespace {

void require_gamma1(const GammaSeq& gamma) {
  if (gamma.at(1).is_zero()) throw Error(Errc::Gamma1Zero, "the complementary-chain construction needs gamma_1 != 0");
}

Polynomial<Rational> constant(const Rational& c) { return Polynomial<Rational>::constant(c); }

}  // namespace

SymmetricSystem<Rational> swapped_nu(const GammaSeq& gamma, std::size_t N) {
  std::vector<Rational> nu;
  nu.reserve(2 * N);
  for (std::size_t n = 1; n <= 2 * N; ++n) nu.push_back(n % 2 == 0 ? gamma.at(n - 1) : gamma.at(n + 1));
  return {Stream<Rational>::finite(std::move(nu), 1)};
}

ThreeTermSystem<Rational> tilde_system(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  require_gamma1(gamma);
  auto b = Stream<Rational>::generated(
      [gamma](std::size_t k) { return k == 1 ? gamma.at(1) : gamma.at(2 * k - 1) + gamma.at(2 * k); }, 1,
      derived_last(gamma, 2, 0));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n - 1) * gamma.at(2 * n + 2); }, 1, derived_last(gamma, 2, 2));
  return {std::move(b), std::move(a2), std::nullopt};
}

void HatSystem::require_favard() const {
  if (favard_degenerate_at) throw Error(Errc::DegenerateFavard, "a^_n^2 vanishes", *favard_degenerate_at);
}

HatSystem hat_system(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  auto b = Stream<Rational>::generated([gamma](std::size_t k) { return gamma.at(2 * k - 1) + gamma.at(2 * k); }, 1,
                                       derived_last(gamma, 2, 0));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n - 1) * gamma.at(2 * n + 2); }, 1, derived_last(gamma, 2, 2));
  HatSystem out{{std::move(b), std::move(a2), std::nullopt}, std::nullopt};
  if (gamma.at(1).is_zero()) out.favard_degenerate_at = 1;
  return out;
}

ThreeTermSystem<Rational> tilde_kernel_system(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  auto b = Stream<Rational>::generated(
      [gamma](std::size_t m) { return gamma.at(2 * m - 1) + gamma.at(2 * m + 2); }, 1, derived_last(gamma, 2, 2));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n + 1) * gamma.at(2 * n + 2); }, 1, derived_last(gamma, 2, 2));
  return {std::move(b), std::move(a2), std::nullopt};
}

std::optional<std::size_t> kernel_invariance_violation(const GammaSeq& gamma, std::size_t N) {
  for (std::size_t n = 1; n <= N; ++n) {
    if (gamma.at(2 * n + 1) - gamma.at(2 * n - 1) != gamma.at(2 * n + 2) - gamma.at(2 * n)) return n;
  }
  return std::nullopt;
}

IdentityReport kernel_invariance_check(const GammaSeq& gamma, std::size_t N, const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "kernel_invariance";
  report.branch = "coefficient streams";
  const auto tilde = tilde_kernel_system(apply_corruption(gamma, corruption));
  const auto kernel = kernel_system(gamma);
  for (std::size_t n = 1; n <= N; ++n) {
    report.record("b~K_n = b^(2)_n", n, constant(tilde.b.at(n)), constant(kernel.b.at(n)));
    report.record("a~K_n^2 = (a_n^2)^(2)", n, constant(tilde.a2.at(n)), constant(kernel.a2.at(n)));
  }
  return report;
}

ThreeTermSystem<Rational> UnifiedCoefficients::system() const {
  std::vector<Rational> a2(eta.begin() + std::min<std::size_t>(1, eta.size()), eta.end());
  if (!a2.empty() && a2.size() >= xi.size()) a2.resize(xi.empty() ? 0 : xi.size() - 1);
  return {Stream<Rational>::finite(xi, 1), Stream<Rational>::finite(std::move(a2), 1), std::nullopt};
}

UnifiedCoefficients unified_coefficients(const GammaSeq& gamma, UnifiedVariant variant, std::size_t N) {
  const auto first = system_from_gamma(gamma);
  const auto kernel = kernel_system(gamma);
  UnifiedCoefficients out;
  if (N == 0) return out;
  if (variant == UnifiedVariant::TildeP) {
    require_gamma1(gamma);
    out.xi.push_back(gamma.at(1));
    out.eta.push_back(Rational(0));
    for (std::size_t n = 1; n < N; ++n) {
      out.xi.push_back(first.b.at(n + 1));
      if (n == 1) {
        out.eta.push_back(gamma.at(1) * gamma.at(4));
      } else {
        out.eta.push_back(kernel.a2.at(n - 1) * kernel.a2.at(n) / first.a2.at(n));
      }
    }
  } else {
    out.xi.push_back(gamma.at(1) + gamma.at(4));
    out.eta.push_back(gamma.at(1) * gamma.at(2));
    for (std::size_t n = 1; n < N; ++n) {
      out.xi.push_back(first.b.at(n + 1) + first.b.at(n + 2) - kernel.b.at(n + 1));
      out.eta.push_back(kernel.a2.at(n));
    }
  }
  return out;
}

ThreeTermSystem<Rational> q_system(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  auto b = Stream<Rational>::generated(
      [gamma](std::size_t k) { return gamma.at(2 * k + 1) + gamma.at(2 * k + 2); }, 1, derived_last(gamma, 2, 2));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n + 2) * gamma.at(2 * n + 3); }, 1, derived_last(gamma, 2, 3));
  return {std::move(b), std::move(a2), std::nullopt};
}

ThreeTermSystem<Rational> u_system(const GammaSeq& gamma) {
  if (gamma.last()) {
    for (std::size_t n = 1; 2 * n + 2 <= *gamma.last(); ++n) {
      if ((gamma.stream().at(2 * n + 1) * gamma.stream().at(2 * n + 2)).sign() <= 0) {
        throw Error(Errc::DegenerateFavard, "mu_n must be positive", n);
      }
    }
    gamma.validate();
  }
  auto b_last = derived_last(gamma, 2, 1);
  if (gamma.last() && *gamma.last() < 3) b_last = 0;
  auto b = Stream<Rational>::generated(
      [gamma](std::size_t k) { return k == 1 ? gamma.at(3) : gamma.at(2 * k) + gamma.at(2 * k + 1); }, 1, b_last);
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n + 1) * gamma.at(2 * n + 2); }, 1, derived_last(gamma, 2, 2));
  return {std::move(b), std::move(a2), std::nullopt};
}

IdentityReport q_u_identity_check(const GammaSeq& gamma, std::size_t n, const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "q_u_identities";
  report.branch = "kernel co-recursive";
  const auto Q = monic_sequence(q_system(gamma), n);
  const auto U = monic_sequence(u_system(apply_corruption(gamma, corruption)), n + 1);
  const auto kernel = kernel_system(gamma);
  const auto K = monic_sequence(kernel, n);
  const auto K1 = associated_sequence(kernel, n);
  const Rational g2 = gamma.at(2);
  Rational product(1);
  for (std::size_t m = 0; m <= n; ++m) {
    report.record("x Q_m = U_{m+1} + gamma_{2m+3} U_m", m, Q[m].times_x(), U[m + 1] + U[m] * gamma.at(2 * m + 3));
    product *= -gamma.at(2 * m + 3);
    report.record("U_{m+1}(0) = (-1)^{m+1} gamma_{2m+3} ... gamma_3", m + 1,
                  constant(poly_eval(U[m + 1], Rational(0))), constant(product));
    report.record("U_m = K_m + gamma_2 K^(1)_m", m, U[m], K[m] + K1[m] * g2);
  }
  return report;
}

IdentityReport quasi_orthogonality_check(const GammaSeq& gamma, std::size_t n,
                                         const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "quasi_orthogonality";
  report.branch = "split (b1 = gamma2)";
  const auto Q = monic_eval(q_system(gamma), n);
  const auto K1 = associated_sequence(kernel_system(gamma), n + 1);
  const Rational g2 = gamma.at(2);
  const auto lhs = Q.times_x().times_x() - (K1[n + 1] + K1[n] * gamma.at(2 * n + 3)).times_x() * g2;

  const auto rg = apply_corruption(gamma, corruption);
  const auto P = monic_sequence(split_system(rg), n + 2);
  const auto rhs = P[n + 2] + P[n + 1] * (rg.at(2 * n + 3) + rg.at(2 * n + 4)) + P[n] * (rg.at(2 * n + 2) * rg.at(2 * n + 3));
  report.record("x^2 Q_n - gamma_2 x [K1_{n+1} + gamma_{2n+3} K1_n] = P_{n+2} + ... ", n, lhs, rhs);
  return report;
}

IdentityReport theorem33_check(const GammaSeq& gamma, std::size_t N, bool swap,
                               const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "theorem33";
  const auto ref_gamma = apply_corruption(gamma, corruption);
  std::vector<Polynomial<Rational>> S;
  std::vector<Polynomial<Rational>> P;
  std::vector<Polynomial<Rational>> K;
  if (swap) {
    require_gamma1(gamma);
    report.branch = "swapped nu";
    S = symmetric_sequence(swapped_nu(gamma, N + 1), 2 * N + 1);
    P = monic_sequence(tilde_system(ref_gamma), N);
    K = monic_sequence(tilde_kernel_system(ref_gamma), N);
  } else {
    report.branch = "unperturbed nu = gamma";
    S = symmetric_sequence(SymmetricSystem<Rational>{Stream<Rational>::finite(gamma.take(2 * N + 1), 1)}, 2 * N + 1);
    P = monic_sequence(split_system(ref_gamma), N);
    K = monic_sequence(kernel_system(ref_gamma), N);
  }
  for (std::size_t n = 0; n <= N; ++n) {
    report.record("even_part(S_2n) = P_n", n, even_part(S[2 * n]), P[n]);
    report.record("odd_part(S_2n+1) = K_n", n, odd_part(S[2 * n + 1]), K[n]);
  }
  return report;
}

IdentityReport corecursive_check(const GammaSeq& gamma, std::size_t N, const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "corecursive";
  report.branch = "tilde vs hat";
  const auto tilde = tilde_system(gamma);
  const auto hat = hat_system(apply_corruption(gamma, corruption)).system;
  const auto Pt = monic_sequence(tilde, N);
  const auto Ph = monic_sequence(hat, N);
  const auto Ph1 = associated_sequence(hat, N);
  const Rational g2 = gamma.at(2);
  if (N >= 1) report.record("P~_1 - P^_1 = gamma_2", 1, Pt[1] - Ph[1], constant(g2));
  for (std::size_t n = 1; n < N; ++n) {
    report.record("b~_{n+1} = b^_{n+1}", n, constant(tilde.b.at(n + 1)), constant(hat.b.at(n + 1)));
    report.record("a~_n^2 = a^_n^2", n, constant(tilde.a2.at(n)), constant(hat.a2.at(n)));
  }
  for (std::size_t n = 0; n <= N; ++n) report.record("P~_n = P^_n + gamma_2 P^(1)_n", n, Pt[n], Ph[n] + Ph1[n] * g2);
  return report;
}

IdentityReport unified_check(const GammaSeq& gamma, std::size_t N, const std::optional<Corruption>& corruption) {
  IdentityReport report;
  report.name = "unified";
  report.branch = "T_n vs tilde families";
  const auto ug = apply_corruption(gamma, corruption);
  const auto Tp = monic_sequence(unified_coefficients(ug, UnifiedVariant::TildeP, N).system(), N);
  const auto Tk = monic_sequence(unified_coefficients(ug, UnifiedVariant::TildeK, N).system(), N);
  const auto Pt = monic_sequence(tilde_system(gamma), N);
  const auto Kt = monic_sequence(tilde_kernel_system(gamma), N);
  for (std::size_t n = 0; n <= N; ++n) {
    report.record("T_n(TildeP) = P~_n", n, Tp[n], Pt[n]);
    report.record("T_n(TildeK) = K~_n", n, Tk[n], Kt[n]);
  }
  return report;
}

std::string to_string(InterlacingVerdict verdict) {
  switch (verdict) {
    case InterlacingVerdict::Excluded: return "excluded";
    case InterlacingVerdict::ObservedNumerically: return "observed numerically";
    case InterlacingVerdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

ZeroSumReport zero_sum_interlacing_report(const GammaSeq& gamma, std::size_t n, double tol) {
  require_gamma1(gamma);
  if (n == 0) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  ZeroSumReport out;
  out.n = n;
  const auto P = split_system(gamma);
  const auto Pt = tilde_system(gamma);
  out.zeros_p = zero_values(zeros(P, n, tol));
  out.zeros_tilde = zero_values(zeros(Pt, n, tol));
  for (double v : out.zeros_p) out.sum_p += v;
  for (double v : out.zeros_tilde) out.sum_tilde += v;
  out.trace_p = truncate(P, n).trace();
  out.trace_tilde = truncate(Pt, n).trace();
  out.gamma_sum_p = Rational(0);
  out.gamma_sum_tilde = gamma.at(1);
  for (std::size_t k = 2; k <= 2 * n; ++k) {
    out.gamma_sum_p += gamma.at(k);
    if (k >= 3) out.gamma_sum_tilde += gamma.at(k);
  }
  out.traces_match_gamma_sums = out.trace_p == out.gamma_sum_p && out.trace_tilde == out.gamma_sum_tilde;
  const double bound = static_cast<double>(n) * tol;
  out.sums_within_tolerance = std::abs(out.sum_p - out.trace_p.to_double()) <= bound &&
                              std::abs(out.sum_tilde - out.trace_tilde.to_double()) <= bound;

  const int gamma_sign = (gamma.at(1) - gamma.at(2)).sign();
  if (gamma_sign == 0) {
    out.verdict = InterlacingVerdict::Excluded;
    out.reason = "interlacing impossible: gamma_1 = gamma_2 gives equal root sums";
    return out;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double diff = out.zeros_p[j] - out.zeros_tilde[j];
    if (std::abs(diff) <= tol) continue;
    if ((diff > 0 ? 1 : -1) == gamma_sign) {
      out.obstruction_witness = j + 1;
      out.verdict = InterlacingVerdict::Excluded;
      out.reason = "interlacing excluded: gamma_1 - gamma_2 and x_{n,j} - x~_{n,j} share a sign at j = " +
                   std::to_string(j + 1);
      return out;
    }
  }
  const auto inter = interlace_check(out.zeros_p, out.zeros_tilde, tol);
  if (inter.interlaced) {
    out.verdict = InterlacingVerdict::ObservedNumerically;
    out.reason = "zeros interlace numerically";
  } else {
    out.verdict = InterlacingVerdict::Undetermined;
    out.reason = "no obstruction found and zeros do not interlace numerically";
  }
  return out;
}

}  // namespace opchain
