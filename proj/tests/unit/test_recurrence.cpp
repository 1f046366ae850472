#include <gtest/gtest.h>

#include <random>

#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/recurrence.hpp"
#include "opchain/verify.hpp"

using namespace opchain;
using P = Polynomial<Rational>;
using Q = Rational;

namespace {

GammaSeq g(std::initializer_list<std::int64_t> v) {
  std::vector<Q> out;
  for (auto x : v) out.emplace_back(x);
  return GammaSeq::finite(out);
}

GammaSeq random_gamma_seq(std::mt19937_64& rng, std::size_t len) { return GammaSeq::finite(random_gamma(rng, len)); }

const auto L0 = laguerre_system(Q(0));

}  // namespace

TEST(MonicEval, Laguerre) {
  EXPECT_EQ(monic_eval(L0, 0), P{1});
  EXPECT_EQ(monic_eval(L0, 1), (P{-1, 1}));
  EXPECT_EQ(monic_eval(L0, 2), (P{2, -4, 1}));
  // x^3 - 9x^2 + 18x - 6 (oracle)
  EXPECT_EQ(monic_eval(L0, 3), (P{-6, 18, -9, 1}));
}

TEST(MonicEval, FiniteStreamIsNeverExtended) {
  ThreeTermSystem<Q> sys{Stream<Q>::finite({Q(1), Q(2)}), Stream<Q>::finite({Q(1)}), std::nullopt};
  EXPECT_NO_THROW(monic_eval(sys, 2));
  try {
    monic_eval(sys, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::StreamExhausted);
  }
}

TEST(AssociatedEval, Laguerre) {
  EXPECT_TRUE(associated_eval(L0, 0).is_zero());
  EXPECT_EQ(associated_eval(L0, 1), P{1});
  EXPECT_EQ(associated_eval(L0, 2), (P{-3, 1}));
  EXPECT_EQ(associated_eval(L0, 3), (P{11, -8, 1}));
}

TEST(Degrees, MonicAndAssociated) {
  std::mt19937_64 rng(2);
  const auto sys = system_from_gamma(random_gamma_seq(rng, 30));
  const auto ps = monic_sequence(sys, 12);
  const auto qs = associated_sequence(sys, 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(ps[n].degree(), static_cast<long>(n));
    EXPECT_TRUE(ps[n].is_monic());
    if (n >= 1) {
      EXPECT_EQ(qs[n].degree(), static_cast<long>(n) - 1);
      EXPECT_TRUE(qs[n].is_monic());
    }
  }
}

TEST(SymmetricEval, SwappedExample) {
  SymmetricSystem<Q> sym{Stream<Q>::finite({Q(2), Q(1), Q(4), Q(3)})};
  EXPECT_EQ(symmetric_eval(sym, 0), P{1});
  EXPECT_EQ(symmetric_eval(sym, 1), (P{0, 1}));
  EXPECT_EQ(symmetric_eval(sym, 2), (P{-1, 0, 1}));
  EXPECT_EQ(symmetric_eval(sym, 3), (P{0, -5, 0, 1}));
  EXPECT_EQ(symmetric_eval(sym, 4), (P{3, 0, -8, 0, 1}));
}

TEST(SymmetricSplit, EvenOddPartsMatchSplitAndKernel) {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 10; ++s) {
    const auto gamma = random_gamma_seq(rng, 26);
    const auto S = symmetric_sequence(SymmetricSystem<Q>{gamma.stream()}, 25);
    const auto Pn = monic_sequence(split_system(gamma), 12);
    const auto Kn = monic_sequence(kernel_system(gamma), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(even_part(S[2 * n]), Pn[n]);
      EXPECT_EQ(odd_part(S[2 * n + 1]), Kn[n]);
    }
  }
}

TEST(KernelSystem, Examples) {
  const auto k = kernel_system(g({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(k.b.at(1), Q(5));
  EXPECT_EQ(k.a2.at(1), Q(12));
  EXPECT_EQ(k.b.at(2), Q(9));
  EXPECT_THROW(k.b.at(3), Error);

  for (const Q alpha : {Q(-1, 2), Q(0), Q(7, 3)}) {
    const auto kl = kernel_system(laguerre_gamma(alpha, Q(0)));
    for (std::int64_t n = 0; n < 20; ++n) {
      EXPECT_EQ(kl.b.at(n + 1), Q(2 * n + 2) + alpha);
      if (n >= 1) EXPECT_EQ(kl.a2.at(n), Q(n) * (Q(n + 1) + alpha));
    }
  }
  try {
    kernel_system(g({1, 2, 0, 4})).b.at(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonPositiveGamma);
    EXPECT_EQ(e.index(), 3u);
  }
}

TEST(KernelIdentity, LaguerreAndRandom) {
  const auto lag = kernel_identity_check(laguerre_gamma(Q(0), Q(0)), 5);
  EXPECT_TRUE(lag.ok());
  std::mt19937_64 rng(21);
  for (int s = 0; s < 10; ++s) {
    const auto report = kernel_identity_check(random_gamma_seq(rng, 44), 20);
    EXPECT_TRUE(report.ok()) << report.branch;
  }
}

TEST(KernelIdentity, BranchRecordedWhenGamma1Ignored) {
  const auto r = kernel_identity_check(g({1, 2, 3, 4, 5, 6}), 1);
  EXPECT_TRUE(r.ok());
  EXPECT_NE(r.branch.find("gamma1 not used"), std::string::npos);
}

TEST(KernelIdentity, CorruptionIsLocated) {
  const auto r = kernel_identity_check(laguerre_gamma(Q(0), Q(0)), 5, Corruption{4, Q(1)});
  ASSERT_FALSE(r.ok());
  // gamma_4 first enters K_2 through b_2 and a_1^2.
  EXPECT_EQ(r.first_failure()->degree, 2u);
  EXPECT_FALSE(r.first_failure()->difference.is_zero());
}

TEST(Moments, LaguerreFactorials) {
  EXPECT_EQ(moments(L0, 0), Q(1));
  EXPECT_EQ(moments(L0, 2), Q(2));
  EXPECT_EQ(moments(L0, 3), Q(6));
  Q f(1);
  const auto seq = moment_sequence(L0, 12);
  for (std::int64_t k = 0; k <= 12; ++k) {
    if (k > 0) f *= Q(k);
    EXPECT_EQ(seq[static_cast<std::size_t>(k)], f);
  }
}

TEST(Moments, FiniteInputNeedsOnlyHalfTheCoefficients) {
  // mu_3 only reads b_1, b_2 and a_1^2.
  ThreeTermSystem<Q> sys{Stream<Q>::finite({Q(1), Q(3)}), Stream<Q>::finite({Q(1)}), std::nullopt};
  EXPECT_EQ(moments(sys, 3), Q(6));
}

TEST(Convergent, Examples) {
  auto [n0, d0] = convergent(L0, 0);
  EXPECT_TRUE(n0.is_zero());
  EXPECT_EQ(d0, P{1});
  auto [n1, d1] = convergent(L0, 1);
  EXPECT_EQ(n1, P{1});
  EXPECT_EQ(d1, (P{-1, 1}));
  auto [n2, d2] = convergent(L0, 2);
  EXPECT_EQ(n2, (P{-3, 1}));
  EXPECT_EQ(d2, (P{2, -4, 1}));
}

TEST(LaurentExpand, Examples) {
  EXPECT_EQ(laurent_expand(P{1}, P{-1, 1}, 3).coeffs, (std::vector<Q>{1, 1, 1}));
  for (const auto& c : laurent_expand(P{}, P{0, 1}, 5).coeffs) EXPECT_EQ(c, Q(0));
  auto [n2, d2] = convergent(L0, 2);
  const auto s = laurent_expand(n2, d2, 4);
  EXPECT_EQ(s.order, 4u);
  EXPECT_EQ(s.coeffs, (std::vector<Q>{1, 1, 2, 6}));
  EXPECT_THROW(laurent_expand(P{0, 1}, P{-1, 1}, 2), Error);
  EXPECT_THROW(laurent_expand(P{1}, P{-1, 2}, 2), Error);
}

TEST(MomentMatching, RandomSystems) {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 8; ++s) {
    const auto sys = system_from_gamma(random_gamma_seq(rng, 24));
    const auto mom = moment_sequence(sys, 20);
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto [num, den] = convergent(sys, n);
      const auto series = laurent_expand(num, den, 2 * n);
      EXPECT_EQ(series.coeffs, std::vector<Q>(mom.begin(), mom.begin() + static_cast<long>(2 * n)));
    }
  }
}

TEST(FloatBackend, MatchesRationalWithinTolerance) {
  const auto f = to_float(L0);
  EXPECT_LT(max_abs_diff(monic_eval(f, 6), to_float(monic_eval(L0, 6))), 1e-9);
  EXPECT_DOUBLE_EQ(moments(f, 5), 120.0);
}
