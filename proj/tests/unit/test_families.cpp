#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/perturbations.hpp"

using namespace opchain;
using P = Polynomial<Rational>;
using Q = Rational;

namespace {

const std::vector<Q> kAlphas{Q(-1, 2), Q(0), Q(1), Q(7, 3)};

std::vector<Q> qs(std::initializer_list<std::int64_t> v) {
  std::vector<Q> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Laguerre, ClosedForm) {
  const auto sys = laguerre_system(Q(0));
  EXPECT_EQ(monic_eval(sys, 3), (P{-6, 18, -9, 1}));
  ASSERT_TRUE(sys.closed_form);
  EXPECT_EQ(sys.closed_form->name, "laguerre");
  EXPECT_FALSE(sys.depth());
}

TEST(Laguerre, AlphaRange) {
  EXPECT_OPCHAIN_ERROR(laguerre_system(Q(-1)), Errc::AlphaOutOfRange);
  EXPECT_OPCHAIN_ERROR(laguerre_system(Q(-2)), Errc::AlphaOutOfRange);
  EXPECT_NO_THROW(laguerre_system(Q(-99, 100)));
}

TEST(LaguerreGamma, Branches) {
  const auto g0 = laguerre_gamma(Q(0), Q(0));
  EXPECT_EQ(g0.take(9), qs({0, 1, 1, 2, 2, 3, 3, 4, 4}));
  const auto g1 = laguerre_gamma(Q(1, 2), Q(1));
  EXPECT_EQ(g1.take(5), (std::vector<Q>{Q(1), Q(3, 2), Q(2), Q(5, 2), Q(3)}));
  EXPECT_OPCHAIN_ERROR(laguerre_gamma(Q(0), Q(2)), Errc::InvalidArgument);
}

TEST(LaguerreGamma, DecomposesLaguerreAndEFamily) {
  for (const auto& alpha : kAlphas) {
    const auto lag = laguerre_system(alpha);
    const auto e = e_family_system(alpha);
    const auto from0 = system_from_gamma(laguerre_gamma(alpha, Q(0)));
    const auto from1 = system_from_gamma(laguerre_gamma(alpha, Q(1)));
    for (std::size_t k = 1; k <= 30; ++k) {
      EXPECT_EQ(from0.b.at(k), lag.b.at(k));
      EXPECT_EQ(from0.a2.at(k), lag.a2.at(k));
      EXPECT_EQ(from1.b.at(k), e.b.at(k));
      EXPECT_EQ(from1.a2.at(k), e.a2.at(k));
    }
    EXPECT_EQ(recover_gamma(lag, Q(0), 20).take(20), laguerre_gamma(alpha, Q(0)).take(20));
    EXPECT_EQ(recover_gamma(e, Q(1), 20).take(20), laguerre_gamma(alpha, Q(1)).take(20));
  }
}

TEST(EFamily, Example) {
  const auto e = e_family_system(Q(1, 2));
  EXPECT_EQ(e.b.at(1), Q(5, 2));
  EXPECT_EQ(e.b.at(2), Q(9, 2));
  EXPECT_EQ(e.a2.at(1), Q(3));
  EXPECT_OPCHAIN_ERROR(e_family_system(Q(-1)), Errc::AlphaOutOfRange);
}

TEST(EFamily, IsFirstAssociatedOfShiftedLaguerre) {
  for (const auto& alpha : kAlphas) {
    const auto e = monic_sequence(e_family_system(alpha + Q(1)), 15);
    const auto assoc = monic_sequence(laguerre_assoc1_system(alpha + Q(1)), 15);
    const auto direct = associated_sequence(laguerre_system(alpha), 16);
    for (std::size_t n = 0; n <= 15; ++n) {
      EXPECT_EQ(e[n], assoc[n]);
      EXPECT_EQ(e[n], direct[n + 1]);
    }
  }
}

TEST(EFamily, KernelIsLaguerrePlusOne) {
  for (const auto& alpha : kAlphas) {
    const auto K = monic_sequence(kernel_system(laguerre_gamma(alpha, Q(0))), 12);
    const auto ref = monic_sequence(laguerre_system(alpha + Q(1)), 12);
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(K[n], ref[n]);
  }
}

TEST(EFamily, KernelInvarianceHolds) {
  for (const auto& alpha : kAlphas) {
    for (const Q g1 : {Q(0), Q(1)}) {
      EXPECT_TRUE(kernel_invariance_check(laguerre_gamma(alpha, g1), 20).ok());
    }
  }
}

TEST(RouthRomanovski, WindowForP10) {
  const auto params = rr_params(Q(10));
  EXPECT_EQ(params.n_max, 4u);
  const auto sys = routh_romanovski_system(Q(10));
  EXPECT_EQ(sys.b.take(4), (std::vector<Q>{Q(1, 8), Q(5, 24), Q(5, 12), Q(5, 4)}));
  EXPECT_EQ(sys.a2.take(3), (std::vector<Q>{Q(1, 448), Q(4, 315), Q(7, 80)}));
  EXPECT_EQ(sys.depth(), 4u);
  EXPECT_OPCHAIN_ERROR(sys.b.at(5), Errc::StreamExhausted);
  // A_4 carries the factor p - 2n - 2.
  EXPECT_OPCHAIN_ERROR(rr_monicize(params, 4), Errc::ZeroDenominator);
  EXPECT_OPCHAIN_ERROR(rr_monicize(params, 6), Errc::DegreeBeyondFamily);
  EXPECT_OPCHAIN_ERROR(rr_monicize(params, 9), Errc::ZeroDenominator);
  EXPECT_OPCHAIN_ERROR(rr_pieces(Q(10), 9), Errc::ZeroDenominator);
}

TEST(RouthRomanovski, MonicMatchesNormalisedRecurrence) {
  const std::vector<P> expected{
      P{1},
      P{Q(-1, 8), 1},
      P{Q(1, 42), Q(-1, 3), 1},
      P{Q(-1, 120), Q(3, 20), Q(-3, 4), 1},
      P{Q(1, 120), Q(-1, 6), 1, -2, 1},
  };
  // N_0 = 1, N_1 = A_0 x + B_0, then the three-term recurrence of the pieces.
  std::vector<P> N{P{1}};
  const auto r0 = rr_pieces(Q(10), 0);
  N.push_back(P{r0.B, r0.A});
  for (std::size_t n = 1; n < 4; ++n) {
    const auto r = rr_pieces(Q(10), n);
    N.push_back(N[n] * P{r.B, r.A} - N[n - 1] * r.C);
  }
  const auto monic = monic_sequence(routh_romanovski_system(Q(10)), 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(N[n] * (Q(1) / N[n].leading()), expected[n]) << n;
    EXPECT_EQ(monic[n], expected[n]) << n;
  }
}

TEST(RouthRomanovski, MonicizeGeneric) {
  const RRPieces cur{Q(2), Q(-6), Q(8)};
  const RRPieces prev{Q(4), Q(1), Q(0)};
  const auto s = monicize(cur, prev);
  EXPECT_EQ(s.b, Q(3));
  ASSERT_TRUE(s.a2);
  EXPECT_EQ(*s.a2, Q(1));
  EXPECT_FALSE(monicize(cur, std::nullopt).a2);
}

TEST(LSequence, Validation) {
  EXPECT_OPCHAIN_ERROR(LSequence::make({Q(1), Q(2)}, Q(0)), Errc::NonPositiveInput);
  EXPECT_OPCHAIN_ERROR(LSequence::make({Q(2), Q(2)}, Q(1)), Errc::NonPositiveInput);
  EXPECT_OPCHAIN_ERROR(LSequence::make({Q(1), Q(1)}, Q(1)), Errc::NonPositiveInput);
  const auto l = LSequence::make({Q(1), Q(3)}, Q(1));
  EXPECT_EQ(l.last(), 1u);
  EXPECT_OPCHAIN_ERROR(l.at(2), Errc::StreamExhausted);
}

TEST(LSequence, PeriodicExampleAndSwap) {
  const auto l = LSequence::make(qs({1, 3, 5, 5, 3, 3, 5, 5, 3, 3, 5, 5, 3}), Q(1));
  const auto phi1 = gamma_phi1_from_l(l);
  const auto phi2 = gamma_phi2_from_l(l);
  EXPECT_EQ(phi1.first(), 2u);
  EXPECT_EQ(phi1.last(), 13u);
  EXPECT_EQ(phi2.last(), 12u);
  std::vector<Q> p1, p2;
  for (std::size_t i = 2; i <= 13; ++i) p1.push_back(phi1.at(i));
  for (std::size_t i = 2; i <= 12; ++i) p2.push_back(phi2.at(i));
  EXPECT_EQ(p1, qs({1, 4, 6, 3, 2, 4, 6, 3, 2, 4, 6, 3}));
  EXPECT_EQ(p2, qs({3, 6, 4, 2, 3, 6, 4, 2, 3, 6, 4}));
  EXPECT_FALSE(pairwise_swap_violation(phi1, phi2));
  // Index 2 pairs with gamma^{phi1}_1, which does not exist.
  EXPECT_FALSE(pairwise_swap_violation(phi1, phi2, 2));
}

TEST(LSequence, RoundTripThroughGamma) {
  const auto l = LSequence::make(qs({1, 3, 5, 5, 3, 3, 5, 5, 3, 3, 5, 5, 3}), Q(1));
  const auto back = l_from_gamma(gamma_phi1_from_l(l), Q(1), 12);
  EXPECT_EQ(back.values(), l.values());
}

TEST(LSequence, NonPeriodicBreaksSwap) {
  const auto l = LSequence::make(qs({1, 3, 5, 7, 3, 3}), Q(1));
  EXPECT_TRUE(pairwise_swap_violation(gamma_phi1_from_l(l), gamma_phi2_from_l(l)).has_value());
}
