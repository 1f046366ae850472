#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/verify.hpp"

using namespace opchain;
using Q = Rational;

namespace {

ChainSequence<Q> chain(std::vector<Q> d) { return {Stream<Q>::finite(std::move(d), 1)}; }
ParameterSeq<Q> params(std::vector<Q> g) { return {Stream<Q>::finite(std::move(g), 0), std::nullopt}; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InvalidArgument;
}

const auto L0 = laguerre_system(Q(0));

}  // namespace

TEST(MinimalParameters, ConstantQuarter) {
  const auto m = minimal_parameters(chain({Q(1, 4), Q(1, 4), Q(1, 4)}), 3);
  EXPECT_TRUE(m.minimal());
  EXPECT_EQ(m.g.take(3), (std::vector<Q>{0, Q(1, 4), Q(1, 3), Q(3, 8)}));
  for (std::int64_t n = 1; n <= 3; ++n) EXPECT_EQ(m.g.at(static_cast<std::size_t>(n)), Q(n, 2 * n + 2));
}

TEST(MinimalParameters, Laguerre) {
  const auto m = minimal_parameters(chain({Q(1, 3), Q(4, 15), Q(9, 35)}), 3);
  EXPECT_EQ(m.g.take(3), (std::vector<Q>{0, Q(1, 3), Q(2, 5), Q(3, 7)}));
}

TEST(MinimalParameters, RejectsNonChain) {
  try {
    minimal_parameters(chain({Q(2)}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAChainSequence);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(MinimalParameters, ReproducesChain) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 10; ++s) {
    const auto gamma = GammaSeq::finite(random_gamma(rng, 44));
    const auto d = chain_at(split_system(gamma), Q(0), 20);
    const auto m = minimal_parameters(d, 20);
    for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ((Q(1) - m.g.at(n - 1)) * m.g.at(n), d.d.at(n));
  }
}

TEST(MaximalParameters, ConstantQuarterFloat) {
  ChainSequence<double> d{Stream<double>::generated([](std::size_t) { return 0.25; })};
  const auto M = maximal_parameters(d, 2, 64);
  EXPECT_EQ(M.horizon, 64u);
  // From M_66 = 1 the iteration gives M_n = 1/2 + 1/(2 (67 - n)); the true value is 1/2.
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_NEAR(M.g.at(n), 0.5 + 0.5 / static_cast<double>(67 - n), 1e-13);
  EXPECT_LT(maximal_parameters(d, 2, 4096).g.at(0) - 0.5, 1e-3);
}

TEST(MaximalParameters, FiniteChainTerminal) {
  const auto M = maximal_parameters(chain({Q(1, 4), Q(1, 4)}), 2, 10);
  EXPECT_EQ(M.g.at(2), Q(1));
  EXPECT_EQ(M.horizon, 0u);
  EXPECT_EQ(M.g.at(1), Q(3, 4));
}

TEST(MaximalParameters, LaguerreNegativeAlphaTendsToZero) {
  // M_0 = 0 in the limit; backward iteration converges like horizon^(-1/2).
  const auto sys = to_float(laguerre_system(Q(-1, 2)));
  ChainSequence<double> d{Stream<double>::generated(
      [sys](std::size_t n) { return sys.a2.at(n) / (sys.b.at(n) * sys.b.at(n + 1)); })};
  double previous = 1.0;
  for (std::size_t h : {16u, 128u, 1024u, 8192u}) {
    const auto M = maximal_parameters(d, 2, h);
    EXPECT_LT(M.g.at(0), previous);
    EXPECT_GE(M.g.at(0), 0.0);
    previous = M.g.at(0);
  }
  EXPECT_LT(previous, 0.02);
  const auto M128 = maximal_parameters(d, 2, 128);
  EXPECT_LT(M128.g.at(0), 0.06);
  // Clamped from below by the minimal parameters.
  const auto m = minimal_parameters(d, 2);
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_GE(M128.g.at(n), m.g.at(n));
}

TEST(MaximalParameters, BracketsAcceptedParameters) {
  // gamma with gamma_1 > 0 gives a non-minimal parameter sequence g_n.
  const auto gamma = laguerre_gamma(Q(1), Q(1));
  const auto sys = system_from_gamma(gamma);
  const auto d = chain_at(sys, Q(0), 40);
  const auto m = minimal_parameters(d, 10);
  const auto M = maximal_parameters(d, 10, 30);
  const auto g = parameters_from_gamma(gamma, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_LE(m.g.at(n), g.g.at(n));
    EXPECT_LE(g.g.at(n), M.g.at(n));
  }
}

TEST(GammaFromSystem, LaguerreAndEFamily) {
  const auto g0 = gamma_from_system(L0, Q(0), 4);
  EXPECT_EQ(g0.take(10), (std::vector<Q>{0, 1, 1, 2, 2, 3, 3, 4, 4, 5}));
  const auto g1 = gamma_from_system(e_family_system(Q(0)), Q(1), 2);
  EXPECT_EQ(g1.take(6), (std::vector<Q>{1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(code_of([] { gamma_from_system(L0, Q(1), 3); }), Errc::InvalidGamma1);
  EXPECT_EQ(code_of([] { gamma_from_system(L0, Q(-1), 3); }), Errc::InvalidGamma1);
}

TEST(GammaFromSystem, PositivityBreak) {
  // b = (1, 1, ...), a^2 = 1: gamma_3 = 1, gamma_4 = 0.
  ThreeTermSystem<Q> sys{Stream<Q>::generated([](std::size_t) { return Q(1); }),
                         Stream<Q>::generated([](std::size_t) { return Q(1); }), std::nullopt};
  try {
    gamma_from_system(sys, Q(0), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PositivityBreak);
  }
}

TEST(SystemFromGamma, Examples) {
  const auto s = system_from_gamma(GammaSeq::finite({Q(1), Q(2), Q(3), Q(4)}));
  EXPECT_EQ(s.b.at(1), Q(3));
  EXPECT_EQ(s.b.at(2), Q(7));
  EXPECT_EQ(s.a2.at(1), Q(6));
  EXPECT_THROW(s.a2.at(2), Error);
  const auto l = system_from_gamma(laguerre_gamma(Q(0), Q(0)));
  for (std::int64_t k = 1; k <= 10; ++k) {
    EXPECT_EQ(l.b.at(static_cast<std::size_t>(k)), Q(2 * k - 1));
    EXPECT_EQ(l.a2.at(static_cast<std::size_t>(k)), Q(k * k));
  }
}

TEST(SystemFromGamma, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 20; ++s) {
    const auto gamma = GammaSeq::finite(random_gamma(rng, 22));
    const auto sys = system_from_gamma(gamma);
    const auto back = gamma_from_system(sys, gamma.at(1), 10);
    EXPECT_EQ(back.take(22), gamma.take(22));
    const auto sys2 = system_from_gamma(back);
    EXPECT_EQ(sys2.b.take(11), sys.b.take(11));
    EXPECT_EQ(sys2.a2.take(10), sys.a2.take(10));
  }
}

TEST(ChainAt, Laguerre) {
  const auto d = chain_at(L0, Q(0), 3);
  EXPECT_EQ(d.d.take(3), (std::vector<Q>{Q(1, 3), Q(4, 15), Q(9, 35)}));
  for (std::int64_t n = 1; n <= 30; ++n) {
    EXPECT_EQ(chain_at(L0, Q(0), 30).d.at(static_cast<std::size_t>(n)), Q(n * n, (2 * n - 1) * (2 * n + 1)));
  }
  try {
    chain_at(L0, Q(1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PoleAtB);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(ChainAtViaPolynomials, MatchesDirectFormula) {
  EXPECT_EQ(chain_at_via_polynomials(L0, Q(-1), 3).d.take(3), chain_at(L0, Q(-1), 3).d.take(3));
  EXPECT_EQ(chain_at_via_polynomials(L0, Q(0), 3).d.take(3), (std::vector<Q>{Q(1, 3), Q(4, 15), Q(9, 35)}));
  EXPECT_TRUE(chain_at_via_polynomials(L0, Q(0), 0).d.empty());
  std::mt19937_64 rng(12);
  for (int s = 0; s < 10; ++s) {
    const auto sys = system_from_gamma(GammaSeq::finite(random_gamma(rng, 30)));
    for (const Q t : {Q(0), Q(-1, 3), Q(-7)}) {
      EXPECT_EQ(chain_at_via_polynomials(sys, t, 12).d.take(12), chain_at(sys, t, 12).d.take(12));
    }
  }
}

TEST(Complementary, Laguerre) {
  const auto c = complementary(params({0, Q(1, 3), Q(2, 5), Q(3, 7)}));
  EXPECT_EQ(c.params.g.take(3), (std::vector<Q>{0, Q(2, 3), Q(3, 5), Q(4, 7)}));
  EXPECT_EQ(c.chain.d.take(3), (std::vector<Q>{Q(2, 3), Q(1, 5), Q(8, 35)}));
  EXPECT_TRUE(c.params.minimal());
}

TEST(Complementary, SelfComplementaryTail) {
  const auto c = complementary(params({0, Q(1, 2), Q(1, 2), Q(1, 2)}));
  EXPECT_EQ(c.chain.d.take(3), (std::vector<Q>{Q(1, 2), Q(1, 4), Q(1, 4)}));
  EXPECT_EQ(c.params.g.take(3), (std::vector<Q>{0, Q(1, 2), Q(1, 2), Q(1, 2)}));
}

TEST(Complementary, InvolutionOnTails) {
  const auto m = minimal_parameters(chain_at(L0, Q(0), 10), 10);
  const auto k = complementary(m);
  const auto kk = complementary(k.params);
  EXPECT_EQ(kk.params.g.take(10), m.g.take(10));
  // The complement's own minimal parameters are k.
  EXPECT_EQ(minimal_parameters(k.chain, 10).g.take(10), k.params.g.take(10));
}

TEST(Complementary, NeedsMinimal) {
  EXPECT_EQ(code_of([] { complementary(params({Q(1, 2), Q(1, 2)})); }), Errc::NotMinimal);
}

TEST(GeneralisedComplementary, EFamilyTail) {
  const auto gamma = laguerre_gamma(Q(0), Q(1));
  const auto g = parameters_from_gamma(gamma, 5);
  EXPECT_EQ(g.g.at(0), Q(1, 2));
  const auto gc = generalised_complementary(g);
  EXPECT_EQ(gc.chain.d.at(1), Q(1, 4));
  const auto sys = system_from_gamma(gamma);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(gc.chain.d.at(n), gamma.at(2 * n - 1) * gamma.at(2 * n + 2) / (sys.b.at(n) * sys.b.at(n + 1)));
  }
}

TEST(GeneralisedComplementary, MinimalInputReducesToComplementary) {
  const auto m = params({0, Q(1, 3), Q(2, 5), Q(3, 7)});
  EXPECT_EQ(generalised_complementary(m).chain.d.take(3), complementary(m).chain.d.take(3));
  EXPECT_EQ(code_of([] { generalised_complementary(params({Q(1), Q(1, 2)})); }), Errc::ParameterOutOfRange);
}

TEST(GeneralisedComplementary, RandomGammaFormula) {
  std::mt19937_64 rng(31);
  for (int s = 0; s < 10; ++s) {
    const auto gamma = GammaSeq::finite(random_gamma(rng, 34));
    const auto sys = system_from_gamma(gamma);
    const auto gc = generalised_complementary(parameters_from_gamma(gamma, 15));
    for (std::size_t n = 1; n <= 15; ++n) {
      EXPECT_EQ(gc.chain.d.at(n), gamma.at(2 * n - 1) * gamma.at(2 * n + 2) / (sys.b.at(n) * sys.b.at(n + 1)));
    }
  }
}

TEST(ParametersFromGamma, MinimalIffGamma1Zero) {
  EXPECT_TRUE(parameters_from_gamma(laguerre_gamma(Q(0), Q(0)), 4).minimal());
  EXPECT_FALSE(parameters_from_gamma(laguerre_gamma(Q(0), Q(1)), 4).minimal());
  const auto m = minimal_parameters(chain_at(L0, Q(0), 8), 8);
  EXPECT_EQ(parameters_from_gamma(laguerre_gamma(Q(0), Q(0)), 8).g.take(8), m.g.take(8));
}

TEST(WallSppcs, Laguerre) {
  const auto neg = minimal_parameters(chain_at(laguerre_system(Q(-1, 2)), Q(0), 50), 50);
  const auto r1 = wall_sppcs_test(neg, 50);
  EXPECT_EQ(r1.verdict, SppcsVerdict::UniqueByWall);
  EXPECT_EQ(r1.label(), "UniqueByWall up to 50");
  const auto zero = minimal_parameters(chain_at(L0, Q(0), 50), 50);
  const auto r2 = wall_sppcs_test(zero, 50);
  EXPECT_EQ(r2.verdict, SppcsVerdict::ComplementIsSPPCS);
  EXPECT_EQ(r2.wall_witness, 1u);
  const auto pos = minimal_parameters(chain_at(laguerre_system(Q(2)), Q(0), 50), 50);
  EXPECT_EQ(wall_sppcs_test(pos, 50).verdict, SppcsVerdict::ComplementIsSPPCS);
}

TEST(WallSppcs, Inconclusive) {
  const auto r = wall_sppcs_test(params({0, Q(3, 5), Q(1, 5)}), 2);
  EXPECT_EQ(r.verdict, SppcsVerdict::Inconclusive);
  EXPECT_EQ(r.complement_witness, 1u);
  EXPECT_EQ(r.wall_witness, 2u);
}

TEST(TrueInterval, Laguerre) {
  const auto pass = true_interval_predicate(L0, Q(0), std::nullopt, 20);
  EXPECT_TRUE(pass.pass);
  EXPECT_EQ(pass.label(), "PassUpTo(20)");
  const auto fail = true_interval_predicate(L0, Q(2), Q(3), 5);
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.witness_kind, "b_out_of_range");
  EXPECT_EQ(fail.label(), "Fail(b_out_of_range@1)");
  EXPECT_TRUE(true_interval_predicate(L0, Q(0), Q(2), 0).pass);
  // Zeros reach beyond 2 once n >= 2, and the chain at b = 5 breaks.
  EXPECT_FALSE(true_interval_predicate(L0, Q(-1), Q(5), 6).pass);
}
