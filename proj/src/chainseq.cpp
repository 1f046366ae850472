#include "opchain/chainseq.hpp"

namespace opchain {

namespace {

std::optional<std::size_t> half_last(const GammaSeq& gamma, std::size_t offset) {
  // largest n with 2n + offset <= last
  return derived_last(gamma, 2, offset);
}

}  // namespace

std::string SppcsResult::label() const {
  const std::string window_text = " up to " + std::to_string(window);
  switch (verdict) {
    case SppcsVerdict::UniqueByWall: return "UniqueByWall" + window_text;
    case SppcsVerdict::ComplementIsSPPCS: return "ComplementIsSPPCS" + window_text;
    case SppcsVerdict::Inconclusive: break;
  }
  std::string out = "Inconclusive" + window_text;
  if (complement_witness) out += " (complement fails at " + std::to_string(*complement_witness) + ")";
  if (wall_witness) out += " (Wall bound fails at " + std::to_string(*wall_witness) + ")";
  return out;
}

SppcsResult wall_sppcs_test(const ParameterSeq<Rational>& m, std::size_t N) {
  SppcsResult out;
  out.window = N;
  const Rational half(1, 2);
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational mn = m.g.at(n);
    if (mn.sign() <= 0 || mn >= half) {
      out.complement_witness = n;
      break;
    }
  }
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational mn = m.g.at(n);
    const Rational bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n + 1));
    if (mn.sign() <= 0 || mn >= Rational(1) || mn / (Rational(1) - mn) <= bound) {
      out.wall_witness = n;
      break;
    }
  }
  if (N >= 1 && !out.wall_witness) {
    out.verdict = SppcsVerdict::UniqueByWall;
  } else if (!out.complement_witness) {
    out.verdict = SppcsVerdict::ComplementIsSPPCS;
  }
  return out;
}

ThreeTermSystem<Rational> system_from_gamma(const GammaSeq& gamma) {
  if (gamma.last()) gamma.validate();
  auto b = Stream<Rational>::generated(
      [gamma](std::size_t k) { return gamma.at(2 * k - 1) + gamma.at(2 * k); }, 1, half_last(gamma, 0));
  auto a2 = Stream<Rational>::generated(
      [gamma](std::size_t n) { return gamma.at(2 * n) * gamma.at(2 * n + 1); }, 1, half_last(gamma, 1));
  return {std::move(b), std::move(a2), std::nullopt};
}

ThreeTermSystem<Rational> split_system(const GammaSeq& gamma) {
  return system_from_gamma(gamma.with_gamma1(Rational(0)));
}

GammaSeq recover_gamma(const ThreeTermSystem<Rational>& sys, const Rational& gamma1, std::size_t last) {
  const Rational b1 = sys.b.at(1);
  if (gamma1.sign() < 0 || gamma1 >= b1) throw Error(Errc::InvalidGamma1, "need 0 <= gamma_1 < b_1 = " + b1.str());
  std::vector<Rational> g{gamma1};
  if (last >= 2) g.push_back(b1 - gamma1);
  for (std::size_t k = 3; k <= last; ++k) {
    Rational v;
    std::size_t n = 0;
    if (k % 2 == 1) {
      n = (k - 1) / 2;
      v = sys.a2.at(n) / g[k - 2];
    } else {
      n = (k - 2) / 2;
      v = sys.b.at(n + 1) - g[k - 2];
    }
    if (v.sign() <= 0) {
      throw Error(Errc::PositivityBreak, "gamma_" + std::to_string(k) + " = " + v.str() + " is not positive", n);
    }
    g.push_back(std::move(v));
  }
  g.resize(std::min<std::size_t>(g.size(), last));
  return GammaSeq::finite(std::move(g));
}

GammaSeq gamma_from_system(const ThreeTermSystem<Rational>& sys, const Rational& gamma1, std::size_t N) {
  return recover_gamma(sys, gamma1, 2 * N + 2);
}

ParameterSeq<Rational> parameters_from_gamma(const GammaSeq& gamma, std::size_t N) {
  std::vector<Rational> g;
  for (std::size_t n = 0; n <= N; ++n) {
    const Rational odd = gamma.at(2 * n + 1);
    g.push_back(odd / (odd + gamma.at(2 * n + 2)));
  }
  return {Stream<Rational>::finite(std::move(g), 0), std::nullopt};
}

std::string IntervalVerdict::label() const {
  if (pass) return "PassUpTo(" + std::to_string(window) + ")";
  return "Fail(" + witness_kind + "@" + std::to_string(witness_index) + ")";
}

IntervalVerdict true_interval_predicate(const ThreeTermSystem<Rational>& sys, const Rational& a, const UpperBound& b,
                                        std::size_t N) {
  IntervalVerdict out;
  out.window = N;
  if (b && *b <= a) throw Error(Errc::InvalidArgument, "interval needs a < b");
  for (std::size_t k = 1; k <= N + 1; ++k) {
    const Rational bk = sys.b.at(k);
    if (bk <= a || (b && bk >= *b)) {
      out.witness_kind = "b_out_of_range";
      out.witness_index = k;
      return out;
    }
  }
  auto chain_ok = [&](const Rational& t, const char* kind) {
    try {
      (void)minimal_parameters(chain_at(sys, t, N), N);
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::StreamExhausted) throw;
      out.witness_kind = kind;
      out.witness_index = e.index().value_or(0);
      return false;
    }
  };
  if (!chain_ok(a, "chain_at_a")) return out;
  if (b && !chain_ok(*b, "chain_at_b")) return out;
  out.pass = true;
  return out;
}

}  // namespace opchain
