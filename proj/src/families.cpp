#include "opchain/families.hpp"

#include <string>

namespace opchain {

namespace {

void require_alpha(const Rational& alpha) {
  if (alpha <= Rational(-1)) throw Error(Errc::AlphaOutOfRange, "alpha must exceed -1, got " + alpha.str());
}

Rational idx(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

ClosedForm form(std::string name, std::initializer_list<std::pair<const std::string, std::string>> params) {
  return {std::move(name), params};
}

}  // namespace

ThreeTermSystem<Rational> laguerre_system(const Rational& alpha) {
  require_alpha(alpha);
  auto b = Stream<Rational>::generated([alpha](std::size_t k) { return idx(2 * k) + alpha - Rational(1); });
  auto a2 = Stream<Rational>::generated([alpha](std::size_t n) { return idx(n) * (idx(n) + alpha); });
  return {std::move(b), std::move(a2), form("laguerre", {{"alpha", alpha.str()}})};
}

GammaSeq laguerre_gamma(const Rational& alpha, const Rational& gamma1) {
  require_alpha(alpha);
  if (gamma1 != Rational(0) && gamma1 != Rational(1)) {
    throw Error(Errc::InvalidArgument, "the closed-form gamma branches are gamma_1 = 0 and gamma_1 = 1");
  }
  const Rational shift = gamma1;
  auto s = Stream<Rational>::generated([alpha, shift](std::size_t k) {
    if (k == 1) return shift;
    const Rational n = idx(k / 2);
    return k % 2 == 0 ? n + alpha : n + shift;
  });
  return GammaSeq(std::move(s), form("laguerre_gamma", {{"alpha", alpha.str()}, {"gamma1", gamma1.str()}}));
}

ThreeTermSystem<Rational> e_family_system(const Rational& alpha) {
  require_alpha(alpha);
  auto b = Stream<Rational>::generated([alpha](std::size_t k) { return idx(2 * k) + alpha; });
  auto a2 = Stream<Rational>::generated([alpha](std::size_t n) { return idx(n + 1) * (idx(n) + alpha); });
  return {std::move(b), std::move(a2), form("e_family", {{"alpha", alpha.str()}})};
}

ThreeTermSystem<Rational> associated_shift(const ThreeTermSystem<Rational>& sys) {
  auto shift = [](const Stream<Rational>& s) {
    std::optional<std::size_t> last = s.last();
    if (last) last = *last == 0 ? 0 : *last - 1;
    return Stream<Rational>::generated([s](std::size_t n) { return s.at(n + 1); }, 1, last);
  };
  return {shift(sys.b), shift(sys.a2), std::nullopt};
}

ThreeTermSystem<Rational> laguerre_assoc1_system(const Rational& alpha) {
  require_alpha(alpha);
  // L^(alpha-1) may fall outside alpha > -1, so its formulas are used directly.
  const Rational beta = alpha - Rational(1);
  ThreeTermSystem<Rational> base{
      Stream<Rational>::generated([beta](std::size_t k) { return idx(2 * k) + beta - Rational(1); }),
      Stream<Rational>::generated([beta](std::size_t n) { return idx(n) * (idx(n) + beta); }), std::nullopt};
  auto out = associated_shift(base);
  out.closed_form = form("laguerre_assoc1", {{"alpha", alpha.str()}});
  return out;
}

// Routh-Romanovski ---------------------------------------------------------

RRPieces rr_pieces(const Rational& p, std::size_t n) {
  const Rational d1 = p - idx(2 * n + 2);
  const Rational d2 = p - idx(n + 1);
  const Rational d3 = p - idx(2 * n);
  if (d1.is_zero() || d2.is_zero() || d3.is_zero()) {
    throw Error(Errc::ZeroDenominator, "Routh-Romanovski denominator vanishes at n = " + std::to_string(n), n);
  }
  const Rational mid = p - idx(2 * n + 1);
  return {d1 * mid / d2, -(p * mid) / (d2 * d3), idx(n) * d1 / (d2 * d3)};
}

MonicStep monicize(const RRPieces& current, const std::optional<RRPieces>& previous) {
  if (current.A.is_zero()) throw Error(Errc::ZeroDenominator, "A_n vanishes");
  MonicStep out{-current.B / current.A, std::nullopt};
  if (previous) {
    if (previous->A.is_zero()) throw Error(Errc::ZeroDenominator, "A_{n-1} vanishes");
    out.a2 = current.C / (current.A * previous->A);
  }
  return out;
}

RRParams rr_params(const Rational& p) {
  RRParams out{p, 0};
  std::optional<RRPieces> prev;
  for (std::size_t n = 0; n < kRRScanCap; ++n) {
    RRPieces cur;
    try {
      cur = rr_pieces(p, n);
    } catch (const Error&) {
      break;
    }
    if (cur.A.is_zero()) break;
    const auto step = monicize(cur, prev);
    if (step.a2 && step.a2->sign() <= 0) break;
    // Steps 0..n are valid, so N_{n+1} is served.
    out.n_max = n + 1;
    prev = cur;
  }
  return out;
}

MonicStep rr_monicize(const RRParams& params, std::size_t n) {
  const RRPieces cur = rr_pieces(params.p, n);
  if (n >= params.n_max) {
    throw Error(Errc::DegreeBeyondFamily, "n lies outside the finite Routh-Romanovski window", n);
  }
  std::optional<RRPieces> prev;
  if (n >= 1) prev = rr_pieces(params.p, n - 1);
  return monicize(cur, prev);
}

ThreeTermSystem<Rational> routh_romanovski_system(const Rational& p) {
  const RRParams params = rr_params(p);
  std::vector<Rational> b;
  std::vector<Rational> a2;
  for (std::size_t n = 0; n < params.n_max; ++n) {
    const auto step = rr_monicize(params, n);
    b.push_back(step.b);
    if (step.a2) a2.push_back(*step.a2);
  }
  return {Stream<Rational>::finite(std::move(b), 1), Stream<Rational>::finite(std::move(a2), 1),
          form("routh_romanovski", {{"p", p.str()}, {"n_max", std::to_string(params.n_max)}})};
}

// l-sequences --------------------------------------------------------------

LSequence LSequence::make(std::vector<Rational> l, Rational k) {
  if (k.sign() <= 0) throw Error(Errc::NonPositiveInput, "k must be positive");
  if (l.empty() || l[0] != Rational(1)) throw Error(Errc::NonPositiveInput, "l_0 must equal 1", 0);
  for (std::size_t n = 1; n < l.size(); ++n) {
    if (l[n] <= Rational(1)) throw Error(Errc::NonPositiveInput, "l_n must exceed 1", n);
  }
  LSequence out;
  out.l_ = std::move(l);
  out.k_ = std::move(k);
  return out;
}

const Rational& LSequence::at(std::size_t n) const {
  if (n >= l_.size()) throw Error(Errc::StreamExhausted, "l index out of range", n);
  return l_[n];
}

LSequence l_from_gamma(const Stream<Rational>& gamma_phi1, const Rational& k, std::size_t N) {
  if (k.sign() <= 0) throw Error(Errc::NonPositiveInput, "k must be positive");
  std::vector<Rational> l{Rational(1)};
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational g = gamma_phi1.at(n + 1);
    if (g.sign() <= 0) throw Error(Errc::NonPositiveInput, "gamma^{phi1} entries must be positive", n + 1);
    l.push_back(Rational(1) + Rational(4) * k * g / (l.back() + Rational(1)));
  }
  return LSequence::make(std::move(l), k);
}

Stream<Rational> gamma_phi1_from_l(const LSequence& l) {
  std::vector<Rational> out;
  const Rational four_k = Rational(4) * l.k();
  for (std::size_t n = 1; n <= l.last(); ++n) out.push_back((l.at(n) - Rational(1)) * (l.at(n - 1) + Rational(1)) / four_k);
  return Stream<Rational>::finite(std::move(out), 2);
}

Stream<Rational> gamma_phi2_from_l(const LSequence& l) {
  std::vector<Rational> out;
  const Rational four_k = Rational(4) * l.k();
  for (std::size_t n = 1; n < l.last(); ++n) out.push_back((l.at(n) - Rational(1)) * (l.at(n + 1) + Rational(1)) / four_k);
  return Stream<Rational>::finite(std::move(out), 2);
}

std::optional<std::size_t> pairwise_swap_violation(const Stream<Rational>& phi1, const Stream<Rational>& phi2,
                                                   std::size_t from) {
  const auto last = phi2.last();
  if (!last) throw Error(Errc::InvalidArgument, "phi2 must be finite");
  for (std::size_t i = from; i <= *last; ++i) {
    const std::size_t partner = i % 2 == 1 ? i + 1 : i - 1;
    if (!phi1.has(partner) || !phi2.has(i)) continue;
    if (phi2.at(i) != phi1.at(partner)) return i;
  }
  return std::nullopt;
}

}  // namespace opchain
