#include "opchain/gamma.hpp"

#include "opchain/errors.hpp"

namespace opchain {

GammaSeq::GammaSeq(Stream<Rational> gamma, std::optional<ClosedForm> closed_form)
    : gamma_(std::move(gamma)), closed_form_(std::move(closed_form)) {
  if (gamma_.first() != 1) throw Error(Errc::InvalidArgument, "gamma sequences are indexed from 1");
}

GammaSeq GammaSeq::finite(std::vector<Rational> values) { return GammaSeq(Stream<Rational>::finite(std::move(values), 1)); }

Rational GammaSeq::at(std::size_t k) const {
  Rational v = gamma_.at(k);
  if (k == 1 ? v.sign() < 0 : v.sign() <= 0) {
    throw Error(Errc::NonPositiveGamma, k == 1 ? "gamma_1 must be >= 0" : "gamma_k must be > 0 for k >= 2", k);
  }
  return v;
}

void GammaSeq::validate(std::optional<std::size_t> upto) const {
  const auto last = upto ? upto : gamma_.last();
  if (!last) return;
  for (std::size_t k = 1; k <= *last; ++k) (void)at(k);
}

std::vector<Rational> GammaSeq::take(std::size_t last) const {
  std::vector<Rational> out;
  out.reserve(last);
  for (std::size_t k = 1; k <= last; ++k) out.push_back(at(k));
  return out;
}

GammaSeq GammaSeq::with_gamma1(Rational gamma1) const { return with_entry(1, std::move(gamma1)); }

GammaSeq GammaSeq::with_entry(std::size_t k, Rational value) const {
  auto base = gamma_;
  auto last = base.last();
  if (last && k > *last) throw Error(Errc::StreamExhausted, "cannot replace a missing gamma entry", k);
  auto gen = [base, k, value](std::size_t n) { return n == k ? value : base.at(n); };
  if (last) {
    std::vector<Rational> values;
    for (std::size_t n = 1; n <= *last; ++n) values.push_back(gen(n));
    return GammaSeq(Stream<Rational>::finite(std::move(values)));
  }
  return GammaSeq(Stream<Rational>::generated(gen, 1, std::nullopt));
}

GammaSeq apply_corruption(const GammaSeq& gamma, const std::optional<Corruption>& corruption) {
  if (!corruption) return gamma;
  return gamma.with_entry(corruption->index, gamma.stream().at(corruption->index) + corruption->delta);
}

}  // namespace opchain
