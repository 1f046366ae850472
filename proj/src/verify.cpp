#include "opchain/verify.hpp"

#include <functional>
#include <map>

#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/jacobi.hpp"
#include "opchain/perturbations.hpp"

namespace opchain {

namespace {

using P = Polynomial<Rational>;

P scalar(const Rational& v) { return P::constant(v); }

// Vectors are compared as coefficient lists; entries here are never a trailing zero.
P as_list(const std::vector<Rational>& v) { return P(v); }

const std::vector<Rational>& alphas() {
  static const std::vector<Rational> a{Rational(-1, 2), Rational(0), Rational(1), Rational(7, 3)};
  return a;
}

std::string alpha_tag(const Rational& alpha) { return "alpha=" + alpha.str(); }

Rational idx(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

void append(IdentityReport& into, const IdentityReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

// Each suite draws its own samples from a generator seeded with the bare seed,
// so a suite reproduces identically whether run alone or as part of "all".
struct Sampler {
  std::mt19937_64 rng;
  SuiteResult* out;

  GammaSeq next(std::size_t len) {
    auto g = random_gamma(rng, len);
    out->samples.push_back(g);
    return GammaSeq::finite(std::move(g));
  }
};

void suite_theorem33(SuiteResult& r, const VerifyOptions& o) {
  Sampler s{std::mt19937_64(o.seed), &r};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 4);
    const std::string tag = "sample " + std::to_string(i);
    for (auto rep : {theorem33_check(gamma, o.n, true, o.corruption), theorem33_check(gamma, o.n, false, o.corruption),
                     corecursive_check(gamma, o.n, o.corruption), unified_check(gamma, o.n, o.corruption)}) {
      rep.branch += ", " + tag;
      r.reports.push_back(std::move(rep));
    }
  }
}

void suite_gccs(SuiteResult& r, const VerifyOptions& o) {
  Sampler s{std::mt19937_64(o.seed), &r};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 4);
    IdentityReport rep{"gccs", "hat chain at 0 vs k'_n = 1 - g_n, sample " + std::to_string(i), {}};
    const auto hat = hat_system(apply_corruption(gamma, o.corruption));
    const auto d_hat = chain_at(hat.system, Rational(0), o.n);
    const auto gc = generalised_complementary(parameters_from_gamma(gamma, o.n));
    for (std::size_t k = 1; k <= o.n; ++k) {
      rep.record("d^_k = (1 - k'_{k-1}) k'_k", k, scalar(d_hat.d.at(k)), scalar(gc.chain.d.at(k)));
    }
    r.reports.push_back(std::move(rep));
  }
  for (const auto& alpha : alphas()) {
    const auto gamma = apply_corruption(laguerre_gamma(alpha, Rational(1)), o.corruption);
    IdentityReport rep{"gccs_laguerre", "gamma_1 = 1 tail, " + alpha_tag(alpha), {}};
    const auto hat = monic_sequence(hat_system(gamma).system, o.n);
    const auto shifted = monic_sequence(laguerre_system(alpha + Rational(1)), o.n);
    ThreeTermSystem<Rational> expected_tilde{
        Stream<Rational>::generated([alpha](std::size_t k) { return k == 1 ? Rational(1) : idx(2 * k) + alpha; }),
        Stream<Rational>::generated([alpha](std::size_t n) { return idx(n) * (idx(n) + alpha + Rational(1)); }),
        std::nullopt};
    const auto tilde = monic_sequence(tilde_system(gamma), o.n);
    const auto tilde_ref = monic_sequence(expected_tilde, o.n);
    for (std::size_t n = 0; n <= o.n; ++n) {
      rep.record("P^_n = monic L^(alpha+1)_n", n, hat[n], shifted[n]);
      rep.record("P~_n from b~_{n+1} = 2n+alpha+2, a~_n^2 = n(n+alpha+1)", n, tilde[n], tilde_ref[n]);
    }
    r.reports.push_back(std::move(rep));
  }
}

void suite_kernel_invariance(SuiteResult& r, const VerifyOptions& o) {
  for (const auto& alpha : alphas()) {
    for (const auto* g1 : {"0", "1"}) {
      auto rep = kernel_invariance_check(laguerre_gamma(alpha, Rational::parse(g1)), o.n, o.corruption);
      rep.branch = "laguerre gamma_1 = " + std::string(g1) + ", " + alpha_tag(alpha);
      r.reports.push_back(std::move(rep));
    }
  }
  std::vector<GammaSeq> progressions;
  for (std::int64_t j = 0; j < 10; ++j) {
    const Rational c1(j + 1, 3), c2(2 * j + 1, 5), d(j + 2, 4);
    std::vector<Rational> g;
    for (std::size_t m = 1; m <= o.n + 2; ++m) {
      g.push_back(c1 + idx(m - 1) * d);
      g.push_back(c2 + idx(m - 1) * d);
    }
    progressions.push_back(GammaSeq::finite(std::move(g)));
  }
  for (std::size_t j = 0; j < progressions.size(); ++j) {
    auto rep = kernel_invariance_check(progressions[j], o.n, o.corruption);
    rep.branch = "arithmetic progression " + std::to_string(j);
    r.reports.push_back(std::move(rep));
  }
  if (o.n >= 2) {
    IdentityReport control{"kernel_invariance_control", "mutated progression must be rejected", {}};
    const auto mutated = progressions[0].with_entry(5, progressions[0].at(5) + Rational(1));
    const bool rejected = !kernel_invariance_condition(mutated, o.n) && !kernel_invariance_check(mutated, o.n).ok();
    control.record("mutation detected", 2, scalar(Rational(rejected ? 1 : 0)), scalar(Rational(1)));
    r.reports.push_back(std::move(control));
  }
  Sampler s{std::mt19937_64(o.seed), &r};
  IdentityReport iff{"kernel_invariance_iff", "random samples: streams agree iff increments agree", {}};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 2);
    const bool cond = kernel_invariance_condition(gamma, o.n);
    const bool agree = kernel_invariance_check(gamma, o.n).ok();
    iff.record("condition <=> agreement", o.n, scalar(Rational(cond ? 1 : 0)), scalar(Rational(agree ? 1 : 0)));
  }
  r.reports.push_back(std::move(iff));
}

void suite_quasi_orth(SuiteResult& r, const VerifyOptions& o) {
  Sampler s{std::mt19937_64(o.seed), &r};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 4);
    IdentityReport rep{"quasi_orthogonality", "split (b1 = gamma2), sample " + std::to_string(i), {}};
    for (std::size_t m = 0; m <= o.n; ++m) append(rep, quasi_orthogonality_check(gamma, m, o.corruption));
    r.reports.push_back(std::move(rep));
    auto qu = q_u_identity_check(gamma, o.n, o.corruption);
    qu.branch += ", sample " + std::to_string(i);
    r.reports.push_back(std::move(qu));
  }
}

IdentityReport lu_report(const std::string& branch, const GammaSeq& gamma, std::size_t n,
                         const std::optional<Corruption>& corruption) {
  IdentityReport rep{"lu_darboux", branch, {}};
  const auto ref = apply_corruption(gamma, corruption);
  const auto sys = system_from_gamma(gamma);
  const auto kernel = kernel_system(gamma);
  for (std::size_t m = 1; m <= n; ++m) {
    const auto J = truncate(sys, m);
    const auto f = lu_factor(J, ref.at(1));
    const auto back = f.reconstruct();
    rep.record("L U + gamma_1 E11 = J (diagonal)", m, as_list(back.diag), as_list(J.diag));
    rep.record("L U + gamma_1 E11 = J (subdiagonal)", m, as_list(back.sub), as_list(J.sub));
    std::vector<Rational> pivots, lsub;
    for (std::size_t k = 1; k <= m; ++k) pivots.push_back(ref.at(2 * k));
    for (std::size_t k = 1; k < m; ++k) lsub.push_back(ref.at(2 * k + 1));
    rep.record("U diagonal = gamma_2, gamma_4, ...", m, as_list(f.u_diag), as_list(pivots));
    rep.record("L subdiagonal = gamma_3, gamma_5, ...", m, as_list(f.l_sub), as_list(lsub));
    const auto ul = ul_product(f);
    const auto K = truncate(kernel, m);
    std::vector<Rational> ul_inner(ul.diag.begin(), ul.diag.end() - 1), k_inner(K.diag.begin(), K.diag.end() - 1);
    rep.record("U L = kernel Jacobi (inner diagonal)", m, as_list(ul_inner), as_list(k_inner));
    rep.record("U L = kernel Jacobi (subdiagonal)", m, as_list(ul.sub), as_list(K.sub));
    rep.record("U L boundary entry = gamma_{2n}", m, scalar(ul.diag.back()), scalar(ref.at(2 * m)));
  }
  return rep;
}

void suite_lu(SuiteResult& r, const VerifyOptions& o) {
  for (const auto& alpha : alphas()) {
    r.reports.push_back(lu_report("laguerre, " + alpha_tag(alpha), laguerre_gamma(alpha, Rational(0)), o.n, o.corruption));
    r.reports.push_back(lu_report("e_family, " + alpha_tag(alpha), laguerre_gamma(alpha, Rational(1)), o.n, o.corruption));
  }
  Sampler s{std::mt19937_64(o.seed), &r};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 2);
    r.reports.push_back(lu_report("sample " + std::to_string(i), gamma, o.n, o.corruption));
  }
}

void suite_laguerre(SuiteResult& r, const VerifyOptions& o) {
  const std::size_t n = o.n;
  for (const auto& alpha : alphas()) {
    const auto L = laguerre_system(alpha);
    const auto closed0 = laguerre_gamma(alpha, Rational(0));
    const auto closed1 = laguerre_gamma(alpha, Rational(1));
    IdentityReport rep{"laguerre", alpha_tag(alpha), {}};

    const auto rec0 = apply_corruption(gamma_from_system(L, Rational(0), n), o.corruption);
    const auto rec1 = apply_corruption(gamma_from_system(e_family_system(alpha), Rational(1), n), o.corruption);
    for (std::size_t k = 1; k <= 2 * n + 2; ++k) {
      rep.record("recovered gamma_k = closed form (gamma_1 = 0)", k, scalar(rec0.stream().at(k)), scalar(closed0.at(k)));
      rep.record("recovered gamma_k = closed form (gamma_1 = 1)", k, scalar(rec1.stream().at(k)), scalar(closed1.at(k)));
    }

    const auto d = chain_at(system_from_gamma(rec0), Rational(0), n);
    const auto m = minimal_parameters(d, n);
    const auto kernel = kernel_system(rec0);
    const auto shifted = laguerre_system(alpha + Rational(1));
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational J = idx(j);
      rep.record("d_n = n(n+alpha)/((2n+alpha-1)(2n+alpha+1))", j, scalar(d.d.at(j)),
                 scalar(J * (J + alpha) / ((Rational(2) * J + alpha - Rational(1)) * (Rational(2) * J + alpha + Rational(1)))));
      rep.record("m_n = n/(2n+alpha+1)", j, scalar(m.g.at(j)), scalar(J / (Rational(2) * J + alpha + Rational(1))));
      rep.record("kernel b_n = b_n of L^(alpha+1)", j, scalar(kernel.b.at(j)), scalar(shifted.b.at(j)));
      rep.record("kernel a_n^2 = a_n^2 of L^(alpha+1)", j, scalar(kernel.a2.at(j)), scalar(shifted.a2.at(j)));
    }
    r.reports.push_back(std::move(rep));
  }
}

void suite_moments(SuiteResult& r, const VerifyOptions& o) {
  Sampler s{std::mt19937_64(o.seed), &r};
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto gamma = s.next(2 * o.n + 2);
    const auto sys = system_from_gamma(gamma);
    const auto mom = moment_sequence(system_from_gamma(apply_corruption(gamma, o.corruption)), 2 * o.n);
    IdentityReport rep{"moments", "convergent expansion vs matrix powers, sample " + std::to_string(i), {}};
    for (std::size_t m = 1; m <= o.n; ++m) {
      const auto [num, den] = convergent(sys, m);
      const auto series = laurent_expand(num, den, 2 * m);
      rep.record("laurent(P1_n / P_n) = mu_0..mu_{2n-1}", m, as_list(series.coeffs),
                 as_list(std::vector<Rational>(mom.begin(), mom.begin() + 2 * m)));
    }
    r.reports.push_back(std::move(rep));
  }
  IdentityReport fact{"moments_laguerre", "alpha=0, mu_k = k!", {}};
  const std::size_t kmax = std::max<std::size_t>(10, o.n);
  const auto mom = moment_sequence(system_from_gamma(apply_corruption(laguerre_gamma(Rational(0), Rational(0)), o.corruption)), kmax);
  Rational f(1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) f *= idx(k);
    fact.record("mu_k = k!", k, scalar(mom[k]), scalar(f));
  }
  r.reports.push_back(std::move(fact));
}

const std::map<std::string, std::function<void(SuiteResult&, const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<void(SuiteResult&, const VerifyOptions&)>> r{
      {"theorem33", suite_theorem33}, {"gccs", suite_gccs},   {"kernel_invariance", suite_kernel_invariance},
      {"quasi_orth", suite_quasi_orth}, {"lu", suite_lu},     {"laguerre", suite_laguerre},
      {"moments", suite_moments}};
  return r;
}

}  // namespace

bool SuiteResult::ok() const {
  for (const auto& rep : reports) {
    if (!rep.ok()) return false;
  }
  return true;
}

bool VerifyResult::ok() const {
  for (const auto& s : suites) {
    if (!s.ok()) return false;
  }
  return true;
}

std::vector<Rational> random_gamma(std::mt19937_64& rng, std::size_t len) {
  std::vector<Rational> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    const auto q = static_cast<std::int64_t>(rng() % 64) + 1;
    const auto p = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * q)) + 1;
    out.emplace_back(p, q);
  }
  return out;
}

SuiteResult run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error(Errc::InvalidArgument, "unknown suite: " + suite);
  SuiteResult r;
  r.suite = suite;
  r.n = options.n;
  it->second(r, options);
  return r;
}

VerifyResult run_verify(const VerifyOptions& options) {
  VerifyResult out;
  out.options = options;
  if (options.suite == "all") {
    for (const auto& name : verify_suites()) out.suites.push_back(run_suite(name, options));
  } else {
    out.suites.push_back(run_suite(options.suite, options));
  }
  return out;
}

io::json to_json(const SuiteResult& result) {
  io::json out;
  out["suite"] = result.suite;
  out["n"] = result.n;
  out["status"] = result.ok() ? "pass" : "fail";
  io::json samples = io::json::array();
  for (const auto& g : result.samples) samples.push_back(io::to_json(g));
  out["samples"] = samples;
  io::json reports = io::json::array();
  for (const auto& rep : result.reports) reports.push_back(io::report_to_json(rep));
  out["reports"] = reports;
  return out;
}

io::json to_json(const VerifyResult& result) {
  io::json out;
  out["suite"] = result.options.suite;
  out["n"] = result.options.n;
  out["seed"] = result.options.seed;
  out["samples"] = result.options.samples;
  if (result.options.corruption) {
    out["injected_corruption"] = {{"index", result.options.corruption->index},
                                  {"delta", result.options.corruption->delta.str()}};
  } else {
    out["injected_corruption"] = nullptr;
  }
  out["status"] = result.ok() ? "pass" : "fail";
  io::json suites = io::json::array();
  for (const auto& s : result.suites) suites.push_back(to_json(s));
  out["suites"] = suites;
  return out;
}

}  // namespace opchain
