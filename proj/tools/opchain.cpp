// opchain: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 numerical breakdown.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/io.hpp"
#include "opchain/jacobi.hpp"
#include "opchain/perturbations.hpp"
#include "opchain/verify.hpp"

using namespace opchain;
using io::json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kNumerical = 3;

struct Options {
  std::string family;
  std::string input;
  std::string alpha = "0";
  std::string p;
  std::optional<std::string> gamma1;
  std::size_t n = 4;
  std::size_t k = 4;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::size_t samples = 25;
  bool use_float = false;
  std::string output;
  std::string suite = "all";
  std::string variant = "tilde";
  std::optional<std::size_t> corrupt_index;
  std::string corrupt_delta = "1";
};

double default_tol() {
  if (const char* env = std::getenv("OPCHAIN_PRECISION")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      throw Error(Errc::InvalidArgument, std::string("OPCHAIN_PRECISION must be a positive number, got ") + env);
    }
    return v;
  }
  return 1e-12;
}

double tolerance(const Options& o) { return o.tol ? *o.tol : default_tol(); }

// Where the recurrence comes from: a named family or an --input document.
struct Source {
  std::string label;
  ThreeTermSystem<Rational> sys;
  std::optional<GammaSeq> gamma;
  Rational default_gamma1{0};
};

Source resolve(const Options& o) {
  if (!o.input.empty()) {
    auto parsed = io::parse_input(o.input);
    if (auto* g = std::get_if<GammaSeq>(&parsed)) return {"input", system_from_gamma(*g), *g, g->at(1)};
    return {"input", std::get<ThreeTermSystem<Rational>>(parsed), std::nullopt, Rational(0)};
  }
  if (o.family.empty()) throw Error(Errc::InvalidArgument, "either --family or --input is required");
  const Rational alpha = Rational::parse(o.alpha);
  if (o.family == "laguerre") return {o.family, laguerre_system(alpha), laguerre_gamma(alpha, Rational(0)), Rational(0)};
  if (o.family == "e_family") return {o.family, e_family_system(alpha), laguerre_gamma(alpha, Rational(1)), Rational(1)};
  if (o.family == "laguerre_assoc1") {
    return {o.family, laguerre_assoc1_system(alpha), laguerre_gamma(alpha, Rational(1)), Rational(1)};
  }
  if (o.family == "routh_romanovski") {
    if (o.p.empty()) throw Error(Errc::InvalidArgument, "routh_romanovski needs --p");
    return {o.family, routh_romanovski_system(Rational::parse(o.p)), std::nullopt, Rational(0)};
  }
  throw Error(Errc::InvalidArgument, "unknown family: " + o.family);
}

Rational gamma1_of(const Options& o, const Source& s) { return o.gamma1 ? Rational::parse(*o.gamma1) : s.default_gamma1; }

std::size_t recoverable_last(const ThreeTermSystem<Rational>& sys, std::size_t want) {
  std::size_t last = want;
  if (const auto b = sys.b.last()) last = std::min(last, 2 * *b);
  if (const auto a = sys.a2.last()) last = std::min(last, 2 * *a + 1);
  return last;
}

// The gamma sequence for a source: the closed form when the requested gamma_1
// matches it, otherwise recovered from (b, a^2).
GammaSeq gamma_of(const Options& o, const Source& s, std::size_t want) {
  const Rational g1 = gamma1_of(o, s);
  if (s.gamma && s.gamma->has(1) && s.gamma->stream().at(1) == g1) return *s.gamma;
  return recover_gamma(s.sys, g1, recoverable_last(s.sys, want));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json try_field(json& notes, const std::string& name, const std::function<json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    notes[name] = e.what();
    return nullptr;
  }
}

int cmd_family(const Options& o) {
  const Source s = resolve(o);
  std::size_t n = o.n;
  if (o.family == "routh_romanovski") {
    const auto last = s.sys.b.last().value_or(0);
    if (n > last) {
      throw Error(Errc::DegreeBeyondFamily, "Routh-Romanovski window ends at degree " + std::to_string(last), n);
    }
  }
  json doc;
  doc["family"] = s.label;
  doc["n"] = n;
  const auto sysj = io::system_to_json(s.sys, n);
  doc["b"] = sysj["b"];
  doc["a2"] = sysj["a2"];
  doc["closed_form"] = sysj["closed_form"];
  json notes = json::object();
  doc["gamma1"] = gamma1_of(o, s).str();
  doc["gamma"] = try_field(notes, "gamma", [&] {
    const auto g = gamma_of(o, s, 2 * n + 1);
    return io::to_json(g.take(std::min<std::size_t>(2 * n + 1, g.last().value_or(2 * n + 1))));
  });
  // Chain data needs b_{n+1}; a finite family is cut one step short.
  std::size_t depth = n;
  if (const auto last = s.sys.b.last()) depth = std::min(depth, *last == 0 ? 0 : *last - 1);
  std::optional<ParameterSeq<Rational>> m;
  doc["chain_d"] = try_field(notes, "chain_d", [&] { return io::to_json(chain_at(s.sys, Rational(0), depth).d.take(depth)); });
  doc["minimal_m"] = try_field(notes, "minimal_m", [&] {
    m = minimal_parameters(chain_at(s.sys, Rational(0), depth), depth);
    return io::to_json(m->g.take(depth));
  });
  doc["complementary_k"] = try_field(notes, "complementary_k", [&] {
    if (!m) throw Error(Errc::NotAChainSequence, "no minimal parameters");
    return io::to_json(complementary(*m).params.g.take(depth));
  });
  doc["notes"] = notes;
  emit(doc);
  return 0;
}

int cmd_perturb(const Options& o) {
  const Source s = resolve(o);
  const auto gamma = gamma_of(o, s, 2 * o.n + 4);
  ThreeTermSystem<Rational> sys;
  json doc;
  doc["variant"] = o.variant;
  if (o.variant == "tilde") {
    sys = tilde_system(gamma);
  } else if (o.variant == "hat") {
    const auto hat = hat_system(gamma);
    sys = hat.system;
    doc["favard_degenerate_at"] = hat.favard_degenerate_at ? json(*hat.favard_degenerate_at) : json(nullptr);
  } else if (o.variant == "tilde_kernel") {
    sys = tilde_kernel_system(gamma);
  } else if (o.variant == "q") {
    sys = q_system(gamma);
  } else if (o.variant == "u") {
    sys = u_system(gamma);
  } else if (o.variant == "unified_p" || o.variant == "unified_k") {
    const auto uc = unified_coefficients(
        gamma, o.variant == "unified_p" ? UnifiedVariant::TildeP : UnifiedVariant::TildeK, o.n);
    doc["xi"] = io::to_json(uc.xi);
    doc["eta"] = io::to_json(uc.eta);
    sys = uc.system();
  } else {
    throw Error(Errc::InvalidArgument, "unknown variant: " + o.variant);
  }
  const auto sysj = io::system_to_json(sys, o.n);
  doc["n"] = o.n;
  doc["b"] = sysj["b"];
  doc["a2"] = sysj["a2"];
  json polys = json::array();
  const auto seq = monic_sequence(sys, o.n);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    json entry = io::to_json(seq[k]);
    entry["n"] = k;
    polys.push_back(entry);
  }
  doc["polynomials"] = polys;
  emit(doc);
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.suite = o.suite;
  vo.n = o.n;
  vo.seed = o.seed;
  vo.samples = o.samples;
  if (o.corrupt_index) vo.corruption = Corruption{*o.corrupt_index, Rational::parse(o.corrupt_delta)};
  const auto result = run_verify(vo);
  emit(to_json(result));
  if (!result.ok()) {
    for (const auto& suite : result.suites) {
      for (const auto& rep : suite.reports) {
        if (const auto bad = rep.first_failure()) {
          std::cerr << "FAIL " << suite.suite << ": " << rep.name << " [" << rep.branch << "] " << bad->identity
                    << " at n=" << bad->degree << '\n';
          break;
        }
      }
    }
    return kVerifyFailed;
  }
  return 0;
}

int cmd_zeros(const Options& o) {
  const Source s = resolve(o);
  const auto zs = zeros(s.sys, o.n, tolerance(o));
  if (o.output == "json") {
    json rows = json::array();
    for (const auto& z : zs) rows.push_back({{"value", z.value}, {"bracket_width", z.bracket_width}});
    emit({{"n", o.n}, {"zeros", rows}});
  } else {
    std::cout << io::zeros_to_csv(zs);
  }
  return 0;
}

int cmd_lu(const Options& o) {
  const Source s = resolve(o);
  const Rational g1 = s.gamma && !o.gamma1 ? s.gamma->at(1) : gamma1_of(o, s);
  const auto J = truncate(s.sys, o.n);
  const auto f = lu_factor(J, g1);
  json doc = io::lu_to_json(f);
  doc["n"] = o.n;
  doc["reconstructs"] = f.reconstruct() == J;
  const auto ul = ul_product(f);
  doc["UL"] = {{"diag", io::to_json(ul.diag)}, {"sub", io::to_json(ul.sub)}};
  emit(doc);
  return 0;
}

template <ScalarType T>
int print_moments(const ThreeTermSystem<T>& sys, const Options& o) {
  const auto mom = moment_sequence(sys, o.k);
  if (o.output == "csv") {
    std::cout << "k,moment\n";
    for (std::size_t j = 0; j < mom.size(); ++j) std::cout << j << ',' << scalar_traits<T>::to_string(mom[j]) << '\n';
    return 0;
  }
  json seq = json::array();
  for (const auto& v : mom) seq.push_back(scalar_traits<T>::to_string(v));
  emit({{"k", o.k}, {"backend", std::string(scalar_traits<T>::name)}, {"moment", seq.back()}, {"sequence", seq}});
  return 0;
}

int cmd_moments(const Options& o) {
  const Source s = resolve(o);
  if (o.use_float) return print_moments(to_float(s.sys), o);
  return print_moments(s.sys, o);
}

template <ScalarType T>
json poly_doc(const Polynomial<T>& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(scalar_traits<T>::to_string(v));
  return c;
}

template <ScalarType T>
int print_convergent(const ThreeTermSystem<T>& sys, const Options& o) {
  const auto [num, den] = convergent(sys, o.n);
  json doc;
  doc["n"] = o.n;
  doc["backend"] = std::string(scalar_traits<T>::name);
  doc["numerator"] = poly_doc(num);
  doc["denominator"] = poly_doc(den);
  json series = json::array();
  if (o.n > 0) {
    for (const auto& c : laurent_expand(num, den, 2 * o.n).coeffs) series.push_back(scalar_traits<T>::to_string(c));
  }
  doc["laurent"] = series;
  emit(doc);
  return 0;
}

int cmd_convergent(const Options& o) {
  const Source s = resolve(o);
  if (o.use_float) return print_convergent(to_float(s.sys), o);
  return print_convergent(s.sys, o);
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("family,--family", o.family, "laguerre | e_family | laguerre_assoc1 | routh_romanovski");
  sub->add_option("--input", o.input, "JSON text or file: {\"gamma\": [...]} or {\"b\": [...], \"a2\": [...]}");
  sub->add_option("--alpha", o.alpha, "family parameter alpha (rational string)");
  sub->add_option("--p", o.p, "Routh-Romanovski parameter p");
  sub->add_option("--gamma1", o.gamma1, "gamma_1 for the decomposition");
  sub->add_option("--n", o.n, "degree / depth");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomial recurrences via chain sequences"};
  app.require_subcommand(1);
  Options o;

  auto* family = app.add_subcommand("family", "closed-form family coefficients and chain data");
  add_source(family, o);

  auto* perturb = app.add_subcommand("perturb", "perturbed systems built from a gamma sequence");
  add_source(perturb, o);
  perturb->add_option("--variant", o.variant, "tilde | hat | tilde_kernel | q | u | unified_p | unified_k");

  auto* verify = app.add_subcommand("verify", "run identity suites on seeded random and closed-form inputs");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"theorem33", "gccs", "kernel_invariance", "quasi_orth",
                                                                "lu", "laguerre", "moments", "all"}));
  verify->add_option("--n", o.n);
  verify->add_option("--seed", o.seed);
  verify->add_option("--samples", o.samples);
  verify->add_option("--inject-corruption", o.corrupt_index, "test hook: perturb gamma_INDEX on one side");
  verify->add_option("--corruption-delta", o.corrupt_delta);

  auto* zeros_cmd = app.add_subcommand("zeros", "zeros of P_n by Sturm bisection");
  add_source(zeros_cmd, o);
  zeros_cmd->add_option("--tol", o.tol);
  zeros_cmd->add_option("--output", o.output)->check(CLI::IsMember({"csv", "json"}));

  auto* lu = app.add_subcommand("lu", "bidiagonal factorisation of the truncated Jacobi matrix");
  add_source(lu, o);

  auto* moments_cmd = app.add_subcommand("moments", "normalised moments mu_0..mu_k");
  add_source(moments_cmd, o);
  moments_cmd->add_option("--k", o.k);
  moments_cmd->add_flag("--float", o.use_float);
  moments_cmd->add_option("--output", o.output)->check(CLI::IsMember({"csv", "json"}));

  auto* conv = app.add_subcommand("convergent", "n-th J-fraction convergent and its expansion");
  add_source(conv, o);
  conv->add_flag("--float", o.use_float);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (family->parsed()) return cmd_family(o);
    if (perturb->parsed()) return cmd_perturb(o);
    if (verify->parsed()) return cmd_verify(o);
    if (zeros_cmd->parsed()) return cmd_zeros(o);
    if (lu->parsed()) return cmd_lu(o);
    if (moments_cmd->parsed()) return cmd_moments(o);
    if (conv->parsed()) return cmd_convergent(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kNumerical : kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}
