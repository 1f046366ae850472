#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opchain/chainseq.hpp"
#include "opchain/families.hpp"
#include "opchain/io.hpp"
#include "opchain/jacobi.hpp"
#include "opchain/perturbations.hpp"
#include "opchain/verify.hpp"

namespace py = pybind11;
using namespace opchain;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
using Strs = std::vector<std::string>;

std::vector<Rational> parse(const Strs& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Rational::parse(x));
  return out;
}

Strs strs(const std::vector<Rational>& xs) {
  Strs out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

ThreeTermSystem<Rational> make_system(const Strs& b, const Strs& a2) {
  return {Stream<Rational>::finite(parse(b), 1), Stream<Rational>::finite(parse(a2), 1), std::nullopt};
}

GammaSeq make_gamma(const Strs& gamma) {
  auto g = GammaSeq::finite(parse(gamma));
  g.validate();
  return g;
}

std::vector<Strs> polys(const ThreeTermSystem<Rational>& sys, std::size_t n) {
  std::vector<Strs> out;
  for (const auto& p : monic_sequence(sys, n)) out.push_back(strs(p.coeffs()));
  return out;
}

ThreeTermSystem<Rational> family(const std::string& name, const std::string& param) {
  const Rational v = Rational::parse(param);
  if (name == "laguerre") return laguerre_system(v);
  if (name == "e_family") return e_family_system(v);
  if (name == "laguerre_assoc1") return laguerre_assoc1_system(v);
  if (name == "routh_romanovski") return routh_romanovski_system(v);
  throw Error(Errc::InvalidArgument, "unknown family: " + name);
}

ThreeTermSystem<Rational> perturbed(const GammaSeq& gamma, const std::string& variant, std::size_t n) {
  if (variant == "tilde") return tilde_system(gamma);
  if (variant == "hat") return hat_system(gamma).system;
  if (variant == "tilde_kernel") return tilde_kernel_system(gamma);
  if (variant == "kernel") return kernel_system(gamma);
  if (variant == "split") return split_system(gamma);
  if (variant == "q") return q_system(gamma);
  if (variant == "u") return u_system(gamma);
  if (variant == "unified_p") return unified_coefficients(gamma, UnifiedVariant::TildeP, n).system();
  if (variant == "unified_k") return unified_coefficients(gamma, UnifiedVariant::TildeK, n).system();
  throw Error(Errc::InvalidArgument, "unknown variant: " + variant);
}

}  // namespace

PYBIND11_MODULE(_opchain, m) {
  m.doc() = "Exact orthogonal-polynomial chain sequences and perturbations";
  py::register_exception<Error>(m, "OpchainError", PyExc_ValueError);

  m.def(
      "family",
      [](const std::string& name, const std::string& param, std::size_t n) {
        const auto sys = family(name, param);
        const auto a_n = n == 0 ? 0 : n - 1;
        return py::make_tuple(strs(sys.b.take(n)), strs(sys.a2.take(a_n)));
      },
      py::arg("name"), py::arg("param"), py::arg("n"));

  m.def(
      "family_gamma", [](const std::string& alpha, const std::string& gamma1, std::size_t last) {
        return strs(laguerre_gamma(Rational::parse(alpha), Rational::parse(gamma1)).take(last));
      },
      py::arg("alpha"), py::arg("gamma1"), py::arg("last"));

  m.def(
      "monic", [](const Strs& b, const Strs& a2, std::size_t n) { return polys(make_system(b, a2), n); },
      py::arg("b"), py::arg("a2"), py::arg("n"));

  m.def(
      "recover_gamma",
      [](const Strs& b, const Strs& a2, const std::string& gamma1, std::size_t last) {
        return strs(recover_gamma(make_system(b, a2), Rational::parse(gamma1), last).take(last));
      },
      py::arg("b"), py::arg("a2"), py::arg("gamma1"), py::arg("last"));

  m.def(
      "perturb",
      [](const Strs& gamma, const std::string& variant, std::size_t n) {
        return polys(perturbed(make_gamma(gamma), variant, n), n);
      },
      py::arg("gamma"), py::arg("variant"), py::arg("n"));

  m.def(
      "minimal_parameters",
      [](const Strs& d, std::size_t n) {
        return strs(minimal_parameters(ChainSequence<Rational>{Stream<Rational>::finite(parse(d), 1)}, n).g.take(n));
      },
      py::arg("d"), py::arg("n"));

  m.def(
      "zeros",
      [](const Strs& b, const Strs& a2, std::size_t n, double tol) {
        return zero_values(zeros(make_system(b, a2), n, tol));
      },
      py::arg("b"), py::arg("a2"), py::arg("n"), py::arg("tol") = 1e-12);

  m.def(
      "lu",
      [](const Strs& b, const Strs& a2, std::size_t n, const std::string& gamma1) {
        const auto f = lu_factor(truncate(make_system(b, a2), n), Rational::parse(gamma1));
        return py::make_tuple(strs(f.l_sub), strs(f.u_diag));
      },
      py::arg("b"), py::arg("a2"), py::arg("n"), py::arg("gamma1") = "0");

  m.def(
      "moments", [](const Strs& b, const Strs& a2, std::size_t k) { return strs(moment_sequence(make_system(b, a2), k)); },
      py::arg("b"), py::arg("a2"), py::arg("k"));

  m.def(
      "verify",
      [](const std::string& suite, std::size_t n, std::uint64_t seed, std::size_t samples,
         std::optional<std::size_t> corrupt) {
        VerifyOptions o;
        o.suite = suite;
        o.n = n;
        o.seed = seed;
        o.samples = samples;
        if (corrupt) o.corruption = Corruption{*corrupt, Rational(1)};
        return to_json(run_verify(o)).dump();
      },
      py::arg("suite") = "all", py::arg("n") = 10, py::arg("seed") = 1, py::arg("samples") = 25,
      py::arg("corrupt") = py::none());
}
