#include "opchain/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace opchain::io {

json to_json(const Rational& v) { return v.str(); }

json to_json(const std::vector<Rational>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

json to_json(const Polynomial<Rational>& p) { return {{"coeffs", to_json(p.coeffs())}}; }

json to_json(const Polynomial<double>& p) { return {{"coeffs", p.coeffs()}}; }

json to_json(const ClosedForm& form) {
  json params = json::object();
  for (const auto& [k, v] : form.params) params[k] = v;
  return {{"name", form.name}, {"params", params}};
}

json system_to_json(const ThreeTermSystem<Rational>& sys, std::size_t n) {
  json out;
  out["b"] = to_json(sys.b.take(n));
  out["a2"] = to_json(n == 0 ? std::vector<Rational>{} : sys.a2.take(n - 1));
  out["closed_form"] = sys.closed_form ? to_json(*sys.closed_form) : json(nullptr);
  return out;
}

json gamma_to_json(const GammaSeq& gamma, std::size_t last) {
  json out;
  out["gamma"] = to_json(gamma.take(last));
  out["closed_form"] = gamma.closed_form() ? to_json(*gamma.closed_form()) : json(nullptr);
  return out;
}

json report_to_json(const IdentityReport& report) {
  json out;
  out["name"] = report.name;
  out["branch"] = report.branch;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto d = report.checks[i].degree;
    if (i == 0 || d < lo) lo = d;
    if (i == 0 || d > hi) hi = d;
  }
  out["n_range"] = {lo, hi};
  out["checks"] = report.checks.size();
  out["status"] = report.ok() ? "pass" : "fail";
  if (const auto bad = report.first_failure()) {
    out["witness"] = {{"identity", bad->identity}, {"degree", bad->degree}, {"difference", to_json(bad->difference)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json lu_to_json(const BidiagonalFactors& f) {
  return {{"L_sub", to_json(f.l_sub)}, {"U_diag", to_json(f.u_diag)}, {"gamma1", f.gamma1.str()}};
}

std::string zeros_to_csv(const std::vector<Zero>& zs) {
  std::ostringstream os;
  os << "index,value,bracket_width\n";
  char buf[64];
  for (std::size_t i = 0; i < zs.size(); ++i) {
    os << (i + 1) << ',';
    std::snprintf(buf, sizeof buf, "%.17g", zs[i].value);
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.3g", zs[i].bracket_width);
    os << buf << '\n';
  }
  return os.str();
}

Rational parse_rational(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(Errc::ParseError, "expected an integer or a \"p/q\" string, got " + v.dump());
}

std::vector<Rational> parse_rationals(const json& v) {
  if (!v.is_array()) throw Error(Errc::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(parse_rational(e));
  return out;
}

Input parse_input_json(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "input must be a JSON object");
  if (doc.contains("gamma")) {
    auto gamma = GammaSeq::finite(parse_rationals(doc["gamma"]));
    gamma.validate();
    return gamma;
  }
  if (doc.contains("b") && doc.contains("a2")) {
    auto b = parse_rationals(doc["b"]);
    auto a2 = parse_rationals(doc["a2"]);
    return ThreeTermSystem<Rational>{Stream<Rational>::finite(std::move(b), 1),
                                     Stream<Rational>::finite(std::move(a2), 1), std::nullopt};
  }
  throw Error(Errc::ParseError, "input needs either \"gamma\" or both \"b\" and \"a2\"");
}

Input parse_input(const std::string& text_or_path) {
  json doc = json::parse(text_or_path, nullptr, false);
  if (doc.is_discarded()) {
    std::ifstream in(text_or_path);
    if (!in) throw Error(Errc::ParseError, "input is neither JSON nor a readable file: " + text_or_path);
    doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(Errc::ParseError, "malformed JSON in " + text_or_path);
  }
  return parse_input_json(doc);
}

}  // namespace opchain::io
