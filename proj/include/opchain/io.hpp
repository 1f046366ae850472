#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "opchain/gamma.hpp"
#include "opchain/jacobi.hpp"
#include "opchain/recurrence.hpp"
#include "opchain/report.hpp"

namespace opchain::io {

using json = nlohmann::ordered_json;

/// Rationals are written as strings ("5/2") so nothing is rounded.
json to_json(const Rational& v);
json to_json(const std::vector<Rational>& vs);
json to_json(const Polynomial<Rational>& p);
json to_json(const Polynomial<double>& p);
json to_json(const ClosedForm& form);

/// {"b": [b_1..b_n], "a2": [a_1^2..a_{n-1}^2], "closed_form": ...}
json system_to_json(const ThreeTermSystem<Rational>& sys, std::size_t n);
json gamma_to_json(const GammaSeq& gamma, std::size_t last);
json report_to_json(const IdentityReport& report);
json lu_to_json(const BidiagonalFactors& f);

std::string zeros_to_csv(const std::vector<Zero>& zs);

Rational parse_rational(const json& v);
std::vector<Rational> parse_rationals(const json& v);

/// A user-supplied input: either {"gamma": [...]} or {"b": [...], "a2": [...]}.
using Input = std::variant<GammaSeq, ThreeTermSystem<Rational>>;

/// Accepts inline JSON text or, failing that, a path to a JSON file.
Input parse_input(const std::string& text_or_path);
Input parse_input_json(const json& doc);

}  // namespace opchain::io
