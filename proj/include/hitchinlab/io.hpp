// Text and JSON front end: form literals like "e135 - e146 - e236 - e245",
// scalars "3", "1/2", "1+2*sqrt2", Salamon-style Lie algebra strings
// "0,0,0,0,e12,e34", and the JSON array encoding of forms.
#pragma once

#include <string>

#include "json.hpp"

#include "hitchinlab/exterior.hpp"

namespace hlab {

// "a+b*sqrt D" | "p/q" | decimal. Default extension d applies when no sqrt
// token appears.
Quad parse_scalar(const std::string& text, long default_d = 2);

// Parse a form literal. Letters: e1..e9 are indices 1..9; f1..f3 are indices
// 4..6 (six-dimensional pairs of Heisenberg summands). If n == 0 the ambient
// dimension is inferred from the largest index used (at least 6 when any f
// appears).
KForm<Quad> parse_form(const std::string& text, int n = 0, long default_d = 2);

KForm<Rational> form_to_rational(const KForm<Quad>& f);

std::string form_to_string(const KForm<Quad>& f, bool ef_letters = true);
std::string form_to_string(const KForm<Rational>& f, bool ef_letters = true);
std::string form_to_string(const KForm<double>& f, bool ef_letters = true);

nlohmann::json form_to_json(const KForm<Quad>& f);
nlohmann::json form_to_json(const KForm<Rational>& f);
nlohmann::json form_to_json(const KForm<double>& f);
KForm<Quad> form_from_json(const nlohmann::json& j, int n = 0, long default_d = 2);

}  // namespace hlab
