#pragma once
#include <json.hpp>
#include <string>

#include "scissors/exact/algebraic.hpp"

namespace scissors::exact {

// "p/q", "p", or "-p/q"; throws ParseError.
Rational parse_rational(const std::string& s);
std::string rational_literal(const Rational& q);  // "p/q" with q shown

// "rat:p/q" | {"minpoly": [...], "lo": "p/q", "hi": "p/q"}
Real parse_number(const nlohmann::json& j);
nlohmann::json number_json(const Real& x);

}  // namespace scissors::exact
