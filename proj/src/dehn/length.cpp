#include "scissors/dehn/length.hpp"

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"

using scissors::exact::Integer;

namespace scissors::dehn {

Length::Length(const Real& x) {
  if (auto r = exact::RadicalQ::from(x)) rad_ = *r;
  else other_ = x;
}

bool Length::is_zero() const {
  if (other_.is_zero()) return rad_.is_zero();
  return to_real().is_zero();
}

Real Length::to_real() const {
  Real s = other_;
  for (const auto& [d, q] : rad_.terms()) s += (d == 1) ? Real(q) : Real(q) * Real(d).sqrt();
  return s;
}

std::string Length::to_string() const {
  if (!other_.is_zero() || rad_.terms().size() <= 1) return to_real().to_string();
  std::string s;
  for (const auto& [d, q] : rad_.terms()) {
    if (!s.empty()) s += " + ";
    s += q.get_str() + (d == 1 ? "" : "*sqrt(" + d.get_str() + ")");
  }
  return s;
}

double Length::to_double() const {
  double s = other_.to_double();
  for (const auto& [d, q] : rad_.terms()) s += q.get_d() * (d == 1 ? 1.0 : Real(d).sqrt().to_double());
  return s;
}

Length Length::operator-() const {
  Length r;
  r.rad_ = -rad_;
  r.other_ = -other_;
  return r;
}

Length Length::scaled(const Rational& q) const {
  Length r;
  r.rad_ = rad_ * exact::RadicalQ(q);
  r.other_ = other_ * Real(q);
  return r;
}

Length operator+(const Length& a, const Length& b) {
  Length r;
  r.rad_ = a.rad_ + b.rad_;
  if (a.other_.is_zero()) r.other_ = b.other_;
  else if (b.other_.is_zero()) r.other_ = a.other_;
  else r.other_ = a.other_ + b.other_;
  return r;
}

nlohmann::json length_json(const Length& l) {
  if (!l.other_part().is_zero() || l.radical_part().terms().size() <= 2) return exact::number_json(l.to_real());
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [d, q] : l.radical_part().terms()) a.push_back({d.get_si(), exact::rational_literal(q)});
  return {{"sqrt_sum", a}};
}

Length length_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("sqrt_sum")) {
    Length s;
    for (const auto& t : j.at("sqrt_sum")) {
      Integer d(t.at(0).get<long>());
      if (sgn(d) <= 0) fail(ErrorKind::ParseError, "sqrt_sum radicand must be positive");
      Rational q = exact::parse_rational(t.at(1).get<std::string>());
      s += Length(Real(q) * Real(d).sqrt());
    }
    return s;
  }
  return Length(exact::parse_number(j));
}

}  // namespace scissors::dehn
