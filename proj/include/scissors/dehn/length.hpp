#pragma once
#include <json.hpp>
#include <string>

#include "scissors/exact/radical.hpp"

namespace scissors::dehn {

using exact::Rational;
using exact::Real;

// Element of the Q-vector space of lengths. Square roots of rationals are
// kept as a formal multiquadratic sum (exact, linear-size addition); anything
// else folds into a single algebraic remainder.
class Length {
 public:
  Length() = default;
  Length(const Real& x);  // NOLINT: implicit on purpose
  Length(long v) : Length(Real(v)) {}

  bool is_zero() const;
  Real to_real() const;
  std::string to_string() const;
  double to_double() const;

  Length operator-() const;
  Length scaled(const Rational& q) const;
  friend Length operator+(const Length& a, const Length& b);
  friend Length operator-(const Length& a, const Length& b) { return a + (-b); }
  Length& operator+=(const Length& o) { return *this = *this + o; }
  Length& operator-=(const Length& o) { return *this = *this - o; }
  friend bool operator==(const Length& a, const Length& b) { return (a - b).is_zero(); }

  const exact::RadicalQ& radical_part() const { return rad_; }
  const Real& other_part() const { return other_; }

 private:
  exact::RadicalQ rad_;
  Real other_;
};

// number literal when cheap, {"sqrt_sum": [[d, "p/q"], ...]} otherwise
nlohmann::json length_json(const Length& l);
Length length_from_json(const nlohmann::json& j);

}  // namespace scissors::dehn
