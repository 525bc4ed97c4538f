#pragma once
#include <optional>

#include "scissors/exact/algebraic.hpp"

namespace scissors::exact {

// Angle theta in [0, pi] stored as (cos, sin) with sin >= 0.
struct AnglePair {
  Real cos;
  Real sin;

  static AnglePair from_cos(const Real& c);
  // validates cos^2 + sin^2 = 1 and sin >= 0
  static AnglePair make(const Real& c, const Real& s);

  AnglePair supplement() const { return AnglePair{-cos, sin}; }  // pi - theta
  double radians() const;
};

// sin >= 0 makes cos a complete key
inline bool operator==(const AnglePair& a, const AnglePair& b) { return a.cos == b.cos; }
// increasing theta
inline bool operator<(const AnglePair& a, const AnglePair& b) { return b.cos < a.cos; }

// Some(q) with theta = q*pi, q in [0,1], iff theta/pi is rational.
std::optional<Rational> is_rational_angle(const AnglePair& a);

// minimal polynomial of 2cos(2*pi/n) (n >= 1)
ZPoly cos_minpoly(int n);
ZPoly cyclotomic(int n);
int euler_phi(int n);

}  // namespace scissors::exact
