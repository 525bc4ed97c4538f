#pragma once
#include <compare>
#include <memory>
#include <string>
#include <utility>

#include "scissors/exact/poly.hpp"

namespace scissors::exact {

// Exact real algebraic number: irreducible primitive minimal polynomial plus
// an isolating rational interval. Rationals take a fast path and carry no
// polynomial. Values are immutable; interval refinement is an internal cache
// guarded by a mutex.
class AlgebraicReal {
 public:
  AlgebraicReal() : q_(0) {}
  AlgebraicReal(long v) : q_(v) {}
  AlgebraicReal(int v) : q_(v) {}
  AlgebraicReal(const Rational& q) : q_(q) {}
  AlgebraicReal(const Integer& z) : q_(z) {}

  // The unique root of `poly` in [lo, hi]; reducible input is factored.
  static AlgebraicReal make(const ZPoly& poly, const Rational& lo, const Rational& hi);

  bool is_rational() const { return !irr_; }
  const Rational& rational() const;
  ZPoly minpoly() const;
  int degree() const;

  std::pair<Rational, Rational> interval() const;
  // interval of width <= w
  std::pair<Rational, Rational> approx(const Rational& w) const;
  // [k/2^b, (k+1)/2^b] with k = floor(x 2^b), smallest b in 32,64,... that
  // isolates; depends only on the value, never on refinement history
  std::pair<Rational, Rational> canonical_interval() const;

  int sign() const;
  bool is_zero() const { return !irr_ && sgn(q_) == 0; }
  double to_double() const;
  std::string to_string() const;

  AlgebraicReal operator-() const;
  AlgebraicReal inverse() const;
  AlgebraicReal sqrt() const;
  AlgebraicReal abs() const { return sign() < 0 ? -*this : *this; }
  AlgebraicReal pow(unsigned e) const;

  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  AlgebraicReal& operator+=(const AlgebraicReal& o) { return *this = *this + o; }
  AlgebraicReal& operator-=(const AlgebraicReal& o) { return *this = *this - o; }
  AlgebraicReal& operator*=(const AlgebraicReal& o) { return *this = *this * o; }
  AlgebraicReal& operator/=(const AlgebraicReal& o) { return *this = *this / o; }

  friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }

  struct Irrational;

 private:
  Rational q_;
  std::shared_ptr<const Irrational> irr_;
};

using Real = AlgebraicReal;

// Rational bounds lo <= sqrt(r) <= hi with hi - lo <= 2^-bits.
std::pair<Rational, Rational> sqrt_bounds(const Rational& r, unsigned bits);

}  // namespace scissors::exact
