#pragma once
#include <map>
#include <optional>

#include "scissors/exact/algebraic.hpp"

namespace scissors::exact {

// Element of Q(sqrt d, d squarefree) written as sum q_d * sqrt(d).
class RadicalQ {
 public:
  RadicalQ() = default;
  explicit RadicalQ(const Rational& q) {
    if (sgn(q) != 0) t_[Integer(1)] = q;
  }
  // Degree <= 2 reals whose discriminant factors cleanly; nullopt otherwise.
  static std::optional<RadicalQ> from(const Real& x);

  bool is_zero() const { return t_.empty(); }
  bool operator==(const RadicalQ& o) const { return t_ == o.t_; }
  RadicalQ operator-() const;
  friend RadicalQ operator+(const RadicalQ& a, const RadicalQ& b);
  friend RadicalQ operator-(const RadicalQ& a, const RadicalQ& b) { return a + (-b); }
  friend RadicalQ operator*(const RadicalQ& a, const RadicalQ& b);

  const std::map<Integer, Rational>& terms() const { return t_; }

 private:
  std::map<Integer, Rational> t_;
};

// (k, d) with n = k^2 d and d squarefree; nullopt when a large cofactor is
// not certified squarefree.
std::optional<std::pair<Integer, Integer>> square_split(const Integer& n);

}  // namespace scissors::exact
