#pragma once
#include <optional>
#include <string>
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::hochschild {

using exact::Rational;

// Element of one level of a tower, in canonical form.  Level 0 uses q;
// a transcendental level is num/den (den monic, gcd 1), an algebraic level
// is num reduced modulo the minimal polynomial (den empty).  Coefficients
// live one level down.
struct TowerElem {
  Rational q;
  std::vector<TowerElem> num, den;
};
bool operator==(const TowerElem& a, const TowerElem& b);
inline bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

class FieldTower;

// sum_j c_j dt_j over the transcendental generators t_j
struct KahlerElement {
  std::vector<TowerElem> coeff;
};

class FieldTower {
 public:
  struct Level {
    std::string symbol;
    bool algebraic = false;
    std::vector<TowerElem> minpoly;  // monic, coefficients one level down
  };

  // "t; s: s^2 = 1 - t^2"
  static FieldTower parse(const std::string& spec);
  FieldTower() = default;
  void adjoin_transcendental(const std::string& symbol);
  // lhs - rhs as a polynomial in the new symbol; must be irreducible
  void adjoin_algebraic(const std::string& symbol, const std::string& lhs, const std::string& rhs);

  int height() const { return static_cast<int>(levels_.size()); }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<std::string> transcendentals() const;
  std::string spec() const { return spec_; }

  // top-level arithmetic
  TowerElem zero() const { return zero_at(height()); }
  TowerElem one() const { return constant(height(), 1); }
  TowerElem rational(const Rational& q) const { return constant(height(), q); }
  TowerElem gen(const std::string& symbol) const;
  TowerElem add(const TowerElem& a, const TowerElem& b) const { return add_at(height(), a, b); }
  TowerElem sub(const TowerElem& a, const TowerElem& b) const { return add_at(height(), a, neg_at(height(), b)); }
  TowerElem neg(const TowerElem& a) const { return neg_at(height(), a); }
  TowerElem mul(const TowerElem& a, const TowerElem& b) const { return mul_at(height(), a, b); }
  TowerElem inv(const TowerElem& a) const { return inv_at(height(), a); }
  TowerElem div(const TowerElem& a, const TowerElem& b) const { return mul(a, inv(b)); }
  TowerElem pow(const TowerElem& a, long e) const;
  bool is_zero(const TowerElem& a) const { return is_zero_at(height(), a); }
  // the rational value when a lies in Q
  std::optional<Rational> as_rational(const TowerElem& a) const;
  // a root r with r^2 = a when one exists in the tower (quadratic layers only)
  std::optional<TowerElem> sqrt(const TowerElem& a) const;
  TowerElem parse_element(const std::string& expr) const;
  std::string to_string(const TowerElem& a) const;

  // d over Q: coordinates on dt_j for the transcendental generators
  KahlerElement d(const TowerElem& a) const;
  KahlerElement kahler_zero() const;
  KahlerElement kahler_add(const KahlerElement& a, const KahlerElement& b) const;
  KahlerElement kahler_scale(const TowerElem& c, const KahlerElement& a) const;
  bool kahler_is_zero(const KahlerElement& a) const;
  std::string kahler_to_string(const KahlerElement& a) const;
  // like to_string, but writes r/g when the value is r over an algebraic generator g
  std::string display(const TowerElem& a) const;

 private:
  using P = std::vector<TowerElem>;
  std::vector<Level> levels_;
  std::vector<int> trans_levels_;  // level index (1-based) of each transcendental
  std::string spec_;

  TowerElem zero_at(int k) const;
  TowerElem constant(int k, const Rational& q) const;
  TowerElem lift(int k, const TowerElem& x) const;  // level k-1 -> k
  TowerElem gen_at(int k) const;                    // generator of level k, at level k
  TowerElem lift_to_top(int k, const TowerElem& x) const;
  bool is_zero_at(int k, const TowerElem& a) const;
  TowerElem add_at(int k, const TowerElem& a, const TowerElem& b) const;
  TowerElem neg_at(int k, const TowerElem& a) const;
  TowerElem mul_at(int k, const TowerElem& a, const TowerElem& b) const;
  TowerElem inv_at(int k, const TowerElem& a) const;
  std::optional<TowerElem> sqrt_at(int k, const TowerElem& a) const;
  std::string to_string_at(int k, const TowerElem& a) const;
  TowerElem deriv_at(int k, const TowerElem& a, int j) const;

  // polynomials with coefficients at level c
  void ptrim(int c, P& p) const;
  P padd(int c, const P& a, const P& b) const;
  P pneg(int c, const P& a) const;
  P pmul(int c, const P& a, const P& b) const;
  P pscale(int c, const P& a, const TowerElem& s) const;
  std::pair<P, P> pdivmod(int c, const P& a, const P& b) const;
  P pgcd(int c, P a, P b) const;
  P pderiv(int c, const P& a) const;
  P pcoeff_deriv(int c, const P& a, int j) const;
  std::optional<P> psqrt(int c, const P& a) const;
  TowerElem from_poly(int k, const P& p) const;  // p(gen_k) at level k
  TowerElem make_frac(int k, P n, P d) const;
  std::string pstring(int c, const P& p, const std::string& var) const;
  void check_irreducible(int k, const P& m) const;
};

struct PhiTerm {
  TowerElem length, cos;
  std::optional<TowerElem> sin;
};

}  // namespace scissors::hochschild
