#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scissors::exact {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial, constant term first, no trailing zeros.
template <class T>
class Poly {
 public:
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }
  Poly(std::initializer_list<long> v) {
    for (long x : v) c.emplace_back(x);
    trim();
  }

  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  static Poly monomial(const T& a, int k) {
    std::vector<T> v(k + 1);
    v[k] = a;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const T& lead() const { return c.back(); }
  T coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : T(0); }

  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  Poly scaled(const T& s) const {
    Poly r = *this;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
  }
  bool operator==(const Poly& o) const { return c == o.c; }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<T> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * static_cast<long>(i);
    return Poly(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + X(c[i]);
    return acc;
  }
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

QPoly to_q(const ZPoly& p);
// Clears denominators and content; leading coefficient made positive.
ZPoly primitive_of(const QPoly& p);
ZPoly primitive_of(const ZPoly& p);
Integer content(const ZPoly& p);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
QPoly gcd(QPoly a, QPoly b);  // monic
ZPoly gcd(const ZPoly& a, const ZPoly& b);  // primitive
ZPoly squarefree_part(const ZPoly& p);
std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b);
Rational resultant(QPoly f, QPoly g);

int sign_at(const ZPoly& p, const Rational& x);
Rational eval_at(const ZPoly& p, const Rational& x);

ZPoly reflect(const ZPoly& p);     // p(-x)
ZPoly reversed(const ZPoly& p);    // x^d p(1/x)
ZPoly substitute_square(const ZPoly& p);  // p(x^2)
// p(a*x + b), made primitive
ZPoly compose_linear(const ZPoly& p, const Rational& a, const Rational& b);

// Upper bound on |root| (Cauchy).
Rational root_bound(const ZPoly& p);

// Sturm sequence of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const ZPoly& p);
  int variations(const Rational& x) const;
  int variations_at_infinity(int side) const;
  // number of distinct real roots in [lo, hi]
  int count(const Rational& lo, const Rational& hi) const;
  int count_all() const;

 private:
  std::vector<ZPoly> seq_;
};

std::string to_string(const ZPoly& p, const std::string& var = "x");

// Newton interpolation through (i, values[i]), i = 0..n-1.
QPoly interpolate(const std::vector<Rational>& values);

}  // namespace scissors::exact
