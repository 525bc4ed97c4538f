#include "scissors/exact/poly.hpp"

#include <sstream>

#include "scissors/exact/error.hpp"

namespace scissors::exact {

QPoly to_q(const ZPoly& p) {
  std::vector<Rational> v(p.c.begin(), p.c.end());
  return QPoly(std::move(v));
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& x : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// positive integral multiple of p (signs preserved), primitive
ZPoly positive_integral(const QPoly& p) {
  Integer l = 1;
  for (const auto& x : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.c.size());
  for (const auto& x : p.c) v.push_back(x.get_num() * (l / x.get_den()));
  ZPoly z(std::move(v));
  Integer g = content(z);
  if (g > 1)
    for (auto& x : z.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return z;
}

}  // namespace

ZPoly primitive_of(const QPoly& p) {
  ZPoly z = positive_integral(p);
  if (!z.is_zero() && sgn(z.lead()) < 0) z = -z;
  return z;
}

ZPoly primitive_of(const ZPoly& p) {
  ZPoly z = p;
  Integer g = content(z);
  if (g > 1)
    for (auto& x : z.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (!z.is_zero() && sgn(z.lead()) < 0) z = -z;
  return z;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> r = a.c;
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.lead());
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) { return primitive_of(gcd(to_q(a), to_q(b))); }

ZPoly squarefree_part(const ZPoly& p) {
  if (p.degree() <= 0) return primitive_of(p);
  ZPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_of(p);
  auto q = exact_div(primitive_of(p), g);
  ensure(q.has_value(), "squarefree_part: gcd does not divide");
  return primitive_of(*q);
}

std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return ZPoly();
  int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<Integer> r = a.c;
  std::vector<Integer> q(a.degree() - db + 1);
  const Integer& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
  }
  for (int i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  return ZPoly(std::move(q));
}

Rational resultant(QPoly f, QPoly g) {
  if (f.is_zero() || g.is_zero()) return 0;
  Rational acc = 1;
  for (;;) {
    int m = f.degree(), n = g.degree();
    if (n == 0) {
      Rational p = 1;
      for (int i = 0; i < m; ++i) p *= g.c[0];
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2) acc = -acc;
      std::swap(f, g);
      continue;
    }
    QPoly r = divmod(f, g).second;
    if (r.is_zero()) return 0;
    int k = r.degree();
    if ((m * n) % 2) acc = -acc;
    Rational lg = 1;
    for (int i = 0; i < m - k; ++i) lg *= g.lead();
    acc *= lg;
    f = std::move(g);
    g = std::move(r);
  }
}

int sign_at(const ZPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // sum c_i num^i den^(d-i), den > 0
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer dpow = 1;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * num + p.c[i] * dpow;
    dpow *= den;
  }
  // acc = sum c_i num^i den^(d-i) computed by Horner with running den power
  return sgn(acc);
}

Rational eval_at(const ZPoly& p, const Rational& x) { return p.eval(x); }

ZPoly reflect(const ZPoly& p) {
  ZPoly r = p;
  for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
  return r;
}

ZPoly reversed(const ZPoly& p) {
  std::vector<Integer> v(p.c.rbegin(), p.c.rend());
  return ZPoly(std::move(v));
}

ZPoly substitute_square(const ZPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Integer> v(2 * p.c.size() - 1);
  for (size_t i = 0; i < p.c.size(); ++i) v[2 * i] = p.c[i];
  return ZPoly(std::move(v));
}

ZPoly compose_linear(const ZPoly& p, const Rational& a, const Rational& b) {
  QPoly lin(std::vector<Rational>{b, a});
  QPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * lin + QPoly::constant(Rational(p.c[i]));
  return primitive_of(acc);
}

Rational root_bound(const ZPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.c[i]) / Rational(p.lead()));
    if (r > m) m = r;
  }
  return m + 1;
}

SturmChain::SturmChain(const ZPoly& p) {
  QPoly a = to_q(p);
  QPoly b = a.derivative();
  seq_.push_back(positive_integral(a));
  while (!b.is_zero()) {
    seq_.push_back(positive_integral(b));
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = -r;
  }
}

int SturmChain::variations(const Rational& x) const {
  int last = 0, v = 0;
  for (const auto& s : seq_) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int SturmChain::variations_at_infinity(int side) const {
  int last = 0, v = 0;
  for (const auto& s : seq_) {
    int sg = sgn(s.lead());
    if (side < 0 && s.degree() % 2) sg = -sg;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (lo > hi) return 0;
  int at_lo = sign_at(seq_[0], lo) == 0 ? 1 : 0;
  if (lo == hi) return at_lo;
  return variations(lo) - variations(hi) + at_lo;
}

int SturmChain::count_all() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

std::string to_string(const ZPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& a = p.c[i];
    if (sgn(a) == 0) continue;
    Integer m = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (i == 0 || m != 1) os << m.get_str();
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly interpolate(const std::vector<Rational>& values) {
  size_t n = values.size();
  std::vector<Rational> dd = values;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  // Horner on the Newton form with nodes 0..n-1
  QPoly acc;
  for (size_t i = n; i-- > 0;) {
    acc = acc * QPoly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    acc += QPoly::constant(dd[i]);
  }
  return acc;
}

}  // namespace scissors::exact
