#include "scissors/exact/radical.hpp"

namespace scissors::exact {

std::optional<std::pair<Integer, Integer>> square_split(const Integer& n0) {
  Integer n = abs(n0), k = 1, d = 1;
  if (n == 0) return std::make_pair(Integer(0), Integer(1));
  for (unsigned long p = 2; p < 65536; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    if (p * p > n && n < Integer(65536) * 65536) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) d *= p;
  }
  if (n > 1) {
    Integer r = sqrt(n);
    if (r * r == n) {
      k *= r;
    } else {
      // any cofactor below 2^48 without factors < 2^16 is p or p*q, p != q
      Integer cap = 1;
      mpz_mul_2exp(cap.get_mpz_t(), cap.get_mpz_t(), 48);
      if (n >= cap && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
      d *= n;
    }
  }
  return std::make_pair(k, d);
}

std::optional<RadicalQ> RadicalQ::from(const Real& x) {
  if (x.is_rational()) return RadicalQ(x.rational());
  if (x.degree() != 2) return std::nullopt;
  ZPoly m = x.minpoly();
  const Integer &c = m.c[0], &b = m.c[1], &a = m.c[2];
  Integer D = b * b - 4 * a * c;
  auto split = square_split(D);
  if (!split) return std::nullopt;
  auto [k, d] = *split;
  Rational center(-b, 2 * a);
  center.canonicalize();
  Rational off(k, 2 * a);
  off.canonicalize();
  // the two roots straddle the center; the isolating interval picks one
  int side;
  for (;;) {
    auto [lo, hi] = x.interval();
    if (lo > center) { side = 1; break; }
    if (hi < center) { side = -1; break; }
    Rational w = (hi - lo) / 2;
    x.approx(w);
  }
  if (sgn(off) < 0) off = -off;
  RadicalQ r;
  if (sgn(center) != 0) r.t_[Integer(1)] = center;
  r.t_[d] = side > 0 ? off : Rational(-off);
  return r;
}

RadicalQ RadicalQ::operator-() const {
  RadicalQ r = *this;
  for (auto& [d, q] : r.t_) q = -q;
  return r;
}

RadicalQ operator+(const RadicalQ& a, const RadicalQ& b) {
  RadicalQ r = a;
  for (const auto& [d, q] : b.t_) {
    Rational s = r.t_[d] + q;
    if (sgn(s) == 0)
      r.t_.erase(d);
    else
      r.t_[d] = s;
  }
  return r;
}

RadicalQ operator*(const RadicalQ& a, const RadicalQ& b) {
  RadicalQ r;
  for (const auto& [d1, q1] : a.t_)
    for (const auto& [d2, q2] : b.t_) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      Integer d = (d1 / g) * (d2 / g);
      Rational s = r.t_[d] + q1 * q2 * g;
      if (sgn(s) == 0)
        r.t_.erase(d);
      else
        r.t_[d] = s;
    }
  return r;
}

}  // namespace scissors::exact
