#include "scissors/exact/angle.hpp"

#include <cmath>
#include <numeric>

#include "scissors/exact/error.hpp"

namespace scissors::exact {

AnglePair AnglePair::from_cos(const Real& c) {
  if (c < Real(-1) || c > Real(1)) fail(ErrorKind::NegativeSqrt, "cosine outside [-1,1]: " + c.to_string());
  return AnglePair{c, (Real(1) - c * c).sqrt()};
}

AnglePair AnglePair::make(const Real& c, const Real& s) {
  if (s.sign() < 0) fail(ErrorKind::ParseError, "angle sine must be >= 0");
  if (c * c + s * s != Real(1)) fail(ErrorKind::ParseError, "cos^2 + sin^2 != 1");
  return AnglePair{c, s};
}

double AnglePair::radians() const { return std::atan2(sin.to_double(), cos.to_double()); }

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

int mobius(int n) {
  int k = 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  if (n > 1) ++k;
  return k % 2 ? -1 : 1;
}

ZPoly x_pow_minus_one(int d) {
  std::vector<Integer> v(d + 1);
  v[0] = -1;
  v[d] = 1;
  return ZPoly(std::move(v));
}

}  // namespace

ZPoly cyclotomic(int n) {
  ZPoly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) num = num * x_pow_minus_one(d);
    if (mu == -1) den = den * x_pow_minus_one(d);
  }
  auto q = exact_div(num, den);
  ensure(q.has_value(), "cyclotomic: inexact division");
  return *q;
}

ZPoly cos_minpoly(int n) {
  if (n == 1) return ZPoly{-2, 1};
  if (n == 2) return ZPoly{2, 1};
  ZPoly phi = cyclotomic(n);
  int m = phi.degree() / 2;
  // Phi(z)/z^m = a_m + sum a_{m+k} (z^k + z^-k),  z^k + z^-k = D_k(z + 1/z)
  std::vector<ZPoly> D{ZPoly{2}, ZPoly{0, 1}};
  for (int k = 2; k <= m; ++k) D.push_back(ZPoly{0, 1} * D[k - 1] - D[k - 2]);
  ZPoly psi = ZPoly::constant(phi.c[m]);
  for (int k = 1; k <= m; ++k) psi += D[k].scaled(phi.c[m + k]);
  return psi;
}

std::optional<Rational> is_rational_angle(const AnglePair& a) {
  Real u = a.cos * Real(2);
  if (u.is_rational()) {
    const Rational& q = u.rational();
    if (q == 2) return Rational(0);
    if (q == 1) return Rational(1, 3);
    if (q == 0) return Rational(1, 2);
    if (q == -1) return Rational(2, 3);
    if (q == -2) return Rational(1);
    return std::nullopt;
  }
  ZPoly m = u.minpoly();
  if (abs(m.lead()) != 1) return std::nullopt;
  int d = m.degree();
  int limit = 8 * d * d + 16;
  for (int n = 3; n <= limit; ++n) {
    if (euler_phi(n) != 2 * d) continue;
    if (primitive_of(cos_minpoly(n)) != m) continue;
    // roots 2cos(2 pi k/n), k coprime, 1 <= k < n/2, decrease in k
    auto [lo, hi] = u.interval();
    SturmChain st(m);
    int above = st.count(hi, root_bound(m));
    int seen = -1;
    for (int k = 1; 2 * k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      if (++seen == above) {
        Rational q(2 * k, n);
        q.canonicalize();
        return q;
      }
    }
    fail(ErrorKind::InvariantViolation, "is_rational_angle: root rank out of range");
  }
  return std::nullopt;
}

}  // namespace scissors::exact
