// Zassenhaus: squarefree reduction mod a small prime, Cantor-Zassenhaus
// splitting, multifactor Hensel lifting, subset recombination.
#include "scissors/exact/factor.hpp"

#include <algorithm>
#include <random>

#include "scissors/exact/error.hpp"

namespace scissors::exact {
namespace {

using u64 = unsigned long long;
using UPoly = std::vector<u64>;  // mod p, constant first, trimmed

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

UPoly sub(const UPoly& a, const UPoly& b, u64 p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, u64 p, UPoly* q, UPoly* r) {
  UPoly rem = a;
  int db = deg(b);
  u64 il = inv(b.back(), p);
  UPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = deg(rem); i >= db; --i) {
    u64 f = rem[i] * il % p;
    if (!f) continue;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - f * b[j] % p) % p;
  }
  rem.resize(std::min<size_t>(rem.size(), db));
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

UPoly rem(const UPoly& a, const UPoly& b, u64 p) {
  UPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}
UPoly quo(const UPoly& a, const UPoly& b, u64 p) {
  UPoly q;
  divmod(a, b, p, &q, nullptr);
  return q;
}

UPoly make_monic(UPoly a, u64 p) {
  if (a.empty()) return a;
  u64 il = inv(a.back(), p);
  for (auto& x : a) x = x * il % p;
  return a;
}

UPoly gcd(UPoly a, UPoly b, u64 p) {
  while (!b.empty()) {
    UPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b
void ext_gcd(const UPoly& a, const UPoly& b, u64 p, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    UPoly q, r;
    divmod(r0, r1, p, &q, &r);
    UPoly s2 = sub(s0, mul(q, s1, p), p);
    UPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  ensure(deg(r0) == 0, "ext_gcd: inputs not coprime");
  u64 il = inv(r0[0], p);
  s = s0;
  t = t0;
  for (auto& x : s) x = x * il % p;
  for (auto& x : t) x = x * il % p;
}

UPoly powmod_poly(UPoly base, const Integer& e, const UPoly& f, u64 p) {
  UPoly r{1};
  base = rem(base, f, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), f, p);
  }
  return r;
}

UPoly reduce(const ZPoly& f, u64 p) {
  UPoly r(f.c.size());
  Integer P = static_cast<unsigned long>(p);
  for (size_t i = 0; i < f.c.size(); ++i) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), f.c[i].get_mpz_t(), P.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

UPoly derivative(const UPoly& a, u64 p) {
  UPoly r(a.size() > 1 ? a.size() - 1 : 0);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f, u64 p) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly x{0, 1};
  UPoly h = x;
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), f, p);
    UPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.push_back({g, i});
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

void equal_degree(const UPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    UPoly a(deg(g));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    UPoly b = sub(powmod_poly(a, e, g, p), UPoly{1}, p);
    UPoly h = gcd(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(quo(g, h, p), d, p, rng, out);
      return;
    }
  }
}

// ---- Hensel lifting over Z/p^k ----

ZPoly lift_to_z(const UPoly& a) {
  std::vector<Integer> v;
  for (u64 x : a) v.emplace_back(static_cast<unsigned long>(x));
  return ZPoly(std::move(v));
}

ZPoly mod_coeffs(ZPoly a, const Integer& m) {
  for (auto& x : a.c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  a.trim();
  return a;
}

std::pair<ZPoly, ZPoly> hensel2(const ZPoly& F, const UPoly& g, const UPoly& h, u64 p, int k) {
  UPoly s, t;
  ext_gcd(g, h, p, s, t);
  ZPoly G = lift_to_z(g), H = lift_to_z(h);
  Integer P = static_cast<unsigned long>(p);
  Integer pj = P;
  for (int j = 1; j < k; ++j) {
    Integer pj1 = pj * P;
    ZPoly e = mod_coeffs(F - G * H, pj1);
    for (auto& x : e.c) {
      ensure(mpz_divisible_p(x.get_mpz_t(), pj.get_mpz_t()), "hensel: not divisible");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pj.get_mpz_t());
    }
    UPoly ep = reduce(e, p);
    UPoly A = rem(mul(t, ep, p), g, p);
    UPoly B = rem(mul(s, ep, p), h, p);
    G = mod_coeffs(G + lift_to_z(A).scaled(pj), pj1);
    H = mod_coeffs(H + lift_to_z(B).scaled(pj), pj1);
    pj = pj1;
  }
  return {G, H};
}

UPoly product(const std::vector<UPoly>& fs, size_t lo, size_t hi, u64 p) {
  UPoly r{1};
  for (size_t i = lo; i < hi; ++i) r = mul(r, fs[i], p);
  return r;
}

void hensel_tree(const ZPoly& F, const std::vector<UPoly>& fs, size_t lo, size_t hi, u64 p, int k,
                 std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  size_t mid = (lo + hi) / 2;
  auto [G, H] = hensel2(F, product(fs, lo, mid, p), product(fs, mid, hi, p), p, k);
  hensel_tree(G, fs, lo, mid, p, k, out);
  hensel_tree(H, fs, mid, hi, p, k, out);
}

Integer symmetric(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

std::vector<u64> small_primes() {
  std::vector<u64> ps;
  const int N = 20000;
  std::vector<bool> comp(N, false);
  for (int i = 2; i < N; ++i) {
    if (comp[i]) continue;
    if (i > 2) ps.push_back(i);
    for (int j = 2 * i; j < N; j += i) comp[j] = true;
  }
  return ps;
}

// f primitive, squarefree, deg >= 2, f(0) != 0
std::vector<ZPoly> zassenhaus(const ZPoly& f0) {
  static const std::vector<u64> primes = small_primes();
  int n = f0.degree();
  u64 best_p = 0;
  std::vector<std::pair<UPoly, int>> best_ddf;
  size_t best_count = 0;
  int tried = 0;
  for (u64 p : primes) {
    Integer P = static_cast<unsigned long>(p);
    if (mpz_divisible_p(f0.lead().get_mpz_t(), P.get_mpz_t())) continue;
    UPoly fb = reduce(f0, p);
    if (deg(gcd(fb, derivative(fb, p), p)) != 0) continue;
    auto ddf = distinct_degree(make_monic(fb, p), p);
    size_t cnt = 0;
    for (auto& [g, d] : ddf) cnt += deg(g) / d;
    if (best_p == 0 || cnt < best_count) {
      best_p = p;
      best_ddf = ddf;
      best_count = cnt;
    }
    if (cnt == 1 || ++tried >= 5) break;
  }
  ensure(best_p != 0, "zassenhaus: no good prime");
  if (best_count == 1) return {f0};
  u64 p = best_p;

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<UPoly> modf;
  for (auto& [g, d] : best_ddf) equal_degree(g, d, p, rng, modf);

  // bound: |lc| * 2^n * ||f||_2, modulus must exceed twice that
  Integer norm2 = 0;
  for (const auto& c : f0.c) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = abs(f0.lead()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  Integer P = static_cast<unsigned long>(p);
  Integer M = P;
  int k = 1;
  while (M <= bound) {
    M *= P;
    ++k;
  }

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f0.lead().get_mpz_t(), M.get_mpz_t());
  ZPoly F = mod_coeffs(f0.scaled(lc_inv), M);
  std::vector<ZPoly> lifted;
  hensel_tree(F, modf, 0, modf.size(), p, k, lifted);

  std::vector<ZPoly> result;
  ZPoly f = f0;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      Integer lc = f.lead();
      // constant-term filter
      Integer c0 = lc;
      for (size_t i : idx) c0 = symmetric(c0 * lifted[i].coeff(0), M);
      if (sgn(c0) != 0 && mpz_divisible_p(Integer(lc * f.c[0]).get_mpz_t(), c0.get_mpz_t())) {
        ZPoly g = ZPoly::constant(lc);
        for (size_t i : idx) g = mod_coeffs(g * lifted[i], M);
        for (auto& x : g.c) x = symmetric(x, M);
        g.trim();
        g = primitive_of(g);
        auto q = exact_div(f, g);
        if (q) {
          result.push_back(g);
          f = primitive_of(*q);
          std::vector<ZPoly> rest;
          for (size_t i = 0; i < lifted.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
          lifted = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == lifted.size() - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) result.push_back(f);
  return result;
}

bool is_square(const Integer& d, Integer& root) {
  if (sgn(d) < 0) return false;
  root = sqrt(d);
  return root * root == d;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

}  // namespace

std::vector<ZPoly> irreducible_factors(const ZPoly& p) {
  if (p.degree() <= 0) return {};
  ZPoly q = squarefree_part(p);
  std::vector<ZPoly> out;
  if (sgn(q.c[0]) == 0) {
    out.push_back(ZPoly{0, 1});
    std::vector<Integer> v(q.c.begin() + 1, q.c.end());
    q = ZPoly(std::move(v));
  }
  if (q.degree() == 1) {
    out.push_back(primitive_of(q));
  } else if (q.degree() == 2) {
    Integer D = q.c[1] * q.c[1] - 4 * q.c[2] * q.c[0], r;
    if (is_square(D, r)) {
      out.push_back(primitive_of(ZPoly(std::vector<Integer>{q.c[1] - r, 2 * q.c[2]})));
      out.push_back(primitive_of(ZPoly(std::vector<Integer>{q.c[1] + r, 2 * q.c[2]})));
    } else {
      out.push_back(q);
    }
  } else if (q.degree() > 2) {
    for (auto& g : zassenhaus(q)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible(const ZPoly& p) {
  if (p.degree() <= 0) return false;
  if (squarefree_part(p).degree() != p.degree()) return false;
  auto fs = irreducible_factors(p);
  return fs.size() == 1 && fs[0].degree() == p.degree();
}

}  // namespace scissors::exact
