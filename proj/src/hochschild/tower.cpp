#include "scissors/hochschild/tower.hpp"

#include <algorithm>

#include "scissors/exact/error.hpp"
#include "scissors/exact/factor.hpp"
#include "scissors/hochschild/expr.hpp"

namespace scissors::hochschild {

bool operator==(const TowerElem& a, const TowerElem& b) { return a.q == b.q && a.num == b.num && a.den == b.den; }

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

// ---- level primitives ----

TowerElem FieldTower::zero_at(int k) const {
  TowerElem z;
  if (k > 0 && !levels_[k - 1].algebraic) z.den = {constant(k - 1, 1)};
  return z;
}

TowerElem FieldTower::constant(int k, const Rational& q) const {
  if (k == 0) {
    TowerElem e;
    e.q = q;
    return e;
  }
  return lift(k, constant(k - 1, q));
}

TowerElem FieldTower::lift(int k, const TowerElem& x) const {
  if (is_zero_at(k - 1, x)) return zero_at(k);
  TowerElem e;
  e.num = {x};
  if (!levels_[k - 1].algebraic) e.den = {constant(k - 1, 1)};
  return e;
}

TowerElem FieldTower::gen_at(int k) const { return from_poly(k, {zero_at(k - 1), constant(k - 1, 1)}); }

TowerElem FieldTower::lift_to_top(int k, const TowerElem& x) const {
  TowerElem e = x;
  for (int l = k + 1; l <= height(); ++l) e = lift(l, e);
  return e;
}

bool FieldTower::is_zero_at(int k, const TowerElem& a) const { return k == 0 ? sgn(a.q) == 0 : a.num.empty(); }

TowerElem FieldTower::add_at(int k, const TowerElem& a, const TowerElem& b) const {
  if (k == 0) return constant(0, a.q + b.q);
  if (levels_[k - 1].algebraic) {
    TowerElem e;
    e.num = padd(k - 1, a.num, b.num);
    return e;
  }
  if (a.den == b.den) return make_frac(k, padd(k - 1, a.num, b.num), a.den);
  return make_frac(k, padd(k - 1, pmul(k - 1, a.num, b.den), pmul(k - 1, b.num, a.den)), pmul(k - 1, a.den, b.den));
}

TowerElem FieldTower::neg_at(int k, const TowerElem& a) const {
  if (k == 0) return constant(0, -a.q);
  TowerElem e = a;
  e.num = pneg(k - 1, a.num);
  return e;
}

TowerElem FieldTower::mul_at(int k, const TowerElem& a, const TowerElem& b) const {
  if (k == 0) return constant(0, a.q * b.q);
  if (is_zero_at(k, a) || is_zero_at(k, b)) return zero_at(k);
  if (levels_[k - 1].algebraic) return from_poly(k, pmul(k - 1, a.num, b.num));
  return make_frac(k, pmul(k - 1, a.num, b.num), pmul(k - 1, a.den, b.den));
}

TowerElem FieldTower::inv_at(int k, const TowerElem& a) const {
  if (is_zero_at(k, a)) fail(ErrorKind::DivisionByZero, "inverse of 0 in the tower");
  if (k == 0) return constant(0, 1 / a.q);
  if (!levels_[k - 1].algebraic) return make_frac(k, a.den, a.num);
  // extended Euclid against the minimal polynomial
  const P& m = levels_[k - 1].minpoly;
  P r0 = m, r1 = a.num, s0, s1 = {constant(k - 1, 1)};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(k - 1, r0, r1);
    P s2 = padd(k - 1, s0, pneg(k - 1, pmul(k - 1, q, s1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  ensure(r0.size() == 1, "minimal polynomial is not irreducible");
  return from_poly(k, pscale(k - 1, s0, inv_at(k - 1, r0[0])));
}

// ---- polynomials one level down ----

void FieldTower::ptrim(int c, P& p) const {
  while (!p.empty() && is_zero_at(c, p.back())) p.pop_back();
}

FieldTower::P FieldTower::padd(int c, const P& a, const P& b) const {
  P r(std::max(a.size(), b.size()), zero_at(c));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = add_at(c, a[i], b[i]);
    else r[i] = i < a.size() ? a[i] : b[i];
  }
  ptrim(c, r);
  return r;
}

FieldTower::P FieldTower::pneg(int c, const P& a) const {
  P r;
  for (const auto& x : a) r.push_back(neg_at(c, x));
  return r;
}

FieldTower::P FieldTower::pmul(int c, const P& a, const P& b) const {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, zero_at(c));
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero_at(c, a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = add_at(c, r[i + j], mul_at(c, a[i], b[j]));
  }
  ptrim(c, r);
  return r;
}

FieldTower::P FieldTower::pscale(int c, const P& a, const TowerElem& s) const {
  P r;
  for (const auto& x : a) r.push_back(mul_at(c, x, s));
  ptrim(c, r);
  return r;
}

std::pair<FieldTower::P, FieldTower::P> FieldTower::pdivmod(int c, const P& a, const P& b) const {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by 0");
  P r = a, q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, zero_at(c));
  TowerElem lead_inv = inv_at(c, b.back());
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    TowerElem f = mul_at(c, r.back(), lead_inv);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = add_at(c, r[shift + i], neg_at(c, mul_at(c, f, b[i])));
    ensure(is_zero_at(c, r.back()), "polynomial division did not cancel the lead");
    r.pop_back();
    ptrim(c, r);
  }
  ptrim(c, q);
  return {q, r};
}

FieldTower::P FieldTower::pgcd(int c, P a, P b) const {
  while (!b.empty()) {
    P r = pdivmod(c, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return pscale(c, a, inv_at(c, a.back()));
}

FieldTower::P FieldTower::pderiv(int c, const P& a) const {
  P r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(mul_at(c, a[i], constant(c, static_cast<long>(i))));
  ptrim(c, r);
  return r;
}

FieldTower::P FieldTower::pcoeff_deriv(int c, const P& a, int j) const {
  P r;
  for (const auto& x : a) r.push_back(deriv_at(c, x, j));
  ptrim(c, r);
  return r;
}

TowerElem FieldTower::from_poly(int k, const P& p) const {
  if (!levels_[k - 1].algebraic) return make_frac(k, p, {constant(k - 1, 1)});
  TowerElem e;
  e.num = pdivmod(k - 1, p, levels_[k - 1].minpoly).second;
  return e;
}

TowerElem FieldTower::make_frac(int k, P n, P d) const {
  ptrim(k - 1, n);
  ptrim(k - 1, d);
  if (d.empty()) fail(ErrorKind::DivisionByZero, "denominator 0 in the tower");
  if (n.empty()) return zero_at(k);
  P g = pgcd(k - 1, n, d);
  if (g.size() > 1) {
    n = pdivmod(k - 1, n, g).first;
    d = pdivmod(k - 1, d, g).first;
  }
  TowerElem c = inv_at(k - 1, d.back());
  TowerElem e;
  e.num = pscale(k - 1, n, c);
  e.den = pscale(k - 1, d, c);
  return e;
}

// ---- square roots ----

std::optional<FieldTower::P> FieldTower::psqrt(int c, const P& a) const {
  if (a.empty()) return P{};
  if ((a.size() - 1) % 2) return std::nullopt;
  auto r = sqrt_at(c, a.back());
  if (!r) return std::nullopt;
  size_t m = (a.size() - 1) / 2;
  P g(m + 1, zero_at(c));
  g[m] = *r;
  TowerElem inv2r = inv_at(c, mul_at(c, constant(c, 2), *r));
  for (size_t i = 1; i <= m; ++i) {
    TowerElem s = a[2 * m - i];
    for (size_t j = 1; j < i; ++j) s = add_at(c, s, neg_at(c, mul_at(c, g[m - j], g[m - i + j])));
    g[m - i] = mul_at(c, s, inv2r);
  }
  ptrim(c, g);
  if (pmul(c, g, g) != a) return std::nullopt;
  return g;
}

std::optional<TowerElem> FieldTower::sqrt_at(int k, const TowerElem& a) const {
  if (is_zero_at(k, a)) return zero_at(k);
  if (k == 0) {
    if (sgn(a.q) < 0) return std::nullopt;
    exact::Integer n = a.q.get_num(), d = a.q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    exact::Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return constant(0, Rational(rn, rd));
  }
  const Level& lv = levels_[k - 1];
  if (!lv.algebraic) {
    // n/d = (n d) / d^2
    auto g = psqrt(k - 1, pmul(k - 1, a.num, a.den));
    if (!g) return std::nullopt;
    return make_frac(k, *g, a.den);
  }
  if (lv.minpoly.size() != 3)
    fail(ErrorKind::NotExpressible, "square roots are decided only over quadratic layers");
  // beta = alpha + b/2, beta^2 = D
  int c = k - 1;
  TowerElem half_b = mul_at(c, lv.minpoly[1], constant(c, Rational(1, 2)));
  TowerElem D = add_at(c, mul_at(c, half_b, half_b), neg_at(c, lv.minpoly[0]));
  TowerElem p0 = a.num.empty() ? zero_at(c) : a.num[0];
  TowerElem v = a.num.size() > 1 ? a.num[1] : zero_at(c);
  TowerElem u = add_at(c, p0, neg_at(c, mul_at(c, v, half_b)));
  TowerElem beta = add_at(k, gen_at(k), lift(k, half_b));
  if (is_zero_at(c, v)) {
    if (auto r = sqrt_at(c, u)) return lift(k, *r);
    if (auto w = sqrt_at(c, mul_at(c, u, inv_at(c, D)))) return mul_at(k, lift(k, *w), beta);
    return std::nullopt;
  }
  auto n = sqrt_at(c, add_at(c, mul_at(c, u, u), neg_at(c, mul_at(c, mul_at(c, v, v), D))));
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    TowerElem y = mul_at(c, add_at(c, u, s > 0 ? *n : neg_at(c, *n)), constant(c, Rational(1, 2)));
    auto x0 = sqrt_at(c, y);
    if (!x0 || is_zero_at(c, *x0)) continue;
    TowerElem y1 = mul_at(c, v, inv_at(c, mul_at(c, constant(c, 2), *x0)));
    TowerElem root = add_at(k, lift(k, *x0), mul_at(k, lift(k, y1), beta));
    if (mul_at(k, root, root) == a) return root;
  }
  return std::nullopt;
}

// ---- derivations ----

TowerElem FieldTower::deriv_at(int k, const TowerElem& a, int j) const {
  int L = trans_levels_[j];
  if (k < L) return zero_at(k);
  if (!levels_[k - 1].algebraic) {
    P dn = pcoeff_deriv(k - 1, a.num, j), dd = pcoeff_deriv(k - 1, a.den, j);
    if (k == L) {
      dn = padd(k - 1, dn, pderiv(k - 1, a.num));
      dd = padd(k - 1, dd, pderiv(k - 1, a.den));
    }
    P top = padd(k - 1, pmul(k - 1, dn, a.den), pneg(k - 1, pmul(k - 1, a.num, dd)));
    return make_frac(k, top, pmul(k - 1, a.den, a.den));
  }
  // m(alpha) = 0  =>  m^D(alpha) + m'(alpha) D(alpha) = 0
  const P& m = levels_[k - 1].minpoly;
  TowerElem dalpha = neg_at(k, mul_at(k, from_poly(k, pcoeff_deriv(k - 1, m, j)), inv_at(k, from_poly(k, pderiv(k - 1, m)))));
  return add_at(k, from_poly(k, pcoeff_deriv(k - 1, a.num, j)), mul_at(k, from_poly(k, pderiv(k - 1, a.num)), dalpha));
}

// ---- construction ----

void FieldTower::check_irreducible(int k, const P& m) const {
  int deg = static_cast<int>(m.size()) - 1;
  const std::string& sym = levels_.size() >= static_cast<size_t>(k) ? levels_[k - 1].symbol : std::string("?");
  if (deg < 1) fail(ErrorKind::ParseError, "relation for " + sym + " does not involve it");
  if (deg == 1) fail(ErrorKind::ParseError, sym + " is already in the tower (linear relation)");
  int c = k - 1;
  if (deg == 2) {
    TowerElem disc = add_at(c, mul_at(c, m[1], m[1]), neg_at(c, mul_at(c, constant(c, 4), m[0])));
    if (sqrt_at(c, disc)) fail(ErrorKind::ParseError, "minimal polynomial of " + sym + " is reducible");
    return;
  }
  for (int l = 1; l < k; ++l)
    if (levels_[l - 1].algebraic)
      fail(ErrorKind::ParseError, "cannot certify irreducibility of a degree " + std::to_string(deg) +
                                      " relation over an algebraic layer");
  exact::QPoly qp;
  for (const auto& x : m) {
    TowerElem e = x;
    // rational iff it is a constant all the way down
    std::optional<Rational> q;
    int lvl = c;
    for (;;) {
      if (lvl == 0) {
        q = e.q;
        break;
      }
      if (is_zero_at(lvl, e)) {
        q = Rational(0);
        break;
      }
      if (e.num.size() != 1 || (!e.den.empty() && e.den.size() != 1)) break;
      e = e.num[0];
      --lvl;
    }
    if (!q) fail(ErrorKind::ParseError, "cannot certify irreducibility of a non-rational relation of degree " + std::to_string(deg));
    qp.c.push_back(*q);
  }
  qp.trim();
  if (!exact::is_irreducible(exact::primitive_of(qp)))
    fail(ErrorKind::ParseError, "minimal polynomial of " + sym + " is reducible over Q");
}

void FieldTower::adjoin_transcendental(const std::string& symbol) {
  if (!valid_symbol(symbol)) fail(ErrorKind::ParseError, "bad generator name '" + symbol + "'");
  for (const auto& l : levels_)
    if (l.symbol == symbol) fail(ErrorKind::ParseError, "repeated generator " + symbol);
  levels_.push_back(Level{symbol, false, {}});
  trans_levels_.push_back(height());
}

namespace {

// polynomials in the new symbol X with coefficients at the current top level
struct MinpolyCtx {
  const FieldTower& tower;
  std::string sym;
  using P = std::vector<TowerElem>;
  P trimmed(P p) {
    while (!p.empty() && tower.is_zero(p.back())) p.pop_back();
    return p;
  }
  P number(const Rational& q) { return trimmed({tower.rational(q)}); }
  P symbol(const std::string& s) {
    if (s == sym) return {tower.zero(), tower.one()};
    return trimmed({tower.gen(s)});
  }
  P add(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), tower.zero());
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = tower.add(i < a.size() ? a[i] : tower.zero(), i < b.size() ? b[i] : tower.zero());
    return trimmed(r);
  }
  P neg(const P& a) {
    P r;
    for (const auto& x : a) r.push_back(tower.neg(x));
    return r;
  }
  P sub(const P& a, const P& b) { return add(a, neg(b)); }
  P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, tower.zero());
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = tower.add(r[i + j], tower.mul(a[i], b[j]));
    return trimmed(r);
  }
  P div(const P& a, const P& b) {
    if (b.size() != 1) fail(ErrorKind::ParseError, "division by a non-constant in a relation");
    return mul(a, {tower.inv(b[0])});
  }
  P pow(const P& a, long e) {
    if (e < 0 || e > 64) fail(ErrorKind::ParseError, "exponent out of range in a relation");
    P r = number(1);
    for (long k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }
};

struct ElemCtx {
  const FieldTower& tower;
  TowerElem number(const Rational& q) { return tower.rational(q); }
  TowerElem symbol(const std::string& s) { return tower.gen(s); }
  TowerElem add(const TowerElem& a, const TowerElem& b) { return tower.add(a, b); }
  TowerElem sub(const TowerElem& a, const TowerElem& b) { return tower.sub(a, b); }
  TowerElem mul(const TowerElem& a, const TowerElem& b) { return tower.mul(a, b); }
  TowerElem div(const TowerElem& a, const TowerElem& b) { return tower.div(a, b); }
  TowerElem neg(const TowerElem& a) { return tower.neg(a); }
  TowerElem pow(const TowerElem& a, long e) { return tower.pow(a, e); }
};

}  // namespace

void FieldTower::adjoin_algebraic(const std::string& symbol, const std::string& lhs, const std::string& rhs) {
  if (!valid_symbol(symbol)) fail(ErrorKind::ParseError, "bad generator name '" + symbol + "'");
  for (const auto& l : levels_)
    if (l.symbol == symbol) fail(ErrorKind::ParseError, "repeated generator " + symbol);
  MinpolyCtx ctx{*this, symbol};
  P m = ctx.sub(parse_expression(lhs, ctx), parse_expression(rhs, ctx));
  if (m.size() < 2) fail(ErrorKind::ParseError, "relation for " + symbol + " does not involve it");
  m = ctx.mul(m, {inv(m.back())});
  int k = height() + 1;
  levels_.push_back(Level{symbol, true, m});
  try {
    check_irreducible(k, m);
  } catch (...) {
    levels_.pop_back();
    throw;
  }
}

FieldTower FieldTower::parse(const std::string& spec) {
  FieldTower t;
  t.spec_ = spec;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t semi = spec.find(';', start);
    std::string part = trim(spec.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    start = semi == std::string::npos ? spec.size() + 1 : semi + 1;
    if (part.empty()) continue;
    size_t colon = part.find(':');
    if (colon == std::string::npos) {
      t.adjoin_transcendental(part);
      continue;
    }
    std::string sym = trim(part.substr(0, colon)), eq = part.substr(colon + 1);
    size_t e = eq.find('=');
    if (e == std::string::npos) fail(ErrorKind::ParseError, "relation for " + sym + " needs '='");
    t.adjoin_algebraic(sym, eq.substr(0, e), eq.substr(e + 1));
  }
  return t;
}

// ---- public helpers ----

std::vector<std::string> FieldTower::transcendentals() const {
  std::vector<std::string> r;
  for (int l : trans_levels_) r.push_back(levels_[l - 1].symbol);
  return r;
}

TowerElem FieldTower::gen(const std::string& symbol) const {
  for (int k = 1; k <= height(); ++k)
    if (levels_[k - 1].symbol == symbol) return lift_to_top(k, gen_at(k));
  fail(ErrorKind::ParseError, "unknown generator '" + symbol + "'");
}

TowerElem FieldTower::pow(const TowerElem& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  TowerElem r = one(), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::optional<Rational> FieldTower::as_rational(const TowerElem& a) const {
  TowerElem e = a;
  for (int k = height(); k > 0; --k) {
    if (is_zero_at(k, e)) return Rational(0);
    if (e.num.size() != 1) return std::nullopt;
    if (!levels_[k - 1].algebraic && e.den.size() != 1) return std::nullopt;
    e = e.num[0];
  }
  return e.q;
}

std::optional<TowerElem> FieldTower::sqrt(const TowerElem& a) const { return sqrt_at(height(), a); }

TowerElem FieldTower::parse_element(const std::string& expr) const {
  ElemCtx ctx{*this};
  return parse_expression(expr, ctx);
}

std::string FieldTower::pstring(int c, const P& p, const std::string& var) const {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    if (is_zero_at(c, p[i])) continue;
    std::string cs = to_string_at(c, p[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (i == 0) term = cs;
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else if (cs.find(' ') == std::string::npos) term = cs + "*" + mono;
    else term = "(" + cs + ")*" + mono;
    if (s.empty()) s = term;
    else if (term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s;
}

std::string FieldTower::to_string_at(int k, const TowerElem& a) const {
  if (k == 0) return a.q.get_str();
  const Level& lv = levels_[k - 1];
  std::string n = pstring(k - 1, a.num, lv.symbol);
  if (lv.algebraic || (a.den.size() == 1 && a.den[0] == constant(k - 1, 1))) return n;
  std::string d = pstring(k - 1, a.den, lv.symbol);
  auto wrap = [](const std::string& x) { return x.find(' ') == std::string::npos ? x : "(" + x + ")"; };
  return wrap(n) + "/" + wrap(d);
}

std::string FieldTower::to_string(const TowerElem& a) const { return to_string_at(height(), a); }

std::string FieldTower::display(const TowerElem& a) const {
  int N = height();
  if (N > 0 && levels_[N - 1].algebraic && a.num.size() > 1) {
    TowerElem r = mul(a, gen_at(N));
    if (r.num.size() == 1) {
      std::string rs = to_string_at(N - 1, r.num[0]);
      if (rs.find(' ') != std::string::npos) rs = "(" + rs + ")";
      return rs + "/" + levels_[N - 1].symbol;
    }
  }
  return to_string(a);
}

KahlerElement FieldTower::d(const TowerElem& a) const {
  KahlerElement k;
  for (size_t j = 0; j < trans_levels_.size(); ++j) k.coeff.push_back(deriv_at(height(), a, static_cast<int>(j)));
  return k;
}

KahlerElement FieldTower::kahler_zero() const {
  KahlerElement k;
  k.coeff.assign(trans_levels_.size(), zero());
  return k;
}

KahlerElement FieldTower::kahler_add(const KahlerElement& a, const KahlerElement& b) const {
  KahlerElement r;
  for (size_t j = 0; j < a.coeff.size(); ++j) r.coeff.push_back(add(a.coeff[j], b.coeff[j]));
  return r;
}

KahlerElement FieldTower::kahler_scale(const TowerElem& c, const KahlerElement& a) const {
  KahlerElement r;
  for (const auto& x : a.coeff) r.coeff.push_back(mul(c, x));
  return r;
}

bool FieldTower::kahler_is_zero(const KahlerElement& a) const {
  return std::all_of(a.coeff.begin(), a.coeff.end(), [&](const TowerElem& x) { return is_zero(x); });
}

std::string FieldTower::kahler_to_string(const KahlerElement& a) const {
  std::string s;
  auto names = transcendentals();
  for (size_t j = 0; j < a.coeff.size(); ++j) {
    if (is_zero(a.coeff[j])) continue;
    std::string c = display(a.coeff[j]);
    std::string term = c == "1" ? "d" + names[j] : c == "-1" ? "-d" + names[j] : (c.find(' ') == std::string::npos ? c : "(" + c + ")") + " d" + names[j];
    if (s.empty()) s = term;
    else if (term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace scissors::hochschild
