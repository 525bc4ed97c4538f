#include "scissors/exact/algebraic.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>

#include "scissors/exact/error.hpp"
#include "scissors/exact/factor.hpp"

namespace scissors::exact {

struct AlgebraicReal::Irrational {
  ZPoly poly;  // irreducible, degree >= 2
  mutable std::mutex m;
  mutable Rational lo, hi;
  mutable int sign_lo;

  Irrational(ZPoly p, Rational l, Rational h) : poly(std::move(p)), lo(std::move(l)), hi(std::move(h)) {
    sign_lo = sign_at(poly, lo);
    ensure(sign_lo != 0 && sign_at(poly, hi) == -sign_lo, "isolating interval lost its sign change");
  }

  std::pair<Rational, Rational> get() const {
    std::lock_guard<std::mutex> g(m);
    return {lo, hi};
  }

  std::pair<Rational, Rational> refine(const Rational& w) const {
    std::lock_guard<std::mutex> g(m);
    while (hi - lo > w) {
      Rational mid = (lo + hi) / 2;
      int s = sign_at(poly, mid);
      if (s == sign_lo)
        lo = mid;
      else
        hi = mid;
    }
    return {lo, hi};
  }

  void halve() const {
    std::lock_guard<std::mutex> g(m);
    Rational mid = (lo + hi) / 2;
    if (sign_at(poly, mid) == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
};

namespace {

using Interval = std::pair<Rational, Rational>;

Rational width0(const Interval& i) { return i.second - i.first; }

Interval iv_add(const Interval& a, const Interval& b) { return {a.first + b.first, a.second + b.second}; }

Interval iv_mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.first * b.first, a.first * b.second, a.second * b.first, a.second * b.second};
  Rational lo = p[0], hi = p[0];
  for (int i = 1; i < 4; ++i) {
    if (p[i] < lo) lo = p[i];
    if (p[i] > hi) hi = p[i];
  }
  return {lo, hi};
}

struct Candidate {
  ZPoly f;
  SturmChain sturm;
};

// Pick the irreducible factor of R owning the root that the shrinking
// intervals produced by `at(step)` converge to.
AlgebraicReal select_root(const ZPoly& R, const std::function<Interval(int)>& at) {
  auto fs = irreducible_factors(R);
  ensure(!fs.empty(), "select_root: constant resultant");
  std::vector<Candidate> cs;
  for (auto& f : fs) cs.push_back({f, SturmChain(f)});
  for (int step = 0; step < 4096; ++step) {
    Interval I = at(step);
    int total = 0;
    const Candidate* hit = nullptr;
    for (auto& c : cs) {
      int n = c.sturm.count(I.first, I.second);
      total += n;
      if (n) hit = &c;
    }
    ensure(total >= 1, "select_root: enclosure lost the root");
    if (total == 1) return AlgebraicReal::make(hit->f, I.first, I.second);
  }
  fail(ErrorKind::InvariantViolation, "select_root: no isolation after 4096 refinements");
}

Interval point(const Rational& q) { return {q, q}; }

Interval operand_interval(const AlgebraicReal& a, int step, const Rational& base) {
  if (a.is_rational()) return point(a.rational());
  Rational w = base;
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 4 * step);
  return a.approx(w);
}

Rational base_width(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational w = 1;
  if (!a.is_rational()) w = std::min(w, width0(a.interval()));
  if (!b.is_rational()) w = std::min(w, width0(b.interval()));
  return w;
}

// R(x) = Res_y(p(y), g_x(y)) by evaluation at x = 0..deg and interpolation
ZPoly resultant_poly(const ZPoly& p, int out_degree, const std::function<QPoly(const Rational&)>& g_at) {
  QPoly pq = to_q(p);
  std::vector<Rational> vals;
  vals.reserve(out_degree + 1);
  for (int k = 0; k <= out_degree; ++k) vals.push_back(resultant(pq, g_at(Rational(k))));
  return primitive_of(interpolate(vals));
}

}  // namespace

AlgebraicReal AlgebraicReal::make(const ZPoly& poly, const Rational& lo, const Rational& hi) {
  if (poly.is_zero()) fail(ErrorKind::NoRootInInterval, "zero polynomial");
  if (lo > hi) fail(ErrorKind::NoRootInInterval, "empty interval");
  auto fs = irreducible_factors(poly);
  const ZPoly* owner = nullptr;
  int total = 0;
  for (auto& f : fs) {
    int n = SturmChain(f).count(lo, hi);
    total += n;
    if (n) owner = &f;
  }
  if (total == 0) fail(ErrorKind::NoRootInInterval, exact::to_string(poly) + " in [" + lo.get_str() + ", " + hi.get_str() + "]");
  if (total > 1) fail(ErrorKind::MultipleRootsInInterval, exact::to_string(poly) + " in [" + lo.get_str() + ", " + hi.get_str() + "]");
  if (owner->degree() == 1) return AlgebraicReal(Rational(-owner->c[0], owner->c[1]));
  AlgebraicReal r;
  r.q_ = 0;
  Rational l = lo, h = hi;
  l.canonicalize();
  h.canonicalize();
  r.irr_ = std::make_shared<Irrational>(*owner, l, h);
  return r;
}

const Rational& AlgebraicReal::rational() const {
  ensure(!irr_, "rational() on an irrational value");
  return q_;
}

ZPoly AlgebraicReal::minpoly() const {
  if (irr_) return irr_->poly;
  return primitive_of(QPoly(std::vector<Rational>{-q_, Rational(1)}));
}

int AlgebraicReal::degree() const { return irr_ ? irr_->poly.degree() : 1; }

std::pair<Rational, Rational> AlgebraicReal::interval() const {
  if (irr_) return irr_->get();
  return {q_, q_};
}

std::pair<Rational, Rational> AlgebraicReal::approx(const Rational& w) const {
  if (irr_) return irr_->refine(w);
  return {q_, q_};
}

namespace {
// floor(x * 2^b) for an irrational x, exact
Integer floor_scaled(const AlgebraicReal& x, unsigned b) {
  Integer klo, khi;
  for (Rational w(1, 1);; mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 8)) {
    auto [lo, hi] = x.approx(w);
    Rational sl = lo, sh = hi;
    mpq_mul_2exp(sl.get_mpq_t(), sl.get_mpq_t(), b);
    mpq_mul_2exp(sh.get_mpq_t(), sh.get_mpq_t(), b);
    mpz_fdiv_q(klo.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
    mpz_fdiv_q(khi.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
    if (klo == khi) return klo;
  }
}
}  // namespace

std::pair<Rational, Rational> AlgebraicReal::canonical_interval() const {
  if (!irr_) return {q_, q_};
  SturmChain st(irr_->poly);
  for (unsigned b = 32;; b += 32) {
    Integer k = floor_scaled(*this, b);
    Rational lo(k), hi(k + 1);
    mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), b);
    mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), b);
    if (st.count(lo, hi) == 1) return {lo, hi};
  }
}

int AlgebraicReal::sign() const {
  if (!irr_) return sgn(q_);
  for (;;) {
    auto [lo, hi] = irr_->get();
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    irr_->halve();  // 0 is never a root, so it leaves the interval
  }
}

double AlgebraicReal::to_double() const {
  if (!irr_) return q_.get_d();
  Rational v(floor_scaled(*this, 64));
  mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), 64);
  return v.get_d();
}

std::string AlgebraicReal::to_string() const {
  if (!irr_) return q_.get_str();
  std::ostringstream os;
  auto [lo, hi] = canonical_interval();
  os << "root(" << exact::to_string(irr_->poly) << ", [" << lo.get_str() << ", " << hi.get_str()
     << "]) ~ " << to_double();
  return os.str();
}

AlgebraicReal AlgebraicReal::operator-() const {
  if (!irr_) return AlgebraicReal(Rational(-q_));
  auto [lo, hi] = interval();
  AlgebraicReal r;
  r.irr_ = std::make_shared<Irrational>(primitive_of(reflect(irr_->poly)), Rational(-hi), Rational(-lo));
  return r;
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (!irr_) return AlgebraicReal(Rational(1 / q_));
  sign();  // forces 0 out of the interval
  auto [lo, hi] = interval();
  AlgebraicReal r;
  r.irr_ = std::make_shared<Irrational>(primitive_of(reversed(irr_->poly)), Rational(1 / hi), Rational(1 / lo));
  return r;
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& r, unsigned bits) {
  ensure(sgn(r) >= 0, "sqrt_bounds of a negative number");
  Integer N;
  Rational scaled = r;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), 2 * bits);
  mpz_fdiv_q(N.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer s = ::sqrt(N);
  Rational lo(s), hi(s + 1);
  mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), bits);
  mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), bits);
  return {lo, hi};
}

AlgebraicReal AlgebraicReal::sqrt() const {
  int s = sign();
  if (s < 0) fail(ErrorKind::NegativeSqrt, to_string());
  if (s == 0) return AlgebraicReal(0);
  if (!irr_) {
    Integer rn = ::sqrt(q_.get_num()), rd = ::sqrt(q_.get_den());
    if (rn * rn == q_.get_num() && rd * rd == q_.get_den()) return AlgebraicReal(Rational(rn, rd));
    ZPoly p(std::vector<Integer>{-q_.get_num(), 0, q_.get_den()});
    Rational hi = q_ > 1 ? q_ : Rational(1);
    return make(p, 0, hi);
  }
  ZPoly R = substitute_square(irr_->poly);
  AlgebraicReal self = *this;
  return select_root(R, [self](int step) {
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 8 + 4 * step);
    auto [lo, hi] = self.approx(w);
    unsigned bits = 16 + 4 * step;
    Rational slo = sgn(lo) > 0 ? sqrt_bounds(lo, bits).first : Rational(0);
    return Interval{slo, sqrt_bounds(hi, bits).second};
  });
}

AlgebraicReal AlgebraicReal::pow(unsigned e) const {
  AlgebraicReal r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.q_ + b.q_));
  if (a.is_rational()) return b + a;
  if (b.is_rational()) {
    if (sgn(b.q_) == 0) return a;
    const Rational& r = b.q_;
    auto [lo, hi] = a.interval();
    AlgebraicReal out;
    out.irr_ = std::make_shared<AlgebraicReal::Irrational>(compose_linear(a.irr_->poly, 1, -r), Rational(lo + r),
                                                           Rational(hi + r));
    return out;
  }
  const ZPoly& p = a.irr_->poly;
  const ZPoly& q = b.irr_->poly;
  // Res_y(p(y), q(x - y))
  ZPoly R = resultant_poly(p, p.degree() * q.degree(), [&q](const Rational& x) {
    QPoly lin(std::vector<Rational>{x, Rational(-1)});
    QPoly acc;
    for (int i = q.degree(); i >= 0; --i) acc = acc * lin + QPoly::constant(Rational(q.c[i]));
    return acc;
  });
  Rational base = base_width(a, b);
  return select_root(R, [&](int step) {
    return iv_add(operand_interval(a, step, base), operand_interval(b, step, base));
  });
}

AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return a + (-b); }

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicReal(Rational(a.q_ * b.q_));
  if (a.is_rational()) return b * a;
  if (b.is_rational()) {
    const Rational& r = b.q_;
    if (sgn(r) == 0) return AlgebraicReal(0);
    if (r == 1) return a;
    auto [lo, hi] = a.interval();
    Rational l = lo * r, h = hi * r;
    if (l > h) std::swap(l, h);
    AlgebraicReal out;
    out.irr_ = std::make_shared<AlgebraicReal::Irrational>(compose_linear(a.irr_->poly, 1 / r, 0), l, h);
    return out;
  }
  const ZPoly& p = a.irr_->poly;
  const ZPoly& q = b.irr_->poly;
  int n = q.degree();
  // Res_y(p(y), y^n q(x/y)) = Res_y(p(y), sum q_i x^i y^(n-i))
  ZPoly R = resultant_poly(p, p.degree() * n, [&q, n](const Rational& x) {
    std::vector<Rational> v(n + 1);
    Rational xp = 1;
    for (int i = 0; i <= n; ++i) {
      v[n - i] = Rational(q.c[i]) * xp;
      xp *= x;
    }
    return QPoly(std::move(v));
  });
  Rational base = base_width(a, b);
  return select_root(R, [&](int step) {
    return iv_mul(operand_interval(a, step, base), operand_interval(b, step, base));
  });
}

AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  return a * b.inverse();
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.q_, b.q_) < 0 ? -1 : (cmp(a.q_, b.q_) > 0 ? 1 : 0);
  if (a.is_rational()) return -compare(b, a);
  if (b.is_rational()) {
    const Rational& r = b.q_;
    for (;;) {
      auto [lo, hi] = a.interval();
      if (lo > r) return 1;
      if (hi < r) return -1;
      if (lo == r) return 1;
      if (hi == r) return -1;
      a.irr_->halve();
    }
  }
  bool same = a.irr_->poly == b.irr_->poly;
  std::unique_ptr<SturmChain> sturm;
  for (;;) {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    if (ahi < blo) return -1;
    if (bhi < alo) return 1;
    if (same) {
      if (!sturm) sturm = std::make_unique<SturmChain>(a.irr_->poly);
      if (sturm->count(std::min(alo, blo), std::max(ahi, bhi)) == 1) return 0;
    }
    a.irr_->halve();
    b.irr_->halve();
  }
}

}  // namespace scissors::exact
