#include "scissors/exact/relations.hpp"

#include <mpfr.h>

#include "scissors/exact/error.hpp"
#include "scissors/exact/lll.hpp"
#include "scissors/exact/qlinalg.hpp"
#include "scissors/exact/radical.hpp"

namespace scissors::exact {
namespace {

template <class T>
struct Cx {
  T re, im;
  Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Cx conj() const { return {re, -im}; }
};

template <class T>
Cx<T> cpow(Cx<T> z, Integer e, const T& one, const T& zero) {
  Cx<T> r{one, zero};
  if (sgn(e) < 0) {
    z = z.conj();  // |z| = 1
    e = -e;
  }
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * z;
    e >>= 1;
    if (sgn(e) > 0) z = z * z;
  }
  return r;
}

bool verify_radical(const std::vector<AnglePair>& angles, const std::vector<Integer>& m, bool& ok) {
  Cx<RadicalQ> acc{RadicalQ(Rational(1)), RadicalQ()};
  for (size_t j = 0; j < angles.size(); ++j) {
    if (sgn(m[j]) == 0) continue;
    auto c = RadicalQ::from(angles[j].cos);
    auto s = RadicalQ::from(angles[j].sin);
    if (!c || !s) return false;
    acc = acc * cpow(Cx<RadicalQ>{*c, *s}, Integer(2 * m[j]), RadicalQ(Rational(1)), RadicalQ());
  }
  ok = acc.re == RadicalQ(Rational(1)) && acc.im.is_zero();
  return true;
}

bool verify_generic(const std::vector<AnglePair>& angles, const std::vector<Integer>& m) {
  Cx<Real> acc{Real(1), Real(0)};
  for (size_t j = 0; j < angles.size(); ++j) {
    if (sgn(m[j]) == 0) continue;
    acc = acc * cpow(Cx<Real>{angles[j].cos, angles[j].sin}, Integer(2 * m[j]), Real(1), Real(0));
  }
  return acc.re == Real(1) && acc.im.is_zero();
}

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

void set_rational(mpfr_t out, const Rational& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

}  // namespace

bool verify_relation(const std::vector<AnglePair>& angles, const std::vector<Integer>& m, std::string* field) {
  ensure(angles.size() == m.size(), "verify_relation: size mismatch");
  bool ok = false;
  if (verify_radical(angles, m, ok)) {
    if (field) *field = "multiquadratic";
    return ok;
  }
  if (field) *field = "algebraic";
  return verify_generic(angles, m);
}

RelationSearch find_angle_relations(const std::vector<AnglePair>& angles, long height_bound, unsigned start_bits) {
  if (height_bound < 1) fail(ErrorKind::ParseError, "height_bound must be >= 1");
  RelationSearch out;
  out.height_bound = height_bound;
  const size_t k = angles.size();
  if (k == 0) return out;
  for (unsigned prec = start_bits;; prec *= 2) {
    out.precision_bits = prec;
    mpfr_prec_t wp = prec + 64;
    std::vector<std::unique_ptr<Mpfr>> x;
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), prec + 48);
    for (const auto& a : angles) {
      auto c = a.cos.approx(w), s = a.sin.approx(w);
      Mpfr cc(wp), ss(wp);
      set_rational(cc.v, (c.first + c.second) / 2);
      set_rational(ss.v, (s.first + s.second) / 2);
      x.push_back(std::make_unique<Mpfr>(wp));
      mpfr_atan2(x.back()->v, ss.v, cc.v, MPFR_RNDN);
    }
    x.push_back(std::make_unique<Mpfr>(wp));
    mpfr_const_pi(x.back()->v, MPFR_RNDN);

    // lattice rows (e_j, round(2^(prec-32) x_j))
    const size_t n = k + 1;
    std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 1));
    Mpfr t(wp);
    for (size_t j = 0; j < n; ++j) {
      basis[j][j] = 1;
      mpfr_mul_2si(t.v, x[j]->v, static_cast<long>(prec) - 32, MPFR_RNDN);
      mpfr_round(t.v, t.v);
      mpfr_get_z(basis[j][n].get_mpz_t(), t.v, MPFR_RNDN);
    }
    lll_reduce(basis);

    bool ambiguous = false;
    std::vector<IntegerRelation> cands;
    Mpfr acc(wp), term(wp);
    for (const auto& row : basis) {
      std::vector<Integer> m(row.begin(), row.begin() + k);
      bool nonzero = false, small = true;
      for (auto& v : m) {
        if (sgn(v) != 0) nonzero = true;
        if (abs(v) > height_bound) small = false;
      }
      if (!nonzero || !small) continue;
      mpfr_set_zero(acc.v, 1);
      for (size_t j = 0; j < n; ++j) {
        mpfr_mul_z(term.v, x[j]->v, row[j].get_mpz_t(), MPFR_RNDN);
        mpfr_add(acc.v, acc.v, term.v, MPFR_RNDN);
      }
      mpfr_abs(acc.v, acc.v, MPFR_RNDN);
      long e = mpfr_zero_p(acc.v) ? -static_cast<long>(wp) : mpfr_get_exp(acc.v);
      if (e < -static_cast<long>(prec) / 2) {
        IntegerRelation r;
        r.m = m;
        r.pi_multiple = -row[k];
        if (verify_relation(angles, m, &r.field)) cands.push_back(std::move(r));
      } else if (e < -static_cast<long>(prec) / 4) {
        ambiguous = true;
      }
    }
    if (ambiguous) {
      if (prec * 2 > kMaxPrecision)
        fail(ErrorKind::PrecisionExhausted, "relation search did not stabilize at " + std::to_string(prec) + " bits");
      continue;
    }
    // keep an independent subset
    Echelon ech;
    for (auto& r : cands) {
      QVec v;
      for (size_t j = 0; j < k; ++j)
        if (sgn(r.m[j]) != 0) v.add(j, Rational(r.m[j]));
      if (ech.insert(v)) out.relations.push_back(std::move(r));
    }
    return out;
  }
}

}  // namespace scissors::exact
