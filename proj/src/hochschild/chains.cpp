#include "scissors/hochschild/chains.hpp"

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"

namespace scissors::hochschild {

namespace {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_size(int dim, int degree) {
  // dim^(degree+1) must fit the index
  double s = 1;
  for (int k = 0; k <= degree; ++k) s *= dim;
  if (degree < 0 || s > 1e15) fail(ErrorKind::SizeCap, "tensor power too large");
}

std::vector<QVec> vecs(const std::vector<HochschildChain>& cs) {
  std::vector<QVec> r;
  r.reserve(cs.size());
  for (const auto& c : cs) r.push_back(c.v);
  return r;
}

}  // namespace

uint64_t tuple_index(int dim, const std::vector<int>& t) {
  uint64_t idx = 0;
  for (int x : t) {
    if (x < 0 || x >= dim) fail(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(x));
    idx = idx * dim + x;
  }
  return idx;
}

std::vector<int> index_tuple(int dim, int degree, uint64_t idx) {
  std::vector<int> t(degree + 1);
  for (int s = degree; s >= 0; --s) {
    t[s] = static_cast<int>(idx % dim);
    idx /= dim;
  }
  return t;
}

HochschildChain make_chain(const FiniteDimAlgebra& a, int degree, const std::map<std::vector<int>, Rational>& terms) {
  check_size(a.dim, degree);
  HochschildChain c;
  c.degree = degree;
  for (const auto& [t, x] : terms) {
    if (static_cast<int>(t.size()) != degree + 1) fail(ErrorKind::DimensionMismatch, "tuple length != degree + 1");
    c.v.add(tuple_index(a.dim, t), x);
  }
  c.v.normalize();
  return c;
}

std::map<std::vector<int>, Rational> chain_terms(const FiniteDimAlgebra& a, const HochschildChain& c) {
  std::map<std::vector<int>, Rational> r;
  for (const auto& [i, x] : c.v.e) r[index_tuple(a.dim, c.degree, i)] = x;
  return r;
}

HochschildChain operator+(const HochschildChain& x, const HochschildChain& y) {
  if (x.degree != y.degree) fail(ErrorKind::DimensionMismatch, "adding chains of different degree");
  HochschildChain r = x;
  r.v.axpy(1, y.v);
  return r;
}

HochschildChain operator-(const HochschildChain& x, const HochschildChain& y) {
  if (x.degree != y.degree) fail(ErrorKind::DimensionMismatch, "subtracting chains of different degree");
  HochschildChain r = x;
  r.v.axpy(-1, y.v);
  return r;
}

HochschildChain scaled(const HochschildChain& x, const Rational& s) { return {x.degree, x.v.scaled(s)}; }

HochschildChain epsilon(const FiniteDimAlgebra& a, int i, const HochschildChain& c) {
  int n = c.degree;
  if (i < 0 || i > n - 1) fail(ErrorKind::IndexOutOfRange, "epsilon_" + std::to_string(i) + " in degree " + std::to_string(n));
  HochschildChain r;
  r.degree = n - 1;
  std::vector<int> u(n);
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(a.dim, n, idx);
    for (int s = 0; s < i; ++s) u[s] = t[s];
    for (int s = i + 2; s <= n; ++s) u[s - 1] = t[s];
    for (const auto& [k, m] : a.product(t[i], t[i + 1])) {
      u[i] = k;
      r.v.add(tuple_index(a.dim, u), x * m);
    }
  }
  r.v.normalize();
  return r;
}

HochschildChain bar_boundary(const FiniteDimAlgebra& a, const HochschildChain& c) {
  int n = c.degree;
  if (n < 1) fail(ErrorKind::DegreeOutOfRange, "boundary needs degree >= 1");
  HochschildChain r;
  r.degree = n - 1;
  std::vector<int> u(n);
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(a.dim, n, idx);
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < i; ++s) u[s] = t[s];
      for (int s = i + 2; s <= n; ++s) u[s - 1] = t[s];
      Rational sx = (i % 2) ? Rational(-x) : x;
      for (const auto& [k, m] : a.product(t[i], t[i + 1])) {
        u[i] = k;
        r.v.add(tuple_index(a.dim, u), sx * m);
      }
    }
    for (int s = 1; s < n; ++s) u[s] = t[s];
    Rational sx = (n % 2) ? Rational(-x) : x;
    for (const auto& [k, m] : a.product(t[n], t[0])) {
      u[0] = k;
      r.v.add(tuple_index(a.dim, u), sx * m);
    }
  }
  r.v.normalize();
  return r;
}

bool in_omega(const FiniteDimAlgebra& a, const HochschildChain& c) {
  for (int i = 0; i < c.degree; ++i)
    if (!epsilon(a, i, c).is_zero()) return false;
  return true;
}

HochschildChain hochschild_boundary(const FiniteDimAlgebra& a, const HochschildChain& c) {
  if (!in_omega(a, c)) fail(ErrorKind::NotInOmega, "chain is not in the kernel of every epsilon_i");
  return bar_boundary(a, c);
}

int unit_complement_index(const FiniteDimAlgebra& a) {
  if (auto u = a.unit_index()) return *u;
  for (int i = 0; i < a.dim; ++i)
    if (sgn(a.unit[i]) != 0) return i;
  ensure(false, "algebra has zero unit");
  return 0;
}

HochschildChain differential_form(const FiniteDimAlgebra& a, const std::vector<int>& idx) {
  if (idx.empty()) fail(ErrorKind::DimensionMismatch, "empty form");
  int n = static_cast<int>(idx.size()) - 1;
  check_size(a.dim, n);
  for (int x : idx)
    if (x < 0 || x >= a.dim) fail(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(x));
  Product unit;
  for (int j = 0; j < a.dim; ++j)
    if (sgn(a.unit[j]) != 0) unit.push_back({j, a.unit[j]});
  // closed slots, the still-open last slot (it meets the next left factor), coefficient
  struct Term {
    std::vector<int> slots;
    Product open;
    Rational coeff;
  };
  std::vector<Term> terms{{{}, {{idx[0], Rational(1)}}, Rational(1)}};
  for (int k = 1; k <= n; ++k) {
    int e = idx[k];
    std::vector<Term> next;
    for (const auto& t : terms)
      for (const auto& [b, c] : t.open) {
        // (1 (x) e)
        Term w{t.slots, {{e, Rational(1)}}, t.coeff * c};
        w.slots.push_back(b);
        next.push_back(std::move(w));
        // -(e (x) 1)
        for (const auto& [m, mc] : a.product(b, e)) {
          Term u{t.slots, unit, -t.coeff * c * mc};
          u.slots.push_back(m);
          next.push_back(std::move(u));
        }
      }
    terms = std::move(next);
  }
  HochschildChain r;
  r.degree = n;
  for (const auto& t : terms)
    for (const auto& [b, c] : t.open) {
      auto s = t.slots;
      s.push_back(b);
      r.v.add(tuple_index(a.dim, s), t.coeff * c);
    }
  r.v.normalize();
  return r;
}

std::vector<HochschildChain> differential_basis(const FiniteDimAlgebra& a, int n) {
  if (n < 0) fail(ErrorKind::DegreeOutOfRange, "negative degree");
  int skip = unit_complement_index(a);
  std::vector<HochschildChain> r;
  std::vector<int> idx(n + 1, 0);
  std::vector<int> rest;
  for (int i = 0; i < a.dim; ++i)
    if (i != skip) rest.push_back(i);
  if (n > 0 && rest.empty()) return r;
  uint64_t count = a.dim * ipow(rest.size(), n);
  for (uint64_t m = 0; m < count; ++m) {
    uint64_t x = m;
    for (int s = n; s >= 1; --s) {
      idx[s] = rest[x % rest.size()];
      x /= rest.size();
    }
    idx[0] = static_cast<int>(x);
    r.push_back(differential_form(a, idx));
  }
  return r;
}

std::vector<HochschildChain> omega_basis(const FiniteDimAlgebra& a, int n, uint64_t cap) {
  if (n < 0) fail(ErrorKind::DegreeOutOfRange, "negative degree");
  check_size(a.dim, n);
  uint64_t size = ipow(a.dim, n + 1);
  if (size > cap) fail(ErrorKind::SizeCap, "dim A^(n+1) = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  // kernel of e_J -> (eps_0(e_J), .., eps_{n-1}(e_J)) stacked
  uint64_t block = ipow(a.dim, n);
  std::vector<QVec> images;
  images.reserve(size);
  for (uint64_t j = 0; j < size; ++j) {
    HochschildChain e{n, {}};
    e.v.e.push_back({j, Rational(1)});
    QVec img;
    for (int i = 0; i < n; ++i)
      for (const auto& [k, x] : epsilon(a, i, e).v.e) img.add(i * block + k, x);
    img.normalize();
    images.push_back(std::move(img));
  }
  std::vector<HochschildChain> r;
  for (auto& k : exact::kernel(images)) r.push_back({n, std::move(k)});
  return r;
}

namespace {

std::vector<HochschildChain> boundaries_of(const FiniteDimAlgebra& a, const std::vector<HochschildChain>& cs) {
  std::vector<HochschildChain> r;
  r.reserve(cs.size());
  for (const auto& c : cs) r.push_back(bar_boundary(a, c));
  return r;
}

}  // namespace

HHResult hochschild_homology(const FiniteDimAlgebra& a, int n, uint64_t cap) {
  if (n < 0) fail(ErrorKind::DegreeOutOfRange, "negative degree");
  uint64_t top = a.dim * ipow(a.dim - 1, n + 1);
  if (top > cap)
    fail(ErrorKind::SizeCap, a.name + ": dim Omega_" + std::to_string(n + 1) + " = " + std::to_string(top) +
                                 " exceeds cap " + std::to_string(cap));
  HHResult h;
  h.degree = n;
  auto omega = differential_basis(a, n);
  h.omega_dim = omega.size();
  std::vector<HochschildChain> cycles;
  if (n == 0) {
    cycles = omega;
  } else {
    auto imgs = boundaries_of(a, omega);
    for (auto& k : exact::kernel(vecs(imgs))) {
      HochschildChain z{n, {}};
      for (const auto& [j, x] : k.e) z.v.axpy(x, omega[j].v);
      cycles.push_back(std::move(z));
    }
  }
  h.cycles_dim = cycles.size();
  auto bd = boundaries_of(a, differential_basis(a, n + 1));
  exact::Echelon ech;
  for (const auto& b : bd) ech.insert(b.v);
  h.boundaries_dim = ech.rank();
  ensure(h.cycles_dim >= h.boundaries_dim, "B_n larger than I_n");
  h.dim = h.cycles_dim - h.boundaries_dim;
  for (const auto& z : cycles) {
    if (h.representatives.size() == h.dim) break;
    if (ech.insert(z.v)) h.representatives.push_back(z);
  }
  ensure(h.representatives.size() == h.dim, "B_n is not contained in I_n");
  return h;
}

HochschildChain random_omega_chain(const FiniteDimAlgebra& a, int n, Rng& rng, int terms) {
  int skip = unit_complement_index(a);
  HochschildChain r{n, {}};
  if (n > 0 && a.dim == 1) return r;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(n + 1);
    idx[0] = static_cast<int>(rng.uniform(0, a.dim - 1));
    for (int s = 1; s <= n; ++s) {
      int x = static_cast<int>(rng.uniform(0, a.dim - 2));
      idx[s] = x >= skip ? x + 1 : x;
    }
    Rational c = rng.rational(5, 4);
    r.v.axpy(c, differential_form(a, idx).v);
  }
  return r;
}

std::string chain_to_string(const FiniteDimAlgebra& a, const HochschildChain& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [t, x] : chain_terms(a, c)) {
    std::string lit = exact::rational_literal(x);
    if (!s.empty()) s += lit[0] == '-' ? " - " : " + ";
    else if (lit[0] == '-') s += "-";
    if (lit[0] == '-') lit = lit.substr(1);
    if (lit != "1") s += lit + " ";
    for (size_t k = 0; k < t.size(); ++k) {
      if (k) s += "(x)";
      s += static_cast<size_t>(t[k]) < a.labels.size() ? a.labels[t[k]] : "e" + std::to_string(t[k]);
    }
  }
  return s;
}

size_t chain_rank(const std::vector<HochschildChain>& cs) { return exact::rank_of(vecs(cs)); }

bool same_span(const std::vector<HochschildChain>& x, const std::vector<HochschildChain>& y) {
  return exact::same_span(vecs(x), vecs(y));
}

}  // namespace scissors::hochschild
