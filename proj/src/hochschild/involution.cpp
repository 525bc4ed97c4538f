#include "scissors/hochschild/involution.hpp"

#include "scissors/exact/error.hpp"

namespace scissors::hochschild {

namespace {

const std::vector<int>& conj_of(const FiniteDimAlgebra& a) {
  if (!a.conj) fail(ErrorKind::WrongAlgebra, a.name + " has no conjugation");
  return *a.conj;
}

bool is_quaternion_algebra(const FiniteDimAlgebra& a) {
  static const FiniteDimAlgebra h = algebra_quat();
  return a.dim == 4 && a.mul == h.mul && a.unit == h.unit;
}

}  // namespace

HochschildChain tau(const FiniteDimAlgebra& a, const HochschildChain& c) {
  const auto& cj = conj_of(a);
  auto u = a.unit_index();
  if (!u) fail(ErrorKind::WrongAlgebra, a.name + ": tau needs 1 as a basis vector");
  if (!in_omega(a, c)) fail(ErrorKind::NotInOmega, "tau is defined on Omega_n");
  int n = c.degree;
  Rational sign = ((n * (n + 1) / 2) % 2) ? -1 : 1;
  HochschildChain r{n, {}};
  // coordinates in the basis e_{t0} de_{t1}..de_{tn} (t_s != 1 for s >= 1) are
  // the tensor coefficients at those tuples: every other expansion term has a 1
  // in some slot s >= 1
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(a.dim, n, idx);
    bool basic = true;
    for (int s = 1; s <= n; ++s) basic = basic && t[s] != *u;
    if (!basic) continue;
    Rational coeff = sign * x;
    std::vector<int> rev(n + 1);
    rev[0] = t[0];
    for (int s = 0; s <= n; ++s) coeff *= cj[t[s]];
    for (int s = 1; s <= n; ++s) rev[s] = t[n + 1 - s];
    r.v.axpy(coeff, differential_form(a, rev).v);
  }
  return r;
}

HochschildChain conjugate_tensor(const FiniteDimAlgebra& a, const HochschildChain& c) {
  const auto& cj = conj_of(a);
  HochschildChain r = c;
  for (auto& [idx, x] : r.v.e)
    for (int s : index_tuple(a.dim, c.degree, idx))
      if (cj[s] < 0) x = -x;
  return r;
}

HochschildChain swap_conjugate(const FiniteDimAlgebra& a, const HochschildChain& c) {
  const auto& cj = conj_of(a);
  if (c.degree != 1) fail(ErrorKind::DegreeOutOfRange, "swap conjugation lives in degree 1");
  HochschildChain r{1, {}};
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(a.dim, 1, idx);
    r.v.add(tuple_index(a.dim, {t[1], t[0]}), x * cj[t[0]] * cj[t[1]]);
  }
  r.v.normalize();
  return r;
}

Eigenspaces eigenspace_split(const std::vector<HochschildChain>& basis, const ChainMap& f) {
  exact::Echelon span;
  for (const auto& v : basis) span.insert(v.v);
  Eigenspaces e;
  exact::Echelon ep, em;
  for (const auto& v : basis) {
    HochschildChain fv = f(v);
    if (!span.contains(fv.v)) fail(ErrorKind::NotStable, "subspace is not stable under the involution");
    HochschildChain p = v + fv, m = v - fv;
    if (ep.insert(p.v)) e.plus.push_back(p);
    if (em.insert(m.v)) e.minus.push_back(m);
  }
  for (const auto& p : e.plus) ensure(f(p) == p, "map is not an involution on the subspace");
  for (const auto& m : e.minus) ensure(f(m) == scaled(m, -1), "map is not an involution on the subspace");
  ensure(e.plus.size() + e.minus.size() == span.rank(), "eigenspaces do not fill the subspace");
  return e;
}

QVec wedge_image(const FiniteDimAlgebra& a, const HochschildChain& c) {
  const auto& cj = conj_of(a);
  if (c.degree != 1) fail(ErrorKind::DegreeOutOfRange, "wedge map lives in degree 1");
  QVec r;
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(a.dim, 1, idx);
    if (t[0] == t[1]) continue;
    Rational y = x * cj[t[1]];
    if (t[0] < t[1])
      r.add(static_cast<uint64_t>(t[0]) * a.dim + t[1], y);
    else
      r.add(static_cast<uint64_t>(t[1]) * a.dim + t[0], -y);
  }
  r.normalize();
  return r;
}

size_t wedge_rank(const FiniteDimAlgebra& a, const std::vector<HochschildChain>& cs) {
  std::vector<QVec> imgs;
  for (const auto& c : cs) imgs.push_back(wedge_image(a, c));
  return exact::rank_of(imgs);
}

Quaternion quat_mul(const Quaternion& x, const Quaternion& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

Quaternion quat_conj(const Quaternion& x) { return {x[0], -x[1], -x[2], -x[3]}; }

Rational quat_norm(const Quaternion& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }

namespace {

// column b: coordinates of x e_b y*
std::array<Quaternion, 4> sandwich(const Quaternion& x, const Quaternion& y) {
  std::array<Quaternion, 4> m;
  Quaternion ys = quat_conj(y);
  for (int b = 0; b < 4; ++b) {
    Quaternion e{0, 0, 0, 0};
    e[b] = 1;
    m[b] = quat_mul(quat_mul(x, e), ys);
  }
  return m;
}

}  // namespace

HochschildChain spin_action(const FiniteDimAlgebra& a, const Quaternion& q1, const Quaternion& q2,
                            const HochschildChain& c) {
  if (!is_quaternion_algebra(a)) fail(ErrorKind::WrongAlgebra, "spin action needs the quaternion algebra");
  if (quat_norm(q1) != 1 || quat_norm(q2) != 1) fail(ErrorKind::NotUnitNorm, "q1 and q2 must have norm 1");
  int n = c.degree;
  std::vector<std::array<Quaternion, 4>> slot;
  if (n == 0) {
    slot.push_back(sandwich(q2, q2));
  } else {
    slot.push_back(sandwich(q1, q2));
    slot.push_back(sandwich(q2, q1));
    for (int s = 2; s <= n; ++s) slot.push_back(sandwich(q1, q1));
  }
  HochschildChain r{n, {}};
  for (const auto& [idx, x] : c.v.e) {
    auto t = index_tuple(4, n, idx);
    std::vector<std::pair<uint64_t, Rational>> acc{{0, x}};
    for (int s = 0; s <= n; ++s) {
      std::vector<std::pair<uint64_t, Rational>> next;
      const Quaternion& col = slot[s][t[s]];
      for (const auto& [pre, cx] : acc)
        for (int k = 0; k < 4; ++k)
          if (sgn(col[k]) != 0) next.push_back({pre * 4 + k, cx * col[k]});
      acc = std::move(next);
    }
    for (const auto& [i, y] : acc) r.v.add(i, y);
  }
  r.v.normalize();
  return r;
}

MinusCheck i2_minus_vs_b2_minus(const FiniteDimAlgebra& h) {
  auto t = [&](const HochschildChain& c) { return tau(h, c); };
  MinusCheck mc;
  auto omega2 = differential_basis(h, 2);
  auto split = eigenspace_split(omega2, t);
  mc.omega_minus = split.minus.size();
  // I_2^- = ker b on Omega_2^-
  std::vector<QVec> imgs;
  for (const auto& m : split.minus) imgs.push_back(bar_boundary(h, m).v);
  std::vector<HochschildChain> cycles;
  for (const auto& k : exact::kernel(imgs)) {
    HochschildChain z{2, {}};
    for (const auto& [j, x] : k.e) z.v.axpy(x, split.minus[j].v);
    cycles.push_back(std::move(z));
  }
  mc.cycles_minus = cycles.size();
  // B_2 = b(Omega_3), then its own minus part
  exact::Echelon ech;
  std::vector<HochschildChain> bd;
  for (const auto& w : differential_basis(h, 3)) {
    auto b = bar_boundary(h, w);
    if (ech.insert(b.v)) bd.push_back(std::move(b));
  }
  auto bsplit = eigenspace_split(bd, t);
  mc.boundaries_minus = bsplit.minus.size();
  mc.equal = same_span(cycles, bsplit.minus);
  return mc;
}

SesAudit ses_audit(const FiniteDimAlgebra& h) {
  if (!is_quaternion_algebra(h)) fail(ErrorKind::WrongAlgebra, "audit runs on the quaternion algebra");
  SesAudit r;
  std::vector<HochschildChain> all;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) all.push_back(make_chain(h, 1, {{{x, y}, Rational(1)}}));
  auto cj = [&](const HochschildChain& c) { return conjugate_tensor(h, c); };
  auto src = eigenspace_split(all, cj).minus;
  r.source_dim = src.size();
  // (eps_0, -eps_1) into H + H at indices k and 4 + k
  std::vector<QVec> imgs;
  for (const auto& c : src) {
    QVec v;
    for (const auto& [idx, x] : c.v.e) {
      auto t = index_tuple(4, 1, idx);
      for (const auto& [k, m] : h.product(t[0], t[1])) v.add(k, x * m);
      for (const auto& [k, m] : h.product(t[1], t[0])) v.add(4 + k, -x * m);
    }
    v.normalize();
    imgs.push_back(std::move(v));
  }
  r.image_dim = exact::rank_of(imgs);
  auto ker = exact::kernel(imgs);
  r.kernel_dim = ker.size();
  ensure(r.kernel_dim + r.image_dim == r.source_dim, "rank-nullity");
  r.target_dim = 6;
  r.image_in_target = true;
  r.image_antidiagonal = true;
  for (const auto& v : imgs) {
    if (sgn(v.at(0)) != 0 || sgn(v.at(4)) != 0) r.image_in_target = false;
    for (uint64_t k = 0; k < 4; ++k)
      if (v.at(4 + k) != -v.at(k)) r.image_antidiagonal = false;
  }
  r.coker_dim = r.image_in_target ? r.target_dim - r.image_dim : 0;
  // I_1 = ker b on Omega_1, then its factorwise minus part
  auto h1 = hochschild_homology(h, 1);
  std::vector<HochschildChain> cycles;
  {
    auto omega = differential_basis(h, 1);
    std::vector<QVec> bi;
    for (const auto& w : omega) bi.push_back(bar_boundary(h, w).v);
    for (const auto& k : exact::kernel(bi)) {
      HochschildChain z{1, {}};
      for (const auto& [j, x] : k.e) z.v.axpy(x, omega[j].v);
      cycles.push_back(std::move(z));
    }
  }
  ensure(cycles.size() == h1.cycles_dim, "cycle count mismatch");
  auto i1m = eigenspace_split(cycles, cj).minus;
  r.i1_minus_dim = i1m.size();
  std::vector<HochschildChain> kc;
  for (const auto& k : ker) {
    HochschildChain z{1, {}};
    for (const auto& [j, x] : k.e) z.v.axpy(x, src[j].v);
    kc.push_back(std::move(z));
  }
  r.kernel_is_i1_minus = same_span(kc, i1m);
  return r;
}

}  // namespace scissors::hochschild
