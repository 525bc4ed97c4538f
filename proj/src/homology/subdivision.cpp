#include "scissors/homology/subdivision.hpp"

#include <map>

#include "scissors/exact/error.hpp"

namespace scissors::homology {

namespace {

using Tuple = std::vector<Point>;
using Memo = std::map<Tuple, SimplexChain, geom::TupleLess>;

SimplexChain single(int dim, const Tuple& t) {
  SimplexChain c(dim);
  c.add(t, 1);
  return c;
}

SimplexChain faces(int dim, const Tuple& t) { return geom::boundary(single(dim, t)); }

void add_scaled(SimplexChain& acc, const SimplexChain& x, long long k) {
  for (const auto& [t, c] : x.terms()) acc.add(t, c * k);
}

const SimplexChain& sd_tuple(int dim, const Tuple& t, Memo& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  SimplexChain r(dim);
  if (t.size() == 1) {
    r.add(t, 1);
  } else {
    SimplexChain inner(dim), fs = faces(dim, t);
    for (const auto& [f, c] : fs.terms()) add_scaled(inner, sd_tuple(dim, f, memo), c);
    r = cone(geom::barycenter(t), inner);
  }
  return memo.emplace(t, std::move(r)).first->second;
}

const SimplexChain& T_tuple(int dim, const Tuple& t, Memo& sd_memo, Memo& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  SimplexChain r(dim);
  if (t.size() > 1) {
    SimplexChain x = sd_tuple(dim, t, sd_memo);
    x.add(t, -1);
    SimplexChain fs = faces(dim, t);
    for (const auto& [f, c] : fs.terms()) add_scaled(x, T_tuple(dim, f, sd_memo, memo), -c);
    r = cone(geom::barycenter(t), x);
  }
  return memo.emplace(t, std::move(r)).first->second;
}

}  // namespace

SimplexChain cone(const Point& apex, const SimplexChain& c) {
  SimplexChain r(c.dim());
  for (const auto& [t, k] : c.terms()) {
    Tuple u;
    u.reserve(t.size() + 1);
    u.push_back(apex);
    u.insert(u.end(), t.begin(), t.end());
    r.add(u, k);
  }
  return r;
}

SimplexChain barycentric_sd(const SimplexChain& c) {
  Memo memo;
  SimplexChain r(c.dim());
  for (const auto& [t, k] : c.terms()) add_scaled(r, sd_tuple(c.dim(), t, memo), k);
  return r;
}

SimplexChain sd_power(const SimplexChain& c, int rounds) {
  if (rounds < 0) fail(ErrorKind::DegreeOutOfRange, "negative subdivision count");
  SimplexChain r = c;
  for (int i = 0; i < rounds; ++i) r = barycentric_sd(r);
  return r;
}

SimplexChain subdivision_homotopy(const SimplexChain& c, int rounds) {
  if (rounds < 0) fail(ErrorKind::DegreeOutOfRange, "negative subdivision count");
  Memo sd_memo, t_memo;
  SimplexChain t(c.dim());
  for (const auto& [tu, k] : c.terms()) add_scaled(t, T_tuple(c.dim(), tu, sd_memo, t_memo), k);
  SimplexChain h(c.dim()), layer = t;
  for (int j = 0; j < rounds; ++j) {
    h += layer;
    if (j + 1 < rounds) layer = barycentric_sd(layer);
  }
  return h;
}

SimplexChain subdivision_homotopy(const std::vector<Point>& simplex, int rounds) {
  if (simplex.empty()) fail(ErrorKind::DimensionMismatch, "empty simplex");
  return subdivision_homotopy(single(static_cast<int>(simplex[0].size()), simplex), rounds);
}

bool check_subdivision_homotopy(const std::vector<Point>& simplex, int rounds) {
  int dim = static_cast<int>(simplex[0].size());
  SimplexChain s = single(dim, simplex);
  SimplexChain lhs = geom::boundary(subdivision_homotopy(s, rounds)) + subdivision_homotopy(geom::boundary(s), rounds);
  SimplexChain rhs = sd_power(s, rounds) - s;
  return lhs == rhs;
}

SimplexChain push_forward(const SimplexChain& c, const VertexMap& f) {
  SimplexChain r(c.dim());
  for (const auto& [t, k] : c.terms()) {
    Tuple u;
    for (const auto& p : t) u.push_back(f(p));
    r.add(u, k);
  }
  return r;
}

SimplexChain prism_homotopy(const SimplexChain& c, const VertexMap& f) {
  SimplexChain r(c.dim());
  for (const auto& [t, k] : c.terms()) {
    Tuple img;
    for (const auto& p : t) img.push_back(f(p));
    for (size_t i = 0; i < t.size(); ++i) {
      Tuple u(t.begin(), t.begin() + i + 1);
      u.insert(u.end(), img.begin() + i, img.end());
      r.add(u, (i % 2) ? -k : k);
    }
  }
  return r;
}

}  // namespace scissors::homology
