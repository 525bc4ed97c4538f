#include "scissors/geom/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scissors/exact/error.hpp"

namespace scissors::geom {

SimplexChain Polytope::chain() const {
  SimplexChain c(dim);
  for (size_t i = 0; i < cells.size(); ++i) c.add(cell_points(i), 1);
  return c;
}

std::vector<Point> Polytope::cell_points(size_t i) const {
  std::vector<Point> pts;
  for (int idx : cells[i]) pts.push_back(vertices[idx]);
  return pts;
}

Real Polytope::volume() const {
  Real v;
  for (size_t i = 0; i < cells.size(); ++i) v += simplex_volume(Simplex{dim, cell_points(i)});
  return v;
}

namespace {

// parity of the permutation sorting `t`
int sort_with_parity(std::vector<int>& t) {
  int parity = 1;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j + 1 < t.size() - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        parity = -parity;
      }
  return parity;
}

struct FaceUse {
  std::vector<int> oriented;
  int sign;  // parity relative to sorted key
};

std::map<std::vector<int>, std::vector<FaceUse>> face_table(const std::vector<std::vector<int>>& cells) {
  std::map<std::vector<int>, std::vector<FaceUse>> table;
  for (const auto& cell : cells) {
    for (size_t i = 0; i < cell.size(); ++i) {
      std::vector<int> f;
      for (size_t j = 0; j < cell.size(); ++j)
        if (j != i) f.push_back(cell[j]);
      // induced orientation (-1)^i; realize a negative sign by swapping two entries
      if (i % 2 && f.size() >= 2) std::swap(f[0], f[1]);
      std::vector<int> key = f;
      int par = sort_with_parity(key);
      if (i % 2 && f.size() < 2) par = -par;
      table[key].push_back(FaceUse{f, par});
    }
  }
  return table;
}

void check_manifold(int dim, const std::vector<std::vector<int>>& facets) {
  if (dim < 2) return;
  std::map<std::vector<int>, std::vector<int>> ridges;
  for (const auto& f : facets) {
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<int> r;
      for (size_t j = 0; j < f.size(); ++j)
        if (j != i) r.push_back(f[j]);
      int s = (i % 2) ? -1 : 1;
      s *= sort_with_parity(r);
      ridges[r].push_back(s);
    }
  }
  for (const auto& [r, signs] : ridges) {
    if (signs.size() != 2) fail(ErrorKind::NonManifoldBoundary, "boundary ridge shared by " + std::to_string(signs.size()) + " facets");
    if (signs[0] == signs[1]) fail(ErrorKind::UnorientableBoundary, "boundary facets induce equal orientation on a ridge");
  }
}

bool zero_or_one(long long c) { return c == 0 || c == 1; }

// audit point strictly inside cell i, trying several barycentric weightings
bool audit_cell(const Polytope& p, const SimplexChain& chain, size_t i) {
  auto pts = p.cell_points(i);
  static const int weights[][4] = {{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 5, 3, 7}, {7, 1, 5, 2}, {1, 1, 1, 1}};
  for (const auto& w : weights) {
    Point x(p.dim);
    long tot = 0;
    for (size_t k = 0; k < pts.size(); ++k) {
      x = x + scale(pts[k], Real(w[k]));
      tot += w[k];
    }
    x = scale(x, Real(Rational(1, tot)));
    try {
      return signed_indicator(chain, x) == 1;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PointOnBoundary) throw;
    }
  }
  return true;  // inconclusive sample; face matching already passed
}

}  // namespace

Polytope make_polytope(int dim, std::vector<Point> vertices, std::vector<std::vector<int>> cells, std::string name,
                       Validation mode) {
  if (dim < 1 || dim > 3) fail(ErrorKind::DimensionMismatch, "ambient dimension must be 1, 2 or 3");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim) fail(ErrorKind::DimensionMismatch, "vertex has wrong coordinate count");
  if (cells.empty()) fail(ErrorKind::InvalidPolytope, "no cells");

  Polytope p;
  p.dim = dim;
  p.name = std::move(name);
  std::map<Point, int, PointLess> index;
  std::vector<int> remap(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    auto [it, fresh] = index.emplace(vertices[i], static_cast<int>(p.vertices.size()));
    if (fresh) p.vertices.push_back(vertices[i]);
    remap[i] = it->second;
  }
  if (p.vertices.size() != vertices.size()) p.warnings.push_back("merged duplicate vertices");

  std::set<std::vector<int>> seen;
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    auto cell = cells[ci];
    if (static_cast<int>(cell.size()) != dim + 1) fail(ErrorKind::DimensionMismatch, "cell is not top-dimensional");
    for (int& k : cell) {
      if (k < 0 || k >= static_cast<int>(vertices.size())) fail(ErrorKind::IndexOutOfRange, "cell vertex index");
      k = remap[k];
    }
    std::vector<Point> pts;
    for (int k : cell) pts.push_back(p.vertices[k]);
    int o = orient(pts);
    if (o == 0) fail(ErrorKind::InvalidPolytope, "degenerate cell " + std::to_string(ci));
    if (o < 0) {
      std::swap(cell[0], cell[1]);
      p.warnings.push_back("reoriented cell " + std::to_string(ci));
    }
    auto key = cell;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) fail(ErrorKind::InvalidPolytope, "repeated cell " + std::to_string(ci));
    p.cells.push_back(cell);
  }

  // face matching: interior faces pair up with opposite orientation
  for (const auto& [key, uses] : face_table(p.cells)) {
    if (uses.size() > 2) fail(ErrorKind::InvalidPolytope, "face shared by more than two cells");
    if (uses.size() == 2 && uses[0].sign == uses[1].sign)
      fail(ErrorKind::InvalidPolytope, "overlapping cells on a shared face");
  }
  check_manifold(dim, boundary_facets(p));

  if (dim <= 2 || mode == Validation::Strict) {
    std::vector<WeightedSimplex> ws;
    for (size_t i = 0; i < p.cells.size(); ++i) ws.push_back({1, p.cell_points(i)});
    if (!refine_and_check(ws, zero_or_one)) fail(ErrorKind::InvalidPolytope, "cell interiors overlap");
  } else {
    SimplexChain c = p.chain();
    for (size_t i = 0; i < p.cells.size(); ++i)
      if (!audit_cell(p, c, i)) fail(ErrorKind::InvalidPolytope, "cell interiors overlap (sample audit)");
  }
  return p;
}

std::vector<std::vector<int>> boundary_facets(const Polytope& p) {
  std::vector<std::vector<int>> out;
  for (const auto& [key, uses] : face_table(p.cells)) {
    if (uses.size() == 2 && uses[0].sign != uses[1].sign) continue;
    for (const auto& u : uses) {
      if (p.dim == 1) {
        // a 0-face carries its sign only through the key parity
        if (u.sign < 0) continue;
      }
      out.push_back(u.oriented);
    }
  }
  return out;
}

}  // namespace scissors::geom
