#include "scissors/geom/construct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "scissors/exact/error.hpp"

namespace scissors::geom {

namespace {
// constructors emit positive cells so no reorientation warnings appear
std::vector<std::vector<int>> oriented(const std::vector<Point>& v, std::vector<std::vector<int>> cells) {
  for (auto& c : cells) {
    std::vector<Point> pts;
    for (int k : c) pts.push_back(v[k]);
    if (orient(pts) < 0) std::swap(c[0], c[1]);
  }
  return cells;
}
}  // namespace

Polytope box(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Point> v;
  for (int m = 0; m < 8; ++m)
    v.push_back(Point{Real((m & 1) ? a : Rational(0)), Real((m & 2) ? b : Rational(0)),
                      Real((m & 4) ? c : Rational(0))});
  std::vector<std::vector<int>> cells;
  std::array<int, 3> perm{0, 1, 2};
  do {
    int cur = 0;
    std::vector<int> cell{0};
    for (int k : perm) {
      cur |= 1 << k;
      cell.push_back(cur);
    }
    cells.push_back(cell);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_polytope(3, v, oriented(v, cells), "box");
}

Polytope regular_tetrahedron(const Real& s) {
  Real m = -s;
  std::vector<Point> v{{s, s, s}, {s, m, m}, {m, s, m}, {m, m, s}};
  return make_polytope(3, v, oriented(v, {{0, 1, 2, 3}}), "regular tetrahedron");
}

Polytope regular_tetrahedron_edge1() {
  auto p = regular_tetrahedron(Real(Rational(1, 8)).sqrt());
  p.name = "regular tetrahedron (edge 1)";
  return p;
}

Polytope regular_tetrahedron_unit_volume() {
  // (8/3) s^3 = 1
  Real s = Real::make(exact::ZPoly{-3, 0, 0, 8}, Rational(7, 10), Rational(3, 4));
  auto p = regular_tetrahedron(s);
  p.name = "regular tetrahedron (volume 1)";
  return p;
}

Polytope regular_octahedron_edge1() {
  Real a = Real(Rational(1, 2)).sqrt();
  std::vector<Point> v{{Real(0), Real(0), Real(0)}};
  for (int k = 0; k < 3; ++k)
    for (int sgn : {1, -1}) {
      Point p(3);
      p[k] = sgn > 0 ? a : -a;
      v.push_back(p);
    }
  // vertex 1+2k+(0|1) is +/- axis k
  std::vector<std::vector<int>> cells;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz) cells.push_back({0, 1 + sx, 3 + sy, 5 + sz});
  return make_polytope(3, v, oriented(v, cells), "regular octahedron (edge 1)");
}

Polytope regular_hexagon() {
  Real h = Real(Rational(3, 4)).sqrt();
  Real half(Rational(1, 2));
  std::vector<Point> v{{Real(1), Real(0)}, {half, h}, {-half, h}, {Real(-1), Real(0)}, {-half, -h}, {half, -h}};
  return convex_polygon(v, "regular hexagon");
}

namespace {

int turn2(const Point& a, const Point& b, const Point& c) { return orient({a, b, c}); }

// strict convex hull in the plane, counter-clockwise from the least point
std::vector<Point> hull2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), PointLess());
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a == b; }), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h;
  for (int pass = 0; pass < 2; ++pass) {
    size_t base = h.size();
    for (const auto& p : pts) {
      while (h.size() >= base + 2 && turn2(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
      h.push_back(p);
    }
    h.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return h;
}

int turn3(const Point& a, const Point& b, const Point& c, const Point& n) {
  return dot(cross(b - a, c - a), n).sign();
}

// strict convex polygon of coplanar points, counter-clockwise about n
std::vector<int> facet_cycle(const std::vector<Point>& pts, std::vector<int> ids, const Point& n) {
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return PointLess()(pts[a], pts[b]); });
  int m = ids[0];
  std::vector<int> rest(ids.begin() + 1, ids.end());
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    int t = turn3(pts[m], pts[a], pts[b], n);
    if (t != 0) return t > 0;
    Point da = pts[a] - pts[m], db = pts[b] - pts[m];
    return compare(dot(da, da), dot(db, db)) < 0;
  });
  std::vector<int> h{m};
  for (int p : rest) {
    while (h.size() >= 2 && turn3(pts[h[h.size() - 2]], pts[h.back()], pts[p], n) <= 0) h.pop_back();
    h.push_back(p);
  }
  while (h.size() >= 3 && turn3(pts[h[h.size() - 2]], pts[h.back()], pts[m], n) <= 0) h.pop_back();
  return h;
}

}  // namespace

Polytope convex_polygon(const std::vector<Point>& pts, std::string name) {
  auto h = hull2(pts);
  if (h.size() < 3) fail(ErrorKind::InvalidPolytope, "polygon hull is degenerate");
  std::vector<std::vector<int>> cells;
  for (size_t i = 1; i + 1 < h.size(); ++i) cells.push_back({0, static_cast<int>(i), static_cast<int>(i + 1)});
  return make_polytope(2, h, cells, std::move(name));
}

Polytope convex_polytope(const std::vector<Point>& input, std::string name) {
  std::vector<Point> pts = input;
  std::sort(pts.begin(), pts.end(), PointLess());
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a == b; }), pts.end());
  int n = static_cast<int>(pts.size());
  if (affine_dimension(pts) < 3) fail(ErrorKind::InvalidPolytope, "point set is not full-dimensional");

  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Point>> facets;  // cycle, outward normal
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Point nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (std::all_of(nrm.begin(), nrm.end(), [](const Real& x) { return x.sign() == 0; })) continue;
        bool pos = false, neg = false;
        std::vector<int> on;
        for (int l = 0; l < n; ++l) {
          int s = dot(nrm, pts[l] - pts[i]).sign();
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else on.push_back(l);
          if (pos && neg) break;
        }
        if (pos && neg) continue;
        if (!seen.insert(on).second) continue;
        if (pos) nrm = scale(nrm, Real(-1));
        facets.push_back({facet_cycle(pts, on, nrm), nrm});
      }

  // polytope vertices are the extreme points of the facets
  std::set<int> extreme;
  for (const auto& f : facets) extreme.insert(f.first.begin(), f.first.end());
  int apex = *extreme.begin();  // points sorted, so this is the least vertex
  std::vector<std::vector<int>> cells;
  for (const auto& [cyc, nrm] : facets) {
    if (std::find(cyc.begin(), cyc.end(), apex) != cyc.end()) continue;
    // cycle starts at the facet's least point
    for (size_t t = 1; t + 1 < cyc.size(); ++t) cells.push_back({apex, cyc[0], cyc[t], cyc[t + 1]});
  }
  std::map<int, int> compact;
  std::vector<Point> used;
  for (int e : extreme) {
    compact[e] = static_cast<int>(used.size());
    used.push_back(pts[e]);
  }
  for (auto& cell : cells)
    for (int& k : cell) k = compact.at(k);
  return make_polytope(3, used, oriented(used, cells), std::move(name));
}

Polytope prism(const Polytope& polygon, const Real& height) {
  if (polygon.dim != 2) fail(ErrorKind::DimensionMismatch, "prism needs a polygon");
  int n = static_cast<int>(polygon.vertices.size());
  std::vector<Point> v;
  for (const auto& p : polygon.vertices) v.push_back(Point{p[0], p[1], Real(0)});
  for (const auto& p : polygon.vertices) v.push_back(Point{p[0], p[1], height});
  std::vector<std::vector<int>> cells;
  for (auto tri : polygon.cells) {
    std::sort(tri.begin(), tri.end());
    int i = tri[0], j = tri[1], k = tri[2];
    cells.push_back({i, j, k, k + n});
    cells.push_back({i, j, j + n, k + n});
    cells.push_back({i, i + n, j + n, k + n});
  }
  return make_polytope(3, v, oriented(v, cells), polygon.name.empty() ? "prism" : "prism over " + polygon.name);
}

Polytope transform(const Polytope& p, const std::vector<std::vector<Real>>& m, const Point& t) {
  std::vector<Point> v;
  for (const auto& x : p.vertices) {
    Point y(p.dim);
    for (int r = 0; r < p.dim; ++r) {
      Real s = t[r];
      for (int c = 0; c < p.dim; ++c) s += m[r][c] * x[c];
      y[r] = s;
    }
    v.push_back(y);
  }
  return make_polytope(p.dim, v, p.cells, p.name);
}

std::pair<std::vector<Point>, std::vector<Point>> split_points(const std::vector<Point>& pts, const Point& n,
                                                                const Real& c) {
  std::vector<Point> pos, neg;
  std::vector<int> side;
  for (const auto& p : pts) {
    int s = (dot(n, p) - c).sign();
    side.push_back(s);
    if (s >= 0) pos.push_back(p);
    if (s <= 0) neg.push_back(p);
  }
  // every crossing segment; non-extreme crossings fall inside the hull
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      if (side[i] <= 0 || side[j] >= 0) continue;
      Point d = pts[j] - pts[i];
      Real t = (c - dot(n, pts[i])) / dot(n, d);
      Point x = pts[i] + scale(d, t);
      pos.push_back(x);
      neg.push_back(x);
    }
  return {pos, neg};
}

Polytope random_rational_polygon(Rng& rng) {
  for (;;) {
    int k = static_cast<int>(rng.uniform(3, 8));
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back(Point{Real(rng.rational(12, 3)), Real(rng.rational(12, 3))});
    auto h = hull2(pts);
    if (h.size() >= 3) return convex_polygon(h, "random polygon");
  }
}

PlaneSplit random_plane_split(Rng& rng, bool tetrahedron) {
  for (;;) {
    std::vector<Point> body;
    if (tetrahedron) {
      for (int i = 0; i < 4; ++i)
        body.push_back(Point{Real(rng.rational(6, 2)), Real(rng.rational(6, 2)), Real(rng.rational(6, 2))});
      if (affine_dimension(body) < 3) continue;
    } else {
      Rational a(rng.uniform(1, 4)), b(rng.uniform(1, 4)), c(rng.uniform(1, 4));
      for (int m = 0; m < 8; ++m)
        body.push_back(Point{Real((m & 1) ? a : Rational(0)), Real((m & 2) ? b : Rational(0)),
                             Real((m & 4) ? c : Rational(0))});
    }
    Point n{Real(rng.uniform(-3, 3)), Real(rng.uniform(-3, 3)), Real(rng.uniform(-3, 3))};
    if (dot(n, n).sign() == 0) continue;
    // plane through a strictly interior point: positive barycentric weights
    Point x(3);
    long tot = 0;
    for (const auto& p : body) {
      long w = static_cast<long>(rng.uniform(1, 5));
      x = x + scale(p, Real(w));
      tot += w;
    }
    x = scale(x, Real(Rational(1, tot)));
    Real c = dot(n, x);
    auto [pos, neg] = split_points(body, n, c);
    PlaneSplit s{convex_polytope(body, tetrahedron ? "tetrahedron" : "box"), convex_polytope(pos, "upper part"),
                 convex_polytope(neg, "lower part"), n, c};
    return s;
  }
}

}  // namespace scissors::geom
