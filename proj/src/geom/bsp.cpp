// Exact cell decomposition over facet hyperplanes.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "scissors/exact/error.hpp"
#include "scissors/geom/polytope.hpp"

namespace scissors::geom {

namespace {

struct Plane {
  Point n;
  Real c;  // inner side: n.x - c > 0
};

// hyperplane through d points in E^d, oriented so `inner` is positive
Plane facet_plane(const std::vector<Point>& pts, const Point& inner) {
  size_t d = inner.size();
  Plane h;
  if (d == 1) {
    h.n = Point{Real(1)};
  } else if (d == 2) {
    Point e = pts[1] - pts[0];
    h.n = Point{-e[1], e[0]};
  } else {
    h.n = cross(pts[1] - pts[0], pts[2] - pts[0]);
  }
  h.c = dot(h.n, pts[0]);
  if ((dot(h.n, inner) - h.c).sign() < 0) {
    for (auto& x : h.n) x = -x;
    h.c = -h.c;
  }
  return h;
}

class Refiner {
 public:
  Refiner(const std::vector<WeightedSimplex>& s, size_t cap) : simplices_(s), cap_(cap) {
    dim_ = s.empty() ? 0 : static_cast<int>(s[0].v[0].size());
  }

  bool run(bool (*ok)(long long)) {
    if (simplices_.empty()) return ok(0);
    build_planes();
    std::vector<Item> stack;
    std::vector<int> box;
    auto root = root_cell(box);
    stack.push_back(Item{std::move(root), std::move(box), 0, all_indices()});
    size_t cells = 0;
    while (!stack.empty()) {
      Item it = std::move(stack.back());
      stack.pop_back();
      if (++cells > cap_) fail(ErrorKind::RefinementTooLarge, "cell count exceeds cap " + std::to_string(cap_));
      long long count = it.base;
      std::vector<int> undecided;
      int split_plane = -1;
      for (int si : it.active) {
        int cls = classify(it.cell, si, split_plane);
        if (cls > 0) count += simplices_[si].weight;
        else if (cls == 0) undecided.push_back(si);
      }
      if (undecided.empty()) {
        if (!ok(count)) return false;
        continue;
      }
      // split plane recorded for the first undecided simplex
      split_plane = -1;
      classify(it.cell, undecided[0], split_plane);
      ensure(split_plane >= 0, "refinement lost its splitting plane");
      auto [pos, neg] = split(it.cell, it.planes, split_plane);
      auto planes = it.planes;
      planes.insert(std::upper_bound(planes.begin(), planes.end(), split_plane), split_plane);
      stack.push_back(Item{std::move(neg), planes, count, undecided});
      stack.push_back(Item{std::move(pos), std::move(planes), count, std::move(undecided)});
    }
    return true;
  }

 private:
  struct Item {
    std::vector<int> cell;    // vertex ids
    std::vector<int> planes;  // sorted constraint planes of the cell
    long long base;
    std::vector<int> active;
  };

  const std::vector<WeightedSimplex>& simplices_;
  size_t cap_;
  int dim_;
  std::vector<Plane> planes_;
  std::vector<std::vector<std::pair<int, int>>> facets_;  // per simplex: (plane, orientation)
  std::vector<Point> verts_;
  std::vector<std::vector<int>> tight_;
  std::map<std::pair<int, int>, int> side_memo_;

  std::vector<int> all_indices() const {
    std::vector<int> r(simplices_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
    return r;
  }

  int add_plane(const Plane& h) {
    // canonical key: scale so the first nonzero normal entry is 1
    size_t k = 0;
    while (h.n[k].sign() == 0) ++k;
    Real inv = h.n[k].inverse();
    Point key;
    for (const auto& x : h.n) key.push_back(x * inv);
    key.push_back(h.c * inv);
    auto it = plane_index_.find(key);
    if (it != plane_index_.end()) return it->second;
    Plane canon{Point(key.begin(), key.end() - 1), key.back()};
    int id = static_cast<int>(planes_.size());
    planes_.push_back(canon);
    plane_index_.emplace(key, id);
    return id;
  }
  std::map<Point, int, PointLess> plane_index_;

  void build_planes() {
    facets_.resize(simplices_.size());
    for (size_t si = 0; si < simplices_.size(); ++si) {
      const auto& v = simplices_[si].v;
      if (orient(v) == 0) fail(ErrorKind::InvalidPolytope, "degenerate simplex in refinement");
      for (size_t i = 0; i < v.size(); ++i) {
        std::vector<Point> f;
        for (size_t j = 0; j < v.size(); ++j)
          if (j != i) f.push_back(v[j]);
        Plane h = facet_plane(f, v[i]);
        int id = add_plane(h);
        // orientation of the canonical plane relative to the inner side
        int o = (dot(planes_[id].n, v[i]) - planes_[id].c).sign();
        facets_[si].push_back({id, o});
      }
    }
  }

  std::vector<int> root_cell(std::vector<int>& box_planes) {
    std::vector<Rational> lo(dim_), hi(dim_);
    bool first = true;
    for (const auto& s : simplices_)
      for (const auto& p : s.v)
        for (int k = 0; k < dim_; ++k) {
          double x = p[k].to_double();
          Rational l(std::floor(x) - 1), u(std::ceil(x) + 1);
          if (first || l < lo[k]) lo[k] = l;
          if (first || u > hi[k]) hi[k] = u;
          if (k == dim_ - 1) first = false;
        }
    for (int k = 0; k < dim_; ++k) {
      Point n(dim_);
      n[k] = Real(1);
      box_planes.push_back(add_plane(Plane{n, Real(lo[k])}));
      box_planes.push_back(add_plane(Plane{n, Real(hi[k])}));
    }
    std::vector<int> cell;
    for (int mask = 0; mask < (1 << dim_); ++mask) {
      Point p(dim_);
      std::vector<int> t;
      for (int k = 0; k < dim_; ++k) {
        bool up = mask >> k & 1;
        p[k] = Real(up ? hi[k] : lo[k]);
        t.push_back(box_planes[2 * k + (up ? 1 : 0)]);
      }
      std::sort(t.begin(), t.end());
      cell.push_back(new_vertex(std::move(p), std::move(t)));
    }
    std::sort(box_planes.begin(), box_planes.end());
    return cell;
  }

  int new_vertex(Point p, std::vector<int> tight) {
    verts_.push_back(std::move(p));
    tight_.push_back(std::move(tight));
    return static_cast<int>(verts_.size()) - 1;
  }

  int side(int v, int pid) {
    auto key = std::make_pair(v, pid);
    auto it = side_memo_.find(key);
    if (it != side_memo_.end()) return it->second;
    int s = (dot(planes_[pid].n, verts_[v]) - planes_[pid].c).sign();
    side_memo_.emplace(key, s);
    if (s == 0) {
      auto& t = tight_[v];
      if (!std::binary_search(t.begin(), t.end(), pid)) t.insert(std::upper_bound(t.begin(), t.end(), pid), pid);
    }
    return s;
  }

  // +1 cell inside simplex, -1 outside, 0 straddles (split_plane set)
  int classify(const std::vector<int>& cell, int si, int& split_plane) {
    bool inside = true;
    int straddle = -1;
    for (auto [pid, o] : facets_[si]) {
      bool pos = false, neg = false;
      for (int v : cell) {
        int s = side(v, pid) * o;
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (!pos) return -1;
      if (neg) {
        inside = false;
        if (straddle < 0) straddle = pid;
      }
    }
    if (inside) return 1;
    split_plane = straddle;
    return 0;
  }

  // Two vertices span an edge iff they share d-1 of the cell's own
  // constraint planes (every constraint plane supports the cell).
  static std::vector<int> common(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& planes) {
    std::vector<int> ab, r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    std::set_intersection(ab.begin(), ab.end(), planes.begin(), planes.end(), std::back_inserter(r));
    return r;
  }

  std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& cell, const std::vector<int>& planes,
                                                      int pid) {
    std::vector<int> pos, neg, up, down;
    for (int v : cell) {
      int s = side(v, pid);
      if (s >= 0) pos.push_back(v);
      if (s <= 0) neg.push_back(v);
      if (s > 0) up.push_back(v);
      if (s < 0) down.push_back(v);
    }
    const Plane& h = planes_[pid];
    for (int u : up)
      for (int w : down) {
        std::vector<int> tt = common(tight_[u], tight_[w], planes);
        if (tt.size() + 1 < static_cast<size_t>(dim_)) continue;
        Point d = verts_[w] - verts_[u];
        Real t = (h.c - dot(h.n, verts_[u])) / dot(h.n, d);
        tt.insert(std::upper_bound(tt.begin(), tt.end(), pid), pid);
        int id = new_vertex(verts_[u] + scale(d, t), std::move(tt));
        side_memo_.emplace(std::make_pair(id, pid), 0);
        pos.push_back(id);
        neg.push_back(id);
      }
    return {pos, neg};
  }
};

}  // namespace

size_t default_cell_cap() {
  if (const char* env = std::getenv("SCISSORS_CELL_CAP")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 200000;
}

bool refine_and_check(const std::vector<WeightedSimplex>& simplices, bool (*ok)(long long), size_t cell_cap) {
  Refiner r(simplices, cell_cap ? cell_cap : default_cell_cap());
  return r.run(ok);
}

long long signed_indicator(const SimplexChain& c, const Point& x) {
  long long total = 0;
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() != x.size() + 1) fail(ErrorKind::DimensionMismatch, "indicator needs top-dimensional simplices");
    int o = orient(s);
    if (o == 0) continue;
    bool outside = false, on_face = false;
    for (size_t i = 0; i < s.size() && !outside; ++i) {
      auto t = s;
      t[i] = x;
      int oi = orient(t);
      if (oi == -o) outside = true;
      else if (oi == 0) on_face = true;
    }
    if (outside) continue;
    if (on_face) fail(ErrorKind::PointOnBoundary, "sample point lies on a simplex boundary");
    total += coeff * o;
  }
  return total;
}

namespace {
bool is_zero_count(long long c) { return c == 0; }
}  // namespace

bool chain_vanishes(const SimplexChain& c) {
  std::vector<WeightedSimplex> ws;
  for (const auto& [s, coeff] : c.terms()) {
    int o = orient(s);
    if (o == 0) continue;
    ws.push_back({coeff * o, s});
  }
  return refine_and_check(ws, is_zero_count);
}

bool verify_dissection(const Polytope& whole, const std::vector<Polytope>& parts) {
  Real vol = whole.volume();
  for (const auto& p : parts) {
    if (p.dim != whole.dim) fail(ErrorKind::DimensionMismatch, "dissection parts in different dimensions");
    vol -= p.volume();
  }
  if (vol.sign() != 0) return false;
  SimplexChain c = whole.chain();
  for (const auto& p : parts) c -= p.chain();
  return chain_vanishes(c);
}

bool phi_boundary_check(const std::vector<Point>& points) {
  if (points.empty() || points.size() != points[0].size() + 2)
    fail(ErrorKind::DimensionMismatch, "need n+2 points in E^n");
  std::vector<WeightedSimplex> ws;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> f;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) f.push_back(points[j]);
    int eps = orient(f);
    if (eps == 0) continue;  // lower-dimensional hull
    ws.push_back({((i % 2) ? -1 : 1) * eps, std::move(f)});
  }
  return refine_and_check(ws, is_zero_count);
}

}  // namespace scissors::geom
