#include "scissors/homology/span.hpp"

#include <map>

#include "scissors/exact/error.hpp"

namespace scissors::homology {

namespace {

std::string label_of(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// complex on the tuples whose level passes `keep`, faces outside dropped
template <class Keep>
ChainComplex restricted(const SpanComplex& s, Keep keep) {
  int top = s.complex.hi();
  std::vector<std::vector<int>> ids(top + 1);  // position in the restricted basis, -1 if dropped
  std::vector<size_t> ranks(top + 1);
  for (int k = 0; k <= top; ++k) {
    ids[k].assign(s.tuples[k].size(), -1);
    for (size_t i = 0; i < s.tuples[k].size(); ++i)
      if (keep(s.level[k][i])) ids[k][i] = static_cast<int>(ranks[k]++);
  }
  ChainComplex c(0, ranks);
  for (int k = 0; k <= top; ++k) {
    auto& lab = c.labels(k);
    for (size_t i = 0; i < s.tuples[k].size(); ++i)
      if (ids[k][i] >= 0) lab.push_back(label_of(s.tuples[k][i]));
    if (k == 0) continue;
    SparseIntMatrix full = s.complex.boundary(k), d(ranks[k - 1], ranks[k]);
    for (const auto& [rc, v] : full.entries()) {
      int r = ids[k - 1][rc.first], col = ids[k][rc.second];
      if (r >= 0 && col >= 0) d.add(r, col, v);
    }
    c.set_boundary(k, std::move(d));
  }
  c.validate();
  return c;
}

}  // namespace

SpanComplex simplicial_complex_of(const std::vector<geom::Point>& points, int max_degree) {
  if (points.size() > kMaxSpanPoints)
    fail(ErrorKind::TooManyPoints, std::to_string(points.size()) + " points exceed the cap of " +
                                       std::to_string(kMaxSpanPoints));
  if (points.empty()) fail(ErrorKind::ParseError, "empty point set");
  if (max_degree < 0) fail(ErrorKind::DegreeOutOfRange, "negative max degree");
  size_t n = points[0].size();
  if (n < 1 || n > 3) fail(ErrorKind::DimensionMismatch, "points must lie in E^1..E^3");
  for (const auto& p : points)
    if (p.size() != n) fail(ErrorKind::DimensionMismatch, "points of mixed dimension");
  size_t total = 0, layer = 1;
  for (int k = 0; k <= max_degree; ++k) {
    layer *= points.size();
    total += layer;
    if (total > kMaxSpanTuples) fail(ErrorKind::TooManyPoints, "tuple count exceeds " + std::to_string(kMaxSpanTuples));
  }

  SpanComplex s;
  s.points = points;
  std::map<unsigned, int> span_dim;  // by set of point ids used
  auto level_of = [&](const std::vector<int>& t) {
    unsigned mask = 0;
    for (int i : t) mask |= 1u << i;
    auto it = span_dim.find(mask);
    if (it != span_dim.end()) return it->second;
    std::vector<geom::Point> pts;
    for (size_t i = 0; i < points.size(); ++i)
      if (mask >> i & 1) pts.push_back(points[i]);
    int d = geom::affine_dimension(pts);
    span_dim.emplace(mask, d);
    return d;
  };

  size_t np = points.size();
  std::vector<size_t> ranks;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<std::vector<int>> ts;
    std::vector<int> t(k + 1, 0);
    while (true) {
      ts.push_back(t);
      int i = k;
      while (i >= 0 && t[i] == static_cast<int>(np) - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
    std::vector<int> lv;
    for (const auto& x : ts) lv.push_back(level_of(x));
    ranks.push_back(ts.size());
    s.tuples.push_back(std::move(ts));
    s.level.push_back(std::move(lv));
  }
  s.complex = ChainComplex(0, ranks);
  // tuples are in lexicographic order: index = base-np digits
  for (int k = 1; k <= max_degree; ++k) {
    SparseIntMatrix d(ranks[k - 1], ranks[k]);
    for (size_t col = 0; col < s.tuples[k].size(); ++col) {
      const auto& t = s.tuples[k][col];
      for (int i = 0; i <= k; ++i) {
        size_t row = 0;
        for (int j = 0; j <= k; ++j)
          if (j != i) row = row * np + t[j];
        d.add(row, col, (i % 2) ? -1 : 1);
      }
    }
    s.complex.set_boundary(k, std::move(d));
  }
  for (int k = 0; k <= max_degree; ++k)
    for (const auto& t : s.tuples[k]) s.complex.labels(k).push_back(label_of(t));
  s.complex.validate();
  return s;
}

ChainComplex graded_piece(const SpanComplex& s, int p) {
  return restricted(s, [p](int lv) { return lv == p; });
}

ChainComplex filtration_piece(const SpanComplex& s, int p) {
  return restricted(s, [p](int lv) { return lv <= p; });
}

}  // namespace scissors::homology
