#include "scissors/homology/flags.hpp"

#include <algorithm>

#include "scissors/exact/error.hpp"

namespace scissors::homology {

namespace {

constexpr size_t kMaxFlagPoints = 8;
constexpr size_t kMaxFlagBasis = 100000;

std::vector<geom::Point> subset(const std::vector<geom::Point>& pts, unsigned mask) {
  std::vector<geom::Point> r;
  for (size_t i = 0; i < pts.size(); ++i)
    if (mask >> i & 1) r.push_back(pts[i]);
  return r;
}

unsigned mask_of(const std::vector<int>& t) {
  unsigned m = 0;
  for (int i : t) m |= 1u << i;
  return m;
}

bool proper_subset(unsigned a, unsigned b) { return a != b && (a & b) == a; }

// all tuples of length k + 1 over the ids in `mask`
std::vector<std::vector<int>> tuples_in(unsigned mask, size_t npts, int k) {
  std::vector<int> ids;
  for (size_t i = 0; i < npts; ++i)
    if (mask >> i & 1) ids.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  if (ids.empty()) return out;
  std::vector<size_t> pos(k + 1, 0);
  while (true) {
    std::vector<int> t;
    for (size_t p : pos) t.push_back(ids[p]);
    out.push_back(std::move(t));
    int i = k;
    while (i >= 0 && pos[i] + 1 == ids.size()) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return out;
}

using Key = std::pair<int, std::vector<int>>;

std::map<Key, size_t> index_of(const std::vector<Key>& b) {
  std::map<Key, size_t> m;
  for (size_t i = 0; i < b.size(); ++i) m.emplace(b[i], i);
  return m;
}

}  // namespace

FlagComplex flag_double_complex(const std::vector<geom::Point>& points, int p_max, int q_max, const FlagOptions& opt) {
  if (points.empty()) fail(ErrorKind::ParseError, "empty configuration");
  if (points.size() > kMaxFlagPoints)
    fail(ErrorKind::TooManyPoints, std::to_string(points.size()) + " points exceed the cap of " +
                                       std::to_string(kMaxFlagPoints));
  if (p_max < 0 || q_max < 0) fail(ErrorKind::DegreeOutOfRange, "negative degree bound");
  FlagComplex fc;
  fc.points = points;
  fc.n = static_cast<int>(points[0].size());
  fc.p_max = p_max;
  fc.q_max = q_max;
  size_t np = points.size();
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != fc.n) fail(ErrorKind::DimensionMismatch, "points of mixed dimension");
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j)
      if (!geom::PointLess{}(points[i], points[j]) && !geom::PointLess{}(points[j], points[i]))
        fail(ErrorKind::ParseError, "repeated point in configuration");

  // span closure of a subset: every point lying in its affine span
  std::map<unsigned, std::pair<unsigned, int>> closure;
  auto close = [&](unsigned s) {
    auto it = closure.find(s);
    if (it != closure.end()) return it->second;
    int d = geom::affine_dimension(subset(points, s));
    unsigned m = s;
    for (size_t i = 0; i < np; ++i)
      if (!(s >> i & 1) && geom::affine_dimension(subset(points, s | 1u << i)) == d) m |= 1u << i;
    return closure.emplace(s, std::make_pair(m, d)).first->second;
  };

  std::vector<unsigned> seeds;
  if (opt.pool_masks) {
    seeds = *opt.pool_masks;
  } else {
    for (unsigned s = 1; s < (1u << np); ++s) seeds.push_back(s);
  }
  for (unsigned s : seeds) {
    if (s == 0 || s >= (1u << np)) fail(ErrorKind::IndexOutOfRange, "pool subset out of range");
    auto [m, d] = close(s);
    if (d >= fc.n || fc.pool_index.count(m)) continue;
    fc.pool_index.emplace(m, static_cast<int>(fc.pool.size()));
    fc.pool.push_back({m, d});
    if (fc.pool.size() > kMaxPool)
      fail(ErrorKind::PoolExplosion, "subspace pool exceeds " + std::to_string(kMaxPool));
  }

  // strict flags U_0 > U_1 > ... > U_p
  fc.flags.assign(p_max + 1, {});
  for (size_t i = 0; i < fc.pool.size(); ++i) fc.flags[0].push_back({static_cast<int>(i)});
  for (int p = 1; p <= p_max; ++p)
    for (const auto& f : fc.flags[p - 1])
      for (size_t i = 0; i < fc.pool.size(); ++i)
        if (proper_subset(fc.pool[i].mask, fc.pool[f.back()].mask)) {
          auto g = f;
          g.push_back(static_cast<int>(i));
          fc.flags[p].push_back(std::move(g));
        }
  std::vector<std::map<std::vector<int>, int>> flag_id(p_max + 1);
  for (int p = 0; p <= p_max; ++p)
    for (size_t i = 0; i < fc.flags[p].size(); ++i) flag_id[p][fc.flags[p][i]] = static_cast<int>(i);

  size_t total = 0;
  for (int q = 0; q <= q_max; ++q) {
    auto& b = fc.basis[{-1, q}];
    for (auto& t : tuples_in((1u << np) - 1, np, q)) {
      auto [m, d] = close(mask_of(t));
      (void)m;
      if (d < fc.n) b.emplace_back(-1, std::move(t));
    }
    total += b.size();
    for (int p = 0; p <= p_max; ++p) {
      auto& bp = fc.basis[{p, q}];
      for (size_t f = 0; f < fc.flags[p].size(); ++f)
        for (auto& t : tuples_in(fc.pool[fc.flags[p][f].back()].mask, np, q))
          bp.emplace_back(static_cast<int>(f), std::move(t));
      total += bp.size();
    }
    if (total > kMaxFlagBasis) fail(ErrorKind::TooManyPoints, "flag complex basis exceeds " + std::to_string(kMaxFlagBasis));
  }

  for (const auto& [pq, b] : fc.basis) fc.dc.set_rank(pq.first, pq.second, b.size());
  for (int q = 0; q <= q_max; ++q)
    for (int p = -1; p <= p_max; ++p) {
      const auto& src = fc.basis[{p, q}];
      // vertical: (-1)^p d inside the same flag
      if (q > 0) {
        auto idx = index_of(fc.basis[{p, q - 1}]);
        SparseIntMatrix v(idx.size(), src.size());
        long sign = (p % 2 == 0) ? 1 : -1;
        for (size_t c = 0; c < src.size(); ++c) {
          const auto& [f, t] = src[c];
          for (size_t i = 0; i < t.size(); ++i) {
            auto face = t;
            face.erase(face.begin() + i);
            v.add(idx.at({f, face}), c, (i % 2 ? -1 : 1) * sign);
          }
        }
        fc.dc.set_v(p, q, std::move(v));
      }
      if (p < 0) continue;
      auto idx = index_of(fc.basis[{p - 1, q}]);
      SparseIntMatrix h(idx.size(), src.size());
      long corrupt = (opt.corrupt_column && *opt.corrupt_column == p) ? -1 : 1;
      for (size_t c = 0; c < src.size(); ++c) {
        const auto& [f, t] = src[c];
        if (p == 0) {
          h.add(idx.at({-1, t}), c, corrupt);
          continue;
        }
        const auto& flag = fc.flags[p][f];
        for (int i = 0; i <= p; ++i) {
          auto g = flag;
          g.erase(g.begin() + i);
          h.add(idx.at({flag_id[p - 1].at(g), t}), c, (i % 2 ? -1 : 1) * corrupt);
        }
      }
      fc.dc.set_h(p, q, std::move(h));
    }
  fc.dc.validate();
  return fc;
}

SparseIntMatrix flag_homotopy(const FlagComplex& fc, int p, int q) {
  const auto& src = fc.basis.at({p, q});
  const auto& dst = fc.basis.at({p + 1, q});
  auto idx = index_of(dst);
  std::map<std::vector<int>, int> next_id;
  for (size_t i = 0; i < fc.flags[p + 1].size(); ++i) next_id[fc.flags[p + 1][i]] = static_cast<int>(i);
  SparseIntMatrix s(dst.size(), src.size());
  long sign = ((p + 1) % 2 == 0) ? 1 : -1;
  for (size_t c = 0; c < src.size(); ++c) {
    const auto& [f, t] = src[c];
    unsigned m = mask_of(t);
    // span of the tuple, via the pool entry containing exactly its closure
    int span = -1;
    for (size_t i = 0; i < fc.pool.size() && span < 0; ++i) {
      if ((fc.pool[i].mask & m) != m) continue;
      std::vector<geom::Point> pts;
      for (int id : t) pts.push_back(fc.points[id]);
      if (geom::affine_dimension(pts) == fc.pool[i].dim) span = static_cast<int>(i);
    }
    if (span < 0) fail(ErrorKind::SpanMissingFromPool, "span of a simplex is not in the subspace pool");
    std::vector<int> g;
    if (p >= 0) {
      g = fc.flags[p][f];
      if (fc.pool[g.back()].mask == fc.pool[span].mask) continue;  // degenerate flag
    }
    g.push_back(span);
    s.add(idx.at({next_id.at(g), t}), c, sign);
  }
  return s;
}

bool verify_flag_nullhomotopy(const FlagComplex& fc) {
  for (int q = 0; q <= fc.q_max; ++q)
    for (int p = -1; p < fc.p_max; ++p) {
      size_t r = fc.dc.rank(p, q);
      SparseIntMatrix lhs = fc.dc.h(p + 1, q) * flag_homotopy(fc, p, q);
      if (p >= 0) lhs = lhs + flag_homotopy(fc, p - 1, q) * fc.dc.h(p, q);
      if (!(lhs == SparseIntMatrix::identity(r))) return false;
    }
  return true;
}

ChainComplex flag_order_complex(const FlagComplex& fc) {
  std::vector<size_t> ranks;
  for (const auto& f : fc.flags) ranks.push_back(f.size());
  ChainComplex c(0, ranks);
  std::map<std::vector<int>, size_t> prev;
  for (int p = 0; p <= fc.p_max; ++p) {
    std::map<std::vector<int>, size_t> cur;
    for (size_t i = 0; i < fc.flags[p].size(); ++i) cur[fc.flags[p][i]] = i;
    if (p > 0) {
      SparseIntMatrix d(ranks[p - 1], ranks[p]);
      for (const auto& [f, col] : cur)
        for (int i = 0; i <= p; ++i) {
          auto g = f;
          g.erase(g.begin() + i);
          d.add(prev.at(g), col, i % 2 ? -1 : 1);
        }
      c.set_boundary(p, std::move(d));
    }
    prev = std::move(cur);
  }
  c.validate();
  return c;
}

}  // namespace scissors::homology
