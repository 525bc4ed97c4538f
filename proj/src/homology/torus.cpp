#include "scissors/homology/torus.hpp"

#include <map>

#include "scissors/exact/error.hpp"

namespace scissors::homology {

namespace {

// ordered set partitions: blocks as bitmasks over n directions
void partitions(unsigned remaining, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (unsigned b = remaining; b; b = (b - 1) & remaining) {
    cur.push_back(b);
    partitions(remaining & ~b, cur, out);
    cur.pop_back();
  }
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ChainComplex torus_complex(int n, int m) {
  if (n < 1 || n > 3) fail(ErrorKind::DegreeOutOfRange, "torus dimension must be 1..3");
  if (m < 3) fail(ErrorKind::DegreeOutOfRange, "grid needs at least 3 vertices per circle");
  size_t nv = 1;
  for (int i = 0; i < n; ++i) nv *= m;
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  partitions((1u << n) - 1, cur, parts);
  // simplices of dimension k: (vertex, partition with k blocks)
  using Cell = std::pair<size_t, std::vector<unsigned>>;
  std::vector<std::map<Cell, size_t>> index(n + 1);
  for (size_t v = 0; v < nv; ++v) {
    index[0].emplace(Cell{v, {}}, index[0].size());
    for (const auto& p : parts) index[p.size()].emplace(Cell{v, p}, index[p.size()].size());
  }
  auto shift = [&](size_t v, unsigned dirs) {
    size_t r = 0, stride = 1;
    for (int i = 0; i < n; ++i) {
      size_t c = (v / stride) % m;
      if (dirs >> i & 1) c = (c + 1) % m;
      r += c * stride;
      stride *= m;
    }
    return r;
  };
  std::vector<size_t> ranks;
  for (int k = 0; k <= n; ++k) ranks.push_back(index[k].size());
  ChainComplex c(0, ranks);
  for (int k = 1; k <= n; ++k) {
    SparseIntMatrix d(ranks[k - 1], ranks[k]);
    for (const auto& [cell, col] : index[k]) {
      const auto& [v, p] = cell;
      // vertex i of the simplex is v shifted by blocks 0..i-1
      for (int i = 0; i <= k; ++i) {
        Cell f;
        if (i == 0) {
          f = {shift(v, p[0]), std::vector<unsigned>(p.begin() + 1, p.end())};
        } else if (i == k) {
          f = {v, std::vector<unsigned>(p.begin(), p.end() - 1)};
        } else {
          auto q = p;
          q[i - 1] |= q[i];
          q.erase(q.begin() + i);
          f = {v, q};
        }
        d.add(index[k - 1].at(f), col, (i % 2) ? -1 : 1);
      }
    }
    c.set_boundary(k, std::move(d));
  }
  c.validate();
  return c;
}

std::vector<HomologyResult> torus_homology(int n) {
  ChainComplex c = torus_complex(n);
  auto r = homology_all(c);
  for (int k = 0; k <= n; ++k)
    ensure(r[k].betti == binomial(n, k) && r[k].torsion.empty(),
           "torus H_" + std::to_string(k) + " = " + r[k].to_string() + ", expected Z^" + std::to_string(binomial(n, k)));
  return r;
}

}  // namespace scissors::homology
