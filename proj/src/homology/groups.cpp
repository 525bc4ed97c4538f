#include "scissors/homology/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "scissors/exact/error.hpp"
#include "scissors/homology/smith.hpp"

namespace scissors::homology {

namespace {

IntMat identity_mat(int r) {
  IntMat m(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size();
  IntMat c(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<int> permutation(int code) {
  // the 6 permutations of {0,1,2} in lexicographic order
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return {perms[code][0], perms[code][1], perms[code][2]};
}

}  // namespace

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order(); ++b)
    if (table[a][b] == 0) return b;
  fail(ErrorKind::InvariantViolation, "element without inverse");
}

FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table, std::vector<int> sign) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::ParseError, "empty group table");
  if (n > kMaxGroupOrder) fail(ErrorKind::SizeCap, "group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::ParseError, "group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(ErrorKind::IndexOutOfRange, "group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) fail(ErrorKind::ParseError, "element 0 must be the identity");
  for (int a = 0; a < n; ++a) {
    std::vector<int> seen(n, 0);
    for (int b = 0; b < n; ++b) ++seen[table[a][b]];
    if (std::count(seen.begin(), seen.end(), 1) != n) fail(ErrorKind::ParseError, "group table row is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) fail(ErrorKind::ParseError, "group table is not associative");
  FiniteGroup g{std::move(name), std::move(table), std::move(sign)};
  if (!g.sign.empty()) {
    if (static_cast<int>(g.sign.size()) != n) fail(ErrorKind::ParseError, "sign character has wrong length");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((g.sign[a] != 1 && g.sign[a] != -1) || g.sign[g.mul(a, b)] != g.sign[a] * g.sign[b])
          fail(ErrorKind::ParseError, "sign is not a homomorphism to {+1,-1}");
  }
  return g;
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) fail(ErrorKind::ParseError, "cyclic group order must be positive");
  if (m > kMaxGroupOrder) fail(ErrorKind::SizeCap, "group order exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  std::vector<int> sign;
  if (m % 2 == 0)
    for (int a = 0; a < m; ++a) sign.push_back(a % 2 ? -1 : 1);
  return make_group("Z/" + std::to_string(m), std::move(t), std::move(sign));
}

FiniteGroup symmetric_group3() {
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  std::vector<int> sign(6);
  for (int a = 0; a < 6; ++a) {
    auto pa = permutation(a);
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += pa[i] > pa[j];
    sign[a] = inversions % 2 ? -1 : 1;
    for (int b = 0; b < 6; ++b) {
      auto pb = permutation(b);
      std::vector<int> ab = {pa[pb[0]], pa[pb[1]], pa[pb[2]]};  // apply b, then a
      for (int c = 0; c < 6; ++c)
        if (permutation(c) == ab) t[a][b] = c;
    }
  }
  return make_group("S3", std::move(t), std::move(sign));
}

FiniteGroup trivial_group() { return make_group("1", {{0}}, {1}); }

FiniteGroup group_from_spec(const std::string& spec) {
  if (spec == "1" || spec == "trivial") return trivial_group();
  if (spec == "S3" || spec == "Sigma3") return symmetric_group3();
  if (spec.rfind("Z/", 0) == 0) {
    try {
      size_t used = 0;
      int m = std::stoi(spec.substr(2), &used);
      if (used + 2 == spec.size()) return cyclic_group(m);
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::ParseError, "unknown group '" + spec + "' (expected Z/m, S3 or 1)");
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
      fail(ErrorKind::ParseError, "order does not match the table");
    std::vector<int> sign;
    if (j.contains("sign")) sign = j.at("sign").get<std::vector<int>>();
    return make_group(j.value("name", std::string("G")), std::move(table), std::move(sign));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("group: ") + e.what());
  }
}

void validate_module(const FiniteGroup& g, const GroupModule& m) {
  if (static_cast<int>(m.action.size()) != g.order()) fail(ErrorKind::ParseError, "module needs one matrix per element");
  for (const auto& a : m.action) {
    if (static_cast<int>(a.size()) != m.rank) fail(ErrorKind::ParseError, "action matrix has wrong size");
    for (const auto& row : a)
      if (static_cast<int>(row.size()) != m.rank) fail(ErrorKind::ParseError, "action matrix is not square");
  }
  if (m.action[0] != identity_mat(m.rank)) fail(ErrorKind::ParseError, "identity must act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (mat_mul(m.action[a], m.action[b]) != m.action[g.mul(a, b)])
        fail(ErrorKind::ParseError, "action is not a homomorphism");
}

GroupModule trivial_module(const FiniteGroup& g, int rank) {
  GroupModule m{rank == 1 ? "trivialZ" : "trivialZ^" + std::to_string(rank), rank,
                std::vector<IntMat>(g.order(), identity_mat(rank))};
  return m;
}

GroupModule sign_module(const FiniteGroup& g) {
  if (g.sign.empty()) fail(ErrorKind::ParseError, "group " + g.name + " has no sign character");
  GroupModule m{"signZ", 1, {}};
  for (int a = 0; a < g.order(); ++a) m.action.push_back({{g.sign[a]}});
  validate_module(g, m);
  return m;
}

GroupModule module_from_spec(const FiniteGroup& g, const std::string& spec) {
  if (spec == "trivialZ" || spec == "Z") return trivial_module(g);
  if (spec == "signZ") return sign_module(g);
  fail(ErrorKind::ParseError, "unknown module '" + spec + "' (expected trivialZ or signZ)");
}

GroupModule module_from_json(const FiniteGroup& g, const nlohmann::json& action) {
  try {
    std::map<int, IntMat> gens;
    int rank = -1;
    for (const auto& [k, v] : action.items()) {
      int id = std::stoi(k);
      if (id < 0 || id >= g.order()) fail(ErrorKind::IndexOutOfRange, "generator id out of range");
      gens[id] = v.get<IntMat>();
      if (rank < 0) rank = static_cast<int>(gens[id].size());
      if (static_cast<int>(gens[id].size()) != rank) fail(ErrorKind::ParseError, "action matrices of mixed size");
    }
    if (rank <= 0) fail(ErrorKind::ParseError, "module action needs at least one generator");
    std::vector<IntMat> rho(g.order());
    std::vector<bool> known(g.order(), false);
    rho[0] = identity_mat(rank);
    known[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& [s, ms] : gens) {
        int y = g.mul(x, s);
        IntMat my = mat_mul(rho[x], ms);
        if (known[y]) {
          if (rho[y] != my) fail(ErrorKind::ParseError, "generator matrices violate the group relations");
          continue;
        }
        rho[y] = std::move(my);
        known[y] = true;
        queue.push_back(y);
      }
    }
    if (std::find(known.begin(), known.end(), false) != known.end())
      fail(ErrorKind::ParseError, "action generators do not generate the group");
    GroupModule m{"custom", rank, std::move(rho)};
    validate_module(g, m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("module action: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "module action keys must be element ids");
  }
}

ChainComplex bar_complex(const FiniteGroup& g, const GroupModule& m, int degree_cap) {
  if (g.order() > kMaxGroupOrder) fail(ErrorKind::SizeCap, "group order exceeds " + std::to_string(kMaxGroupOrder));
  if (degree_cap < 0) fail(ErrorKind::DegreeOutOfRange, "negative degree cap");
  if (degree_cap > kMaxBarDegree) fail(ErrorKind::SizeCap, "bar complex degree cap is " + std::to_string(kMaxBarDegree));
  validate_module(g, m);
  size_t n = g.order(), r = m.rank;
  int top = degree_cap + 1;
  std::vector<size_t> ranks;
  size_t tuples = 1;
  for (int k = 0; k <= top; ++k) {
    if (tuples * r > kMaxBarRank)
      fail(ErrorKind::SizeCap, "bar complex rank " + std::to_string(tuples * r) + " exceeds " + std::to_string(kMaxBarRank));
    ranks.push_back(tuples * r);
    tuples *= n;
  }
  ChainComplex c(0, ranks);
  std::vector<int> inverse(n);
  for (size_t a = 0; a < n; ++a) inverse[a] = g.inv(static_cast<int>(a));
  for (int k = 1; k <= top; ++k) {
    SparseIntMatrix d(ranks[k - 1], ranks[k]);
    size_t count = ranks[k] / r;
    std::vector<int> h(k);
    for (size_t idx = 0; idx < count; ++idx) {
      // digits of idx, most significant first: (e, h_1, .., h_k)
      size_t x = idx;
      for (int i = k - 1; i >= 0; --i) {
        h[i] = static_cast<int>(x % n);
        x /= n;
      }
      // face 0: renormalize by h_1^-1, acting on M
      int u = inverse[h[0]];
      size_t row0 = 0;
      for (int i = 1; i < k; ++i) row0 = row0 * n + g.mul(u, h[i]);
      const IntMat& rho = m.action[u];
      for (size_t b = 0; b < r; ++b) {
        size_t col = idx * r + b;
        for (size_t a = 0; a < r; ++a)
          if (rho[a][b]) d.add(row0 * r + a, col, rho[a][b]);
        for (int i = 1; i <= k; ++i) {
          size_t row = 0;
          for (int j = 1; j <= k; ++j)
            if (j != i) row = row * n + h[j - 1];
          d.add(row * r + b, col, (i % 2) ? -1 : 1);
        }
      }
    }
    c.set_boundary(k, std::move(d));
  }
  c.validate();
  return c;
}

std::vector<HomologyResult> group_homology(const FiniteGroup& g, const GroupModule& m, int degree_cap) {
  ChainComplex c = bar_complex(g, m, degree_cap);
  std::vector<HomologyResult> r;
  for (int k = 0; k <= degree_cap; ++k) r.push_back(homology_of(c, k));
  return r;
}

HomologyResult coinvariants(const FiniteGroup& g, const GroupModule& m) {
  validate_module(g, m);
  SparseIntMatrix rel(m.rank, static_cast<size_t>(g.order()) * m.rank);
  for (int a = 0; a < g.order(); ++a)
    for (int i = 0; i < m.rank; ++i)
      for (int j = 0; j < m.rank; ++j) rel.add(j, a * m.rank + i, m.action[a][j][i] - (i == j ? 1 : 0));
  auto f = invariant_factors(rel);
  HomologyResult h;
  h.betti = m.rank - static_cast<long>(f.size());
  for (const auto& x : f)
    if (x > 1) h.torsion.push_back(x);
  return h;
}

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> el = elements;
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  if (el.empty() || el[0] != 0) fail(ErrorKind::ParseError, "subgroup must contain the identity");
  std::map<int, int> pos;
  for (size_t i = 0; i < el.size(); ++i) {
    if (el[i] < 0 || el[i] >= g.order()) fail(ErrorKind::IndexOutOfRange, "subgroup element out of range");
    pos[el[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> t(el.size(), std::vector<int>(el.size()));
  for (size_t a = 0; a < el.size(); ++a)
    for (size_t b = 0; b < el.size(); ++b) {
      auto it = pos.find(g.mul(el[a], el[b]));
      if (it == pos.end()) fail(ErrorKind::ParseError, "subset is not closed under multiplication");
      t[a][b] = it->second;
    }
  std::vector<int> sign;
  if (!g.sign.empty())
    for (int x : el) sign.push_back(g.sign[x]);
  return Subgroup{make_group(g.name + ">H", std::move(t), std::move(sign)), el};
}

GroupModule induced_module(const FiniteGroup& g, const Subgroup& h, const GroupModule& m) {
  validate_module(h.group, m);
  int n = g.order();
  std::vector<int> coset(n, -1), reps;
  std::map<int, int> in_h;
  for (size_t i = 0; i < h.embed.size(); ++i) in_h[h.embed[i]] = static_cast<int>(i);
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (int y : h.embed) coset[g.mul(x, y)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  int t = static_cast<int>(reps.size()), r = m.rank;
  GroupModule ind{"Ind(" + m.name + ")", t * r, {}};
  for (int a = 0; a < n; ++a) {
    IntMat rho(t * r, std::vector<long>(t * r, 0));
    for (int i = 0; i < t; ++i) {
      int x = g.mul(a, reps[i]);
      int j = coset[x];
      // a r_i = r_j k with k in H
      int k = g.mul(g.inv(reps[j]), x);
      const IntMat& mk = m.action[in_h.at(k)];
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) rho[j * r + p][i * r + q] = mk[p][q];
    }
    ind.action.push_back(std::move(rho));
  }
  validate_module(g, ind);
  return ind;
}

ShapiroResult shapiro_check(const FiniteGroup& g, const Subgroup& h, const GroupModule& m, int degree_cap) {
  ShapiroResult s;
  s.over_g = group_homology(g, induced_module(g, h, m), degree_cap);
  s.over_h = group_homology(h.group, m, degree_cap);
  s.equal = s.over_g.size() == s.over_h.size();
  for (size_t i = 0; s.equal && i < s.over_g.size(); ++i) s.equal = s.over_g[i] == s.over_h[i];
  return s;
}

}  // namespace scissors::homology
