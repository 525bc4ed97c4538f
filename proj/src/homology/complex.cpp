#include "scissors/homology/complex.hpp"

#include <algorithm>
#include <set>

#include "scissors/exact/error.hpp"
#include "scissors/homology/smith.hpp"

namespace scissors::homology {

std::string HomologyResult::to_string() const {
  std::string s;
  if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

nlohmann::json homology_json(const HomologyResult& h) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& x : h.torsion) t.push_back(x.fits_slong_p() ? nlohmann::json(x.get_si()) : nlohmann::json(x.get_str()));
  return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", t}, {"group", h.to_string()}};
}

ChainComplex::ChainComplex(int lo, std::vector<size_t> ranks) : lo_(lo), ranks_(std::move(ranks)) {}

SparseIntMatrix ChainComplex::boundary(int k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  return SparseIntMatrix(rank(k - 1), rank(k));
}

void ChainComplex::set_boundary(int k, SparseIntMatrix d) {
  if (d.rows() != rank(k - 1) || d.cols() != rank(k))
    fail(ErrorKind::DimensionMismatch, "boundary " + std::to_string(k) + " has wrong shape");
  d_[k] = std::move(d);
}

const std::vector<std::string>& ChainComplex::labels(int k) const {
  static const std::vector<std::string> none;
  auto it = labels_.find(k);
  return it == labels_.end() ? none : it->second;
}

void ChainComplex::validate() const {
  for (const auto& [k, d] : d_) {
    ensure(d.rows() == rank(k - 1) && d.cols() == rank(k), "boundary shape in degree " + std::to_string(k));
    auto below = d_.find(k - 1);
    if (below == d_.end()) continue;
    ensure((below->second * d).is_zero(), "d d != 0 at degree " + std::to_string(k));
  }
}

namespace {
size_t nonzero_count(const std::vector<Integer>& f) { return f.size(); }
}  // namespace

HomologyResult homology_of(const ChainComplex& c, int k) {
  if (!c.in_range(k))
    fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(k) + " outside " + std::to_string(c.lo()) + ".." +
                                          std::to_string(c.hi()));
  SparseIntMatrix dk = c.boundary(k), dk1 = c.boundary(k + 1);
  auto fk = invariant_factors(dk);
  auto fk1 = invariant_factors(dk1);
  HomologyResult h;
  h.degree = k;
  h.betti = static_cast<long>(c.rank(k)) - static_cast<long>(nonzero_count(fk)) - static_cast<long>(nonzero_count(fk1));
  for (const auto& x : fk1)
    if (x > 1) h.torsion.push_back(x);
  // rank-nullity over Q, by independent row reduction
  ensure(rational_rank(dk) == fk.size() && rational_rank(dk1) == fk1.size(), "integer and rational ranks disagree");
  ensure(h.betti >= 0, "negative betti number");
  return h;
}

std::vector<HomologyResult> homology_all(const ChainComplex& c) {
  std::vector<HomologyResult> r;
  for (int k = c.lo(); k <= c.hi(); ++k) r.push_back(homology_of(c, k));
  return r;
}

namespace {
Integer parse_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::ParseError, "bad integer " + j.get<std::string>());
    return z;
  }
  fail(ErrorKind::ParseError, "expected integer");
}
}  // namespace

ChainComplex complex_from_json(const nlohmann::json& j) {
  try {
    std::map<int, size_t> ranks;
    for (const auto& [k, v] : j.at("ranks").items()) {
      long r = v.get<long>();
      if (r < 0) fail(ErrorKind::ParseError, "negative rank");
      ranks[std::stoi(k)] = static_cast<size_t>(r);
    }
    if (ranks.empty()) fail(ErrorKind::ParseError, "complex has no degrees");
    int lo = ranks.begin()->first, hi = ranks.rbegin()->first;
    std::vector<size_t> rv;
    for (int k = lo; k <= hi; ++k) rv.push_back(ranks.count(k) ? ranks[k] : 0);
    ChainComplex c(lo, rv);
    if (j.contains("boundaries"))
      for (const auto& [k, entries] : j.at("boundaries").items()) {
        int deg = std::stoi(k);
        SparseIntMatrix d(c.rank(deg - 1), c.rank(deg));
        for (const auto& e : entries) {
          if (!e.is_array() || e.size() != 3) fail(ErrorKind::ParseError, "boundary entry must be [r, c, value]");
          long r = e[0].get<long>(), col = e[1].get<long>();
          if (r < 0 || col < 0) fail(ErrorKind::IndexOutOfRange, "negative index");
          d.add(static_cast<size_t>(r), static_cast<size_t>(col), parse_int(e[2]));
        }
        c.set_boundary(deg, std::move(d));
      }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("complex: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "complex: degree keys must be integers");
  }
}

nlohmann::json complex_json(const ChainComplex& c) {
  nlohmann::json ranks = nlohmann::json::object(), bd = nlohmann::json::object();
  for (int k = c.lo(); k <= c.hi(); ++k) {
    ranks[std::to_string(k)] = c.rank(k);
    auto d = c.boundary(k);
    if (d.is_zero()) continue;
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [rc, v] : d.entries()) e.push_back({rc.first, rc.second, v.get_str()});
    bd[std::to_string(k)] = e;
  }
  return {{"ranks", ranks}, {"boundaries", bd}};
}

ChainComplex simplicial_complex(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty() || std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(ErrorKind::ParseError, "facet must list distinct vertices");
    size_t n = f.size();
    if (faces.size() < n) faces.resize(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      faces[s.size() - 1].insert(s);
    }
  }
  std::vector<size_t> ranks;
  std::vector<std::map<std::vector<int>, size_t>> index(faces.size());
  for (size_t k = 0; k < faces.size(); ++k) {
    ranks.push_back(faces[k].size());
    size_t i = 0;
    for (const auto& s : faces[k]) index[k][s] = i++;
  }
  ChainComplex c(0, ranks);
  for (size_t k = 0; k < faces.size(); ++k) {
    auto& lab = c.labels(static_cast<int>(k));
    for (const auto& s : faces[k]) {
      std::string t;
      for (int v : s) t += (t.empty() ? "" : ",") + std::to_string(v);
      lab.push_back(t);
    }
    if (k == 0) continue;
    SparseIntMatrix d(ranks[k - 1], ranks[k]);
    for (const auto& [s, col] : index[k])
      for (size_t i = 0; i < s.size(); ++i) {
        auto f = s;
        f.erase(f.begin() + i);
        d.add(index[k - 1].at(f), col, (i % 2) ? -1 : 1);
      }
    c.set_boundary(static_cast<int>(k), std::move(d));
  }
  c.validate();
  return c;
}

size_t DoubleComplex::rank(int p, int q) const {
  auto it = ranks_.find({p, q});
  return it == ranks_.end() ? 0 : it->second;
}

SparseIntMatrix DoubleComplex::h(int p, int q) const {
  auto it = h_.find({p, q});
  return it == h_.end() ? SparseIntMatrix(rank(p - 1, q), rank(p, q)) : it->second;
}

SparseIntMatrix DoubleComplex::v(int p, int q) const {
  auto it = v_.find({p, q});
  return it == v_.end() ? SparseIntMatrix(rank(p, q - 1), rank(p, q)) : it->second;
}

int DoubleComplex::p_min() const {
  int r = 0;
  bool first = true;
  for (const auto& [pq, n] : ranks_)
    if (first || pq.first < r) r = pq.first, first = false;
  return r;
}
int DoubleComplex::p_max() const {
  int r = 0;
  bool first = true;
  for (const auto& [pq, n] : ranks_)
    if (first || pq.first > r) r = pq.first, first = false;
  return r;
}
int DoubleComplex::q_min() const {
  int r = 0;
  bool first = true;
  for (const auto& [pq, n] : ranks_)
    if (first || pq.second < r) r = pq.second, first = false;
  return r;
}
int DoubleComplex::q_max() const {
  int r = 0;
  bool first = true;
  for (const auto& [pq, n] : ranks_)
    if (first || pq.second > r) r = pq.second, first = false;
  return r;
}

void DoubleComplex::validate() const {
  for (const auto& [pq, n] : ranks_) {
    auto [p, q] = pq;
    auto hm = h(p, q), vm = v(p, q);
    ensure(hm.rows() == rank(p - 1, q) && hm.cols() == n, "horizontal map shape");
    ensure(vm.rows() == rank(p, q - 1) && vm.cols() == n, "vertical map shape");
    ensure((h(p - 1, q) * hm).is_zero(), "h h != 0");
    ensure((v(p, q - 1) * vm).is_zero(), "v v != 0");
    ensure((h(p, q - 1) * vm + v(p - 1, q) * hm).is_zero(), "h v + v h != 0");
  }
}

ChainComplex DoubleComplex::total(int p_from) const {
  int P = p_max(), Q0 = q_min(), Q1 = q_max();
  int lo = p_from + Q0, hi = P + Q1;
  // offsets of A_{p,n-p} inside Tot_n
  std::map<std::pair<int, int>, size_t> off;
  std::vector<size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    size_t o = 0;
    for (int p = p_from; p <= P; ++p) {
      off[{p, n - p}] = o;
      o += rank(p, n - p);
    }
    ranks.push_back(o);
  }
  ChainComplex c(lo, ranks);
  for (int n = lo + 1; n <= hi; ++n) {
    SparseIntMatrix d(c.rank(n - 1), c.rank(n));
    for (int p = p_from; p <= P; ++p) {
      int q = n - p;
      if (rank(p, q) == 0) continue;
      size_t col0 = off[{p, q}];
      SparseIntMatrix hm = h(p, q), vm = v(p, q);
      if (p - 1 >= p_from)
        for (const auto& [rc, x] : hm.entries()) d.add(off[{p - 1, q}] + rc.first, col0 + rc.second, x);
      for (const auto& [rc, x] : vm.entries()) d.add(off[{p, q - 1}] + rc.first, col0 + rc.second, x);
    }
    c.set_boundary(n, std::move(d));
  }
  c.validate();
  return c;
}

ChainComplex DoubleComplex::column(int p) const {
  int Q0 = q_min(), Q1 = q_max();
  std::vector<size_t> ranks;
  for (int q = Q0; q <= Q1; ++q) ranks.push_back(rank(p, q));
  ChainComplex c(Q0, ranks);
  for (int q = Q0 + 1; q <= Q1; ++q) c.set_boundary(q, v(p, q));
  c.validate();
  return c;
}

}  // namespace scissors::homology
