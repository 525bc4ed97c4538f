#pragma once
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "scissors/homology/sparse.hpp"

namespace scissors::homology {

struct HomologyResult {
  int degree = 0;
  long betti = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1, each dividing the next

  bool operator==(const HomologyResult& o) const { return betti == o.betti && torsion == o.torsion; }
  std::string to_string() const;  // "Z^2 + Z/2", "0"
};

nlohmann::json homology_json(const HomologyResult& h);

// Chain complex over Z concentrated in degrees lo..hi. boundary(k) maps
// C_k -> C_{k-1} (rows indexed by C_{k-1}). Basis labels are opaque.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(int lo, std::vector<size_t> ranks);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool in_range(int k) const { return k >= lo() && k <= hi(); }
  size_t rank(int k) const { return in_range(k) ? ranks_[k - lo_] : 0; }

  // zero matrix of the right shape when unset or outside the range
  SparseIntMatrix boundary(int k) const;
  void set_boundary(int k, SparseIntMatrix d);

  std::vector<std::string>& labels(int k) { return labels_[k]; }
  const std::vector<std::string>& labels(int k) const;

  // throws InvariantViolation on shape mismatch or d d != 0
  void validate() const;

 private:
  int lo_ = 0;
  std::vector<size_t> ranks_;
  std::map<int, SparseIntMatrix> d_;
  std::map<int, std::vector<std::string>> labels_;
};

// Betti number and torsion at degree k. At the top degree of a truncated
// complex this is the cycle group.
HomologyResult homology_of(const ChainComplex& c, int k);
std::vector<HomologyResult> homology_all(const ChainComplex& c);

ChainComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_json(const ChainComplex& c);

// Simplicial complex generated by the given facets (vertex ids), faces
// oriented by increasing vertex id. Degrees 0..max facet dimension.
ChainComplex simplicial_complex(const std::vector<std::vector<int>>& facets);

// Bigraded complex with horizontal maps h(p,q): A_{p,q} -> A_{p-1,q} and
// vertical maps v(p,q): A_{p,q} -> A_{p,q-1}; h h = 0, v v = 0, h v + v h = 0.
class DoubleComplex {
 public:
  void set_rank(int p, int q, size_t r) { ranks_[{p, q}] = r; }
  size_t rank(int p, int q) const;
  void set_h(int p, int q, SparseIntMatrix m) { h_[{p, q}] = std::move(m); }
  void set_v(int p, int q, SparseIntMatrix m) { v_[{p, q}] = std::move(m); }
  SparseIntMatrix h(int p, int q) const;
  SparseIntMatrix v(int p, int q) const;
  int p_min() const;
  int p_max() const;
  int q_min() const;
  int q_max() const;
  void validate() const;
  // total complex over columns p >= p_from, degree p + q
  ChainComplex total(int p_from) const;
  ChainComplex column(int p) const;

 private:
  std::map<std::pair<int, int>, size_t> ranks_;
  std::map<std::pair<int, int>, SparseIntMatrix> h_, v_;
};

}  // namespace scissors::homology
