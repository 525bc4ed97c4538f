#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::exact {

// Sparse rational vector, entries sorted by index, no zeros.
struct QVec {
  std::vector<std::pair<uint64_t, Rational>> e;

  bool empty() const { return e.empty(); }
  Rational at(uint64_t i) const;
  void add(uint64_t i, const Rational& v);  // unsorted append, call normalize()
  void normalize();
  // this += s * o
  void axpy(const Rational& s, const QVec& o);
  QVec scaled(const Rational& s) const;
  bool operator==(const QVec& o) const { return e == o.e; }
};

// Semi-echelon basis over Q, rows keyed by leading index (leading coeff 1).
class Echelon {
 public:
  QVec reduce(QVec v) const;
  bool insert(QVec v);
  bool contains(const QVec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows_.size(); }
  const std::vector<QVec>& rows() const { return rows_; }

 private:
  std::vector<QVec> rows_;
  std::vector<std::pair<uint64_t, size_t>> pivots_;  // sorted by pivot
  const QVec* row_for(uint64_t pivot) const;
};

size_t rank_of(const std::vector<QVec>& vs);

// Kernel of the map e_j -> images[j], as combinations of the e_j.
std::vector<QVec> kernel(const std::vector<QVec>& images);

// Subspace equality of two spans.
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b);

}  // namespace scissors::exact
