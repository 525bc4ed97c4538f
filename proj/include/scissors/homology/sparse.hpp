#pragma once
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::homology {

using exact::Integer;
using exact::Rational;

class SparseIntMatrix {
 public:
  using Entries = std::map<std::pair<size_t, size_t>, Integer>;

  SparseIntMatrix() = default;
  SparseIntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Entries& entries() const { return e_; }
  size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }

  Integer at(size_t r, size_t c) const;
  void set(size_t r, size_t c, const Integer& v);
  void add(size_t r, size_t c, const Integer& v);

  static SparseIntMatrix identity(size_t n);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& d);
  std::vector<std::vector<Integer>> to_dense() const;

  SparseIntMatrix operator*(const SparseIntMatrix& o) const;
  SparseIntMatrix operator+(const SparseIntMatrix& o) const;
  SparseIntMatrix operator-(const SparseIntMatrix& o) const;
  SparseIntMatrix scaled(const Integer& s) const;
  bool operator==(const SparseIntMatrix& o) const;

  // rows of the matrix as column-index -> value maps
  std::vector<std::map<size_t, Integer>> row_maps() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  Entries e_;
  void check(size_t r, size_t c) const;
};

// rank over Q by independent rational row reduction
size_t rational_rank(const SparseIntMatrix& m);

}  // namespace scissors::homology
