#include "scissors/homology/sparse.hpp"

#include "scissors/exact/error.hpp"
#include "scissors/exact/qlinalg.hpp"

namespace scissors::homology {

void SparseIntMatrix::check(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_)
    fail(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                                         std::to_string(rows_) + "x" + std::to_string(cols_));
}

Integer SparseIntMatrix::at(size_t r, size_t c) const {
  check(r, c);
  auto it = e_.find({r, c});
  return it == e_.end() ? Integer(0) : it->second;
}

void SparseIntMatrix::set(size_t r, size_t c, const Integer& v) {
  check(r, c);
  if (sgn(v) == 0) e_.erase({r, c});
  else e_[{r, c}] = v;
}

void SparseIntMatrix::add(size_t r, size_t c, const Integer& v) {
  check(r, c);
  if (sgn(v) == 0) return;
  auto [it, fresh] = e_.emplace(std::make_pair(r, c), v);
  if (fresh) return;
  it->second += v;
  if (sgn(it->second) == 0) e_.erase(it);
}

SparseIntMatrix SparseIntMatrix::identity(size_t n) {
  SparseIntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.e_[{i, i}] = 1;
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& d) {
  SparseIntMatrix m(d.size(), d.empty() ? 0 : d[0].size());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i].size() != m.cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix");
    for (size_t j = 0; j < d[i].size(); ++j) m.set(i, j, d[i][j]);
  }
  return m;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (const auto& [rc, v] : e_) d[rc.first][rc.second] = v;
  return d;
}

std::vector<std::map<size_t, Integer>> SparseIntMatrix::row_maps() const {
  std::vector<std::map<size_t, Integer>> r(rows_);
  for (const auto& [rc, v] : e_) r[rc.first].emplace(rc.second, v);
  return r;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
  auto orows = o.row_maps();
  SparseIntMatrix r(rows_, o.cols_);
  for (const auto& [rc, v] : e_)
    for (const auto& [c, w] : orows[rc.second]) r.add(rc.first, c, v * w);
  return r;
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum shape");
  SparseIntMatrix r = *this;
  for (const auto& [rc, v] : o.e_) r.add(rc.first, rc.second, v);
  return r;
}

SparseIntMatrix SparseIntMatrix::operator-(const SparseIntMatrix& o) const { return *this + o.scaled(-1); }

SparseIntMatrix SparseIntMatrix::scaled(const Integer& s) const {
  SparseIntMatrix r(rows_, cols_);
  if (sgn(s) == 0) return r;
  for (const auto& [rc, v] : e_) r.e_.emplace(rc, v * s);
  return r;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

size_t rational_rank(const SparseIntMatrix& m) {
  std::vector<exact::QVec> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) rows[rc.first].add(rc.second, Rational(v));
  exact::Echelon ech;
  for (auto& r : rows) {
    r.normalize();
    ech.insert(std::move(r));
  }
  return ech.rank();
}

}  // namespace scissors::homology
