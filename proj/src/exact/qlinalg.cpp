#include "scissors/exact/qlinalg.hpp"

#include <algorithm>

namespace scissors::exact {

Rational QVec::at(uint64_t i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, uint64_t k) { return p.first < k; });
  return (it != e.end() && it->first == i) ? it->second : Rational(0);
}

void QVec::add(uint64_t i, const Rational& v) { e.emplace_back(i, v); }

void QVec::normalize() {
  std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<uint64_t, Rational>> out;
  out.reserve(e.size());
  for (auto& p : e) {
    if (!out.empty() && out.back().first == p.first)
      out.back().second += p.second;
    else
      out.push_back(std::move(p));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return sgn(p.second) == 0; }), out.end());
  e = std::move(out);
}

void QVec::axpy(const Rational& s, const QVec& o) {
  if (sgn(s) == 0 || o.e.empty()) return;
  std::vector<std::pair<uint64_t, Rational>> out;
  out.reserve(e.size() + o.e.size());
  size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
      out.push_back(std::move(e[i++]));
    } else if (i == e.size() || o.e[j].first < e[i].first) {
      out.emplace_back(o.e[j].first, s * o.e[j].second);
      ++j;
    } else {
      Rational v = e[i].second + s * o.e[j].second;
      if (sgn(v) != 0) out.emplace_back(e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  e = std::move(out);
}

QVec QVec::scaled(const Rational& s) const {
  QVec r;
  if (sgn(s) == 0) return r;
  r.e = e;
  for (auto& p : r.e) p.second *= s;
  return r;
}

const QVec* Echelon::row_for(uint64_t pivot) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot,
                             [](const auto& p, uint64_t k) { return p.first < k; });
  if (it != pivots_.end() && it->first == pivot) return &rows_[it->second];
  return nullptr;
}

QVec Echelon::reduce(QVec v) const {
  size_t pos = 0;
  while (pos < v.e.size()) {
    uint64_t idx = v.e[pos].first;
    const QVec* r = row_for(idx);
    if (!r) {
      ++pos;
      continue;
    }
    Rational c = v.e[pos].second;
    v.axpy(-c, *r);
    // entries before pos are untouched; idx is eliminated
  }
  return v;
}

bool Echelon::insert(QVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  // choose the first non-pivot entry as pivot (all entries are non-pivots)
  Rational inv = 1 / v.e[0].second;
  for (auto& p : v.e) p.second *= inv;
  uint64_t piv = v.e[0].first;
  rows_.push_back(std::move(v));
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv,
                             [](const auto& p, uint64_t k) { return p.first < k; });
  pivots_.insert(it, {piv, rows_.size() - 1});
  return true;
}

size_t rank_of(const std::vector<QVec>& vs) {
  Echelon e;
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

std::vector<QVec> kernel(const std::vector<QVec>& images) {
  // rows of the echelon carry (image | combination) with combination indices
  // offset past every image index
  uint64_t off = 0;
  for (const auto& v : images)
    if (!v.e.empty()) off = std::max(off, v.e.back().first + 1);
  Echelon ech;
  std::vector<QVec> ker;
  for (size_t j = 0; j < images.size(); ++j) {
    QVec aug = images[j];
    aug.e.emplace_back(off + j, Rational(1));
    QVec r = ech.reduce(std::move(aug));
    if (!r.empty() && r.e[0].first >= off) {
      QVec k;
      for (auto& p : r.e) k.e.emplace_back(p.first - off, p.second);
      ker.push_back(std::move(k));
    } else {
      ech.insert(std::move(r));
    }
  }
  return ker;
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  Echelon ea;
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return rank_of(b) == ea.rank();
}

}  // namespace scissors::exact
