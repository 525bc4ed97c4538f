#include "scissors/geom/simplex.hpp"

#include "scissors/exact/error.hpp"

namespace scissors::geom {

bool PointLess::operator()(const Point& a, const Point& b) const {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c) return c < 0;
  }
  return a.size() < b.size();
}

bool TupleLess::operator()(const std::vector<Point>& a, const std::vector<Point>& b) const {
  PointLess pl;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (pl(a[i], b[i])) return true;
    if (pl(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

Point make_point(std::initializer_list<Rational> xs) {
  Point p;
  for (const auto& x : xs) p.emplace_back(x);
  return p;
}

Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, const Real& s) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Real dot(const Point& a, const Point& b) {
  Real s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point cross(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

Real det(const std::vector<Point>& rows) {
  size_t n = rows.size();
  if (n == 0) return Real(1);
  if (n == 1) return rows[0][0];
  if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  if (n == 3)
    return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
           rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
           rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
  fail(ErrorKind::DimensionMismatch, "determinant beyond 3x3");
}

std::vector<Point> edge_rows(const std::vector<Point>& pts) {
  std::vector<Point> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  return rows;
}

}  // namespace

Real simplex_volume(const Simplex& s) {
  if (static_cast<int>(s.v.size()) != s.dim + 1) fail(ErrorKind::DimensionMismatch, "simplex is not top-dimensional");
  for (const auto& p : s.v)
    if (static_cast<int>(p.size()) != s.dim) fail(ErrorKind::DimensionMismatch, "vertex dimension");
  long fact = 1;
  for (int i = 2; i <= s.dim; ++i) fact *= i;
  return det(edge_rows(s.v)) / Real(fact);
}

int orient(const std::vector<Point>& pts) {
  if (pts.size() != pts[0].size() + 1) fail(ErrorKind::DimensionMismatch, "orient needs n+1 points in E^n");
  // rational fast path avoids building algebraic intermediates
  bool rat = true;
  for (const auto& p : pts)
    for (const auto& x : p) rat = rat && x.is_rational();
  if (rat) {
    size_t n = pts.size() - 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = pts[i + 1][j].rational() - pts[0][j].rational();
    Rational d;
    if (n == 1) d = m[0][0];
    else if (n == 2) d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    else
      d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return sgn(d);
  }
  return det(edge_rows(pts)).sign();
}

int orientation_sign(const Simplex& s) {
  if (static_cast<int>(s.v.size()) != s.dim + 1) fail(ErrorKind::DimensionMismatch, "simplex is not top-dimensional");
  return orient(s.v);
}

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  // rank of difference vectors by exact elimination
  std::vector<Point> rows = edge_rows(pts);
  int rank = 0;
  size_t dim = pts[0].size();
  for (size_t col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][col].is_zero() && rows[r][col].sign() != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].sign() == 0) continue;
      Real f = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Point barycenter(const std::vector<Point>& pts) {
  Point c(pts[0].size());
  for (const auto& p : pts) c = c + p;
  return scale(c, Real(Rational(1, static_cast<long>(pts.size()))));
}

void SimplexChain::add(const std::vector<Point>& simplex, long long coeff) {
  if (coeff == 0) return;
  if (terms_.empty() && dim_ == 0 && !simplex.empty()) dim_ = static_cast<int>(simplex[0].size());
  auto it = terms_.find(simplex);
  if (it == terms_.end()) {
    terms_.emplace(simplex, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SimplexChain& SimplexChain::operator+=(const SimplexChain& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

SimplexChain& SimplexChain::operator-=(const SimplexChain& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

SimplexChain SimplexChain::operator-() const {
  SimplexChain r(dim_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

bool SimplexChain::operator==(const SimplexChain& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  TupleLess less;
  for (; a != terms_.end(); ++a, ++b) {
    if (a->second != b->second) return false;
    if (less(a->first, b->first) || less(b->first, a->first)) return false;
  }
  return true;
}

SimplexChain SimplexChain::without_degenerate() const {
  SimplexChain r(dim_);
  for (const auto& [s, c] : terms_) {
    if (static_cast<int>(s.size()) == dim_ + 1 && orient(s) == 0) continue;
    r.terms_.emplace(s, c);
  }
  return r;
}

SimplexChain boundary(const SimplexChain& c) {
  SimplexChain r(c.dim());
  for (const auto& [s, coeff] : c.terms()) {
    if (s.size() <= 1) continue;
    for (size_t i = 0; i < s.size(); ++i) {
      std::vector<Point> f;
      f.reserve(s.size() - 1);
      for (size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      r.add(f, (i % 2) ? -coeff : coeff);
    }
  }
  return r;
}

}  // namespace scissors::geom
