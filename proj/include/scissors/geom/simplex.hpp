#pragma once
#include <map>
#include <vector>

#include "scissors/exact/algebraic.hpp"

namespace scissors::geom {

using exact::Rational;
using exact::Real;
using Point = std::vector<Real>;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const;
};
struct TupleLess {
  bool operator()(const std::vector<Point>& a, const std::vector<Point>& b) const;
};

Point make_point(std::initializer_list<Rational> xs);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point scale(const Point& a, const Real& s);
Real dot(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);

// Ordered vertex tuple in E^dim; k-simplex has k+1 vertices.
struct Simplex {
  int dim = 0;
  std::vector<Point> v;
};

// Signed volume det(a1-a0, ..., an-a0)/n!; requires n+1 vertices.
Real simplex_volume(const Simplex& s);
int orientation_sign(const Simplex& s);
// sign of det(a1-a0,...,an-a0) for n+1 points in E^n
int orient(const std::vector<Point>& pts);
// dimension of the affine span
int affine_dimension(const std::vector<Point>& pts);
Point barycenter(const std::vector<Point>& pts);

class SimplexChain {
 public:
  using Terms = std::map<std::vector<Point>, long long, TupleLess>;

  SimplexChain() = default;
  explicit SimplexChain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const std::vector<Point>& simplex, long long coeff);
  SimplexChain& operator+=(const SimplexChain& o);
  SimplexChain& operator-=(const SimplexChain& o);
  SimplexChain operator-() const;
  friend SimplexChain operator+(SimplexChain a, const SimplexChain& b) { return a += b; }
  friend SimplexChain operator-(SimplexChain a, const SimplexChain& b) { return a -= b; }
  bool operator==(const SimplexChain& o) const;

  // drops top-dimensional terms with zero volume
  SimplexChain without_degenerate() const;

 private:
  int dim_ = 0;
  Terms terms_;
};

SimplexChain boundary(const SimplexChain& c);

}  // namespace scissors::geom
