#pragma once
#include <vector>

#include "scissors/geom/simplex.hpp"
#include "scissors/homology/complex.hpp"

namespace scissors::homology {

// Ordered tuples (repeats allowed) from a finite point set, filtered by the
// dimension of their affine span.
struct SpanComplex {
  std::vector<geom::Point> points;
  ChainComplex complex;                            // degrees 0..max_degree
  std::vector<std::vector<std::vector<int>>> tuples;  // per degree, point ids
  std::vector<std::vector<int>> level;                // per degree, span dimension
};

inline constexpr size_t kMaxSpanPoints = 8;
inline constexpr size_t kMaxSpanTuples = 200000;

// errors: TooManyPoints
SpanComplex simplicial_complex_of(const std::vector<geom::Point>& points, int max_degree);

// Quotient complex C_{<=p} / C_{<=p-1}: tuples of level exactly p.
ChainComplex graded_piece(const SpanComplex& s, int p);
// Subcomplex C_{<=p}.
ChainComplex filtration_piece(const SpanComplex& s, int p);

}  // namespace scissors::homology
