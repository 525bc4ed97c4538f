#pragma once
#include <array>
#include <utility>

#include "scissors/exact/rng.hpp"
#include "scissors/geom/polytope.hpp"

namespace scissors::geom {

// Kuhn triangulation: one tetrahedron per coordinate permutation.
Polytope box(const Rational& a, const Rational& b, const Rational& c);
inline Polytope unit_cube() { return box(1, 1, 1); }

// vertices (s,s,s),(s,-s,-s),(-s,s,-s),(-s,-s,s); edge length 2*sqrt(2)*s
Polytope regular_tetrahedron(const Real& s);
Polytope regular_tetrahedron_edge1();
Polytope regular_tetrahedron_unit_volume();
Polytope regular_octahedron_edge1();
Polytope regular_hexagon();

// convex hull of a planar point set, fan-triangulated from its least vertex
Polytope convex_polygon(const std::vector<Point>& pts, std::string name = "");
// convex hull in E^3 with a pulling triangulation from the least vertex
Polytope convex_polytope(const std::vector<Point>& pts, std::string name = "");

// P x [0, h]; triangle (i<j<k) -> three tetrahedra
Polytope prism(const Polytope& polygon, const Real& height);

// x -> M x + t
Polytope transform(const Polytope& p, const std::vector<std::vector<Real>>& m, const Point& t);

// Point sets of the two sides of the plane n.x = c (both closed).
std::pair<std::vector<Point>, std::vector<Point>> split_points(const std::vector<Point>& pts, const Point& n,
                                                                const Real& c);

Polytope random_rational_polygon(Rng& rng);

struct PlaneSplit {
  Polytope whole;
  Polytope pos;
  Polytope neg;
  Point normal;
  Real offset;
};
// box with integer sides or a random rational tetrahedron, cut through an interior point
PlaneSplit random_plane_split(Rng& rng, bool tetrahedron);

}  // namespace scissors::geom
