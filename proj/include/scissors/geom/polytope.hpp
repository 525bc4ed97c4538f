#pragma once
#include <string>
#include <vector>

#include "scissors/exact/angle.hpp"
#include "scissors/geom/simplex.hpp"

namespace scissors::geom {

enum class Validation { Default, Strict };

// Simplicial polytope: deduplicated vertex table plus positively oriented
// top-dimensional cells.
struct Polytope {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<int>> cells;
  std::string name;
  std::vector<std::string> warnings;

  SimplexChain chain() const;
  std::vector<Point> cell_points(size_t i) const;
  Real volume() const;
};

// Builds and validates. Negative cells are reordered with a warning;
// degenerate cells, overlaps and non-manifold boundaries are rejected.
Polytope make_polytope(int dim, std::vector<Point> vertices, std::vector<std::vector<int>> cells,
                       std::string name = "", Validation mode = Validation::Default);

// Oriented boundary facets of the cells (interior faces cancelled), as
// vertex-index tuples oriented so that the cell lies on the inner side.
std::vector<std::vector<int>> boundary_facets(const Polytope& p);

// Membership count of x in the chain; throws PointOnBoundary when x lies on
// the boundary of some non-degenerate simplex.
long long signed_indicator(const SimplexChain& c, const Point& x);

// One top-dimensional simplex with an integer weight (orientation folded in).
struct WeightedSimplex {
  long long weight;
  std::vector<Point> v;
};

// Exact common refinement of all facet hyperplanes. Returns true iff every
// cell satisfies `ok(count)`. Throws RefinementTooLarge past the cell cap.
bool refine_and_check(const std::vector<WeightedSimplex>& simplices, bool (*ok)(long long), size_t cell_cap = 0);
// from SCISSORS_CELL_CAP or a default
size_t default_cell_cap();

bool chain_vanishes(const SimplexChain& c);
bool verify_dissection(const Polytope& whole, const std::vector<Polytope>& parts);
bool phi_boundary_check(const std::vector<Point>& points);

struct DihedralEdge {
  int a = 0, b = 0;  // vertex indices into the polytope
  Point p, q;
  Real length;
  exact::AnglePair angle;
  bool reflex = false;  // angle stored is theta - pi
};

std::vector<DihedralEdge> dihedral_edges(const Polytope& p);

}  // namespace scissors::geom
