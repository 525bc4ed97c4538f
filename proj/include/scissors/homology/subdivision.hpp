#pragma once
#include <functional>

#include "scissors/geom/simplex.hpp"

namespace scissors::homology {

using geom::Point;
using geom::SimplexChain;

// apex * c: prepend the apex to every tuple
SimplexChain cone(const Point& apex, const SimplexChain& c);

// sd(a) = a; sd(s) = b_s * sd(ds) with b_s the barycenter
SimplexChain barycentric_sd(const SimplexChain& c);
SimplexChain sd_power(const SimplexChain& c, int rounds);

// H with dH + Hd = sd^rounds - id. One round is the cone homotopy
// T(s) = b_s * (sd s - s - T ds); r rounds are sum_{j<r} sd^j T.
SimplexChain subdivision_homotopy(const SimplexChain& c, int rounds);
SimplexChain subdivision_homotopy(const std::vector<Point>& simplex, int rounds);

// checks dH + Hd = sd^r - id exactly on one simplex
bool check_subdivision_homotopy(const std::vector<Point>& simplex, int rounds);

// Prism operator of a vertex map f:
//   h(a_0..a_n) = sum_i (-1)^i (a_0, .., a_i, f(a_i), .., f(a_n))
// with dh + hd = f_* - id.
using VertexMap = std::function<Point(const Point&)>;
SimplexChain prism_homotopy(const SimplexChain& c, const VertexMap& f);
SimplexChain push_forward(const SimplexChain& c, const VertexMap& f);

}  // namespace scissors::homology
