#pragma once
#include <vector>

#include "scissors/homology/complex.hpp"

namespace scissors::homology {

// Freudenthal triangulation of the n-torus on the grid (Z/m)^n: a k-simplex
// is a base vertex plus an ordered partition of a direction subset into k blocks.
ChainComplex torus_complex(int n, int m = 3);

// Homology of the n-torus, n in 1..3; asserts betti_k = C(n,k) and no torsion.
std::vector<HomologyResult> torus_homology(int n);

}  // namespace scissors::homology
