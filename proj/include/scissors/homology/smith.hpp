#pragma once
#include <vector>

#include "scissors/homology/sparse.hpp"

namespace scissors::homology {

struct SmithForm {
  SparseIntMatrix U, D, V;  // U * m * V = D
  std::vector<Integer> diagonal;  // nonzero entries, d1 | d2 | ...
};

// Dense elimination with smallest-pivot choice; U * m * V = D and
// |det U| = |det V| = 1 are re-verified before returning.
SmithForm smith_normal_form(const SparseIntMatrix& m);

// Invariant factors only (no transforms), by sparse elimination. This is the
// path homology_of uses; it agrees with smith_normal_form(m).diagonal.
std::vector<Integer> invariant_factors(const SparseIntMatrix& m);

// |det| by fraction-free (Bareiss) elimination; square matrices only
Integer abs_determinant(const SparseIntMatrix& m);

}  // namespace scissors::homology
