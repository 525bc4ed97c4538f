#pragma once
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::exact {

// LLL reduction (delta = 99/100) of linearly independent integer rows, exact
// rational Gram-Schmidt.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

}  // namespace scissors::exact
