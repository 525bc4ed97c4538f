#pragma once
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::exact {

// Distinct irreducible factors over Z of the squarefree part of p; each
// primitive with positive leading coefficient, sorted by (degree, coeffs).
std::vector<ZPoly> irreducible_factors(const ZPoly& p);

bool is_irreducible(const ZPoly& p);

}  // namespace scissors::exact
