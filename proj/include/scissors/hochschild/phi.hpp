#pragma once
#include <json.hpp>
#include <utility>
#include <vector>

#include "scissors/dehn/tensor.hpp"
#include "scissors/hochschild/tower.hpp"

namespace scissors::hochschild {

// sum l_i / sin(theta_i) d cos(theta_i); sin defaults to the tower's square
// root of 1 - cos^2 (NotExpressible when there is none)
KahlerElement phi_terms(const FieldTower& tower, const std::vector<PhiTerm>& terms);

// Each term's cos is looked up in `embedding`; a cos without an entry is an
// algebraic number, so its differential (and the term) vanishes.
KahlerElement phi_map(const FieldTower& tower, const dehn::DehnTensor& t,
                      const std::vector<std::pair<exact::Real, TowerElem>>& embedding);

// {"terms": [{"length": "2", "cos": "t", "sin": "s"}]}, entries are tower expressions
std::vector<PhiTerm> phi_terms_from_json(const FieldTower& tower, const nlohmann::json& j);

// a length as a tower element (rational combinations of square roots of rationals)
TowerElem length_in_tower(const FieldTower& tower, const dehn::Length& l);

}  // namespace scissors::hochschild
