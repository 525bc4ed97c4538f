#pragma once
#include <json.hpp>
#include <string>

#include "scissors/geom/polytope.hpp"

namespace scissors::geom {

// {"dim": 2|3, "vertices": [[num,...],...], "cells": [[i,...],...], "name": string?}
Polytope polytope_from_json(const nlohmann::json& j, Validation mode = Validation::Default);
Polytope load_polytope(const std::string& path, Validation mode = Validation::Default);
nlohmann::json polytope_json(const Polytope& p);
nlohmann::json point_json(const Point& p);

}  // namespace scissors::geom
