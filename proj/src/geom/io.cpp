#include "scissors/geom/io.hpp"

#include <fstream>

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"

namespace scissors::geom {

Polytope polytope_from_json(const nlohmann::json& j, Validation mode) {
  try {
    int dim = j.at("dim").get<int>();
    std::vector<Point> verts;
    for (const auto& v : j.at("vertices")) {
      Point p;
      for (const auto& x : v) p.push_back(exact::parse_number(x));
      verts.push_back(std::move(p));
    }
    std::vector<std::vector<int>> cells = j.at("cells").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", std::string());
    return make_polytope(dim, std::move(verts), std::move(cells), std::move(name), mode);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("polytope json: ") + e.what());
  }
}

Polytope load_polytope(const std::string& path, Validation mode) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
  Polytope p = polytope_from_json(j, mode);
  if (p.name.empty()) p.name = path;
  return p;
}

nlohmann::json point_json(const Point& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : p) a.push_back(exact::number_json(x));
  return a;
}

nlohmann::json polytope_json(const Polytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices) verts.push_back(point_json(v));
  return {{"dim", p.dim}, {"vertices", verts}, {"cells", p.cells}, {"name", p.name}};
}

}  // namespace scissors::geom
