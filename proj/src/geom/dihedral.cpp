#include <map>

#include "scissors/exact/error.hpp"
#include "scissors/geom/polytope.hpp"

namespace scissors::geom {

std::vector<DihedralEdge> dihedral_edges(const Polytope& p) {
  if (p.dim != 3) fail(ErrorKind::DimensionMismatch, "dihedral edges need a 3-polytope");
  auto tris = boundary_facets(p);
  std::vector<Point> normals;
  for (const auto& t : tris)
    normals.push_back(cross(p.vertices[t[1]] - p.vertices[t[0]], p.vertices[t[2]] - p.vertices[t[0]]));

  // (min,max) -> [(triangle, +1 if it runs min->max)]
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges;
  for (size_t ti = 0; ti < tris.size(); ++ti)
    for (int k = 0; k < 3; ++k) {
      int a = tris[ti][k], b = tris[ti][(k + 1) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back({static_cast<int>(ti), a < b ? 1 : -1});
    }

  std::vector<DihedralEdge> out;
  for (const auto& [key, uses] : edges) {
    if (uses.size() != 2) fail(ErrorKind::NonManifoldBoundary, "edge on " + std::to_string(uses.size()) + " boundary triangles");
    if (uses[0].second == uses[1].second) fail(ErrorKind::UnorientableBoundary, "inconsistent facet orientation");
    int t1 = uses[0].first, t2 = uses[1].first;
    const Point& n1 = normals[t1];
    const Point& n2 = normals[t2];
    int apex2 = -1;
    for (int v : tris[t2])
      if (v != key.first && v != key.second) apex2 = v;

    DihedralEdge e;
    e.a = key.first;
    e.b = key.second;
    e.p = p.vertices[e.a];
    e.q = p.vertices[e.b];
    Point d = e.q - e.p;
    e.length = dot(d, d).sqrt();

    int bend = dot(n1, p.vertices[apex2] - e.p).sign();
    Real nn = dot(n1, n2);
    if (bend == 0) {
      // coplanar facets: straight angle unless folded back
      if (nn.sign() <= 0) fail(ErrorKind::InvalidPolytope, "boundary folds onto itself");
      e.angle = exact::AnglePair{Real(-1), Real(0)};
    } else {
      Real c2 = nn * nn / (dot(n1, n1) * dot(n2, n2));
      Real c = c2.sqrt();
      // convex: cos = -n1.n2/|n1||n2|; reflex: store theta - pi, cos flips
      int csign = (bend < 0 ? -1 : 1) * nn.sign();
      if (csign < 0) c = -c;
      e.angle = exact::AnglePair{c, (Real(1) - c2).sqrt()};
      e.reflex = bend > 0;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace scissors::geom
