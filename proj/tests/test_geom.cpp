#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "scissors/exact/error.hpp"
#include "scissors/geom/construct.hpp"
#include "scissors/geom/io.hpp"

using namespace scissors;
using namespace scissors::geom;
using exact::Rational;
using exact::Real;

namespace {

Point P(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

// Sarrus rule over rationals, written independently of the library
Rational det3(const std::vector<std::vector<Rational>>& m) {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1] -
         m[0][2] * m[1][1] * m[2][0] - m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

std::vector<Rational> rcross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational rdot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::multiset<std::string> angle_multiset(const Polytope& p) {
  std::multiset<std::string> s;
  for (const auto& e : dihedral_edges(p)) s.insert(e.angle.cos.to_string() + "|" + e.length.to_string());
  return s;
}

}  // namespace

TEST_CASE("simplex volume and orientation") {
  Simplex unit{3, {P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}};
  CHECK(simplex_volume(unit) == Real(Rational(1, 6)));
  CHECK(orientation_sign(unit) == 1);
  Simplex swapped{3, {P({0, 0, 0}), P({0, 1, 0}), P({1, 0, 0}), P({0, 0, 1})}};
  CHECK(orientation_sign(swapped) == -1);
  CHECK(simplex_volume(swapped) == Real(Rational(-1, 6)));
  Simplex rep{3, {P({0, 0, 0}), P({1, 0, 0}), P({1, 0, 0}), P({0, 0, 1})}};
  CHECK(simplex_volume(rep).is_zero());
  CHECK(orientation_sign(Simplex{2, {P({0, 0}), P({1, 1}), P({2, 2})}}) == 0);

  std::vector<std::vector<long>> v{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = v[i + 1][j] - v[0][j];
  Rational oracle = det3(m) / 6;
  CHECK(abs(oracle) == Rational(8, 3));
  Simplex t{3, {P({1, 1, 1}), P({1, -1, -1}), P({-1, 1, -1}), P({-1, -1, 1})}};
  CHECK(simplex_volume(t) == Real(oracle));

  // even permutations keep the sign, odd ones flip it
  Simplex even{3, {t.v[1], t.v[2], t.v[0], t.v[3]}};
  CHECK(simplex_volume(even) == simplex_volume(t));
  Simplex odd{3, {t.v[1], t.v[0], t.v[2], t.v[3]}};
  CHECK(simplex_volume(odd) == -simplex_volume(t));

  CHECK_THROWS_AS(simplex_volume(Simplex{3, {P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0})}}), Error);
}

TEST_CASE("boundary operator") {
  Point a = P({0, 0}), b = P({1, 0}), c = P({0, 1});
  SimplexChain s(2);
  s.add({a, b, c}, 1);
  SimplexChain expect(2);
  expect.add({b, c}, 1);
  expect.add({a, c}, -1);
  expect.add({a, b}, 1);
  CHECK(boundary(s) == expect);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SimplexChain ch(3);
    for (int k = 0; k < 3; ++k) {
      std::vector<Point> simp;
      for (int i = 0; i < 4; ++i)
        simp.push_back(Point{Real(rng.rational(5, 3)), Real(rng.rational(5, 3)), Real(rng.rational(5, 3))});
      ch.add(simp, rng.uniform(-3, 3));
    }
    CHECK(boundary(boundary(ch)).is_zero());
  }

  // cube: interior faces cancel; count survivors with an index multiset
  Polytope cube = unit_cube();
  std::map<std::vector<int>, int> faces;
  for (const auto& cell : cube.cells)
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<int> f;
      for (int j = 0; j < 4; ++j)
        if (j != skip) f.push_back(cell[j]);
      std::sort(f.begin(), f.end());
      faces[f]++;
    }
  int outer = 0;
  for (const auto& [f, n] : faces) outer += n == 1;
  CHECK(outer == 12);
  // signed Kuhn chain with monotone vertex order: shared faces match as tuples
  SimplexChain kuhn(3);
  std::vector<int> perm{0, 1, 2};
  do {
    std::vector<Point> simp{P({0, 0, 0})};
    Point cur = P({0, 0, 0});
    for (int k : perm) {
      cur[k] = Real(1);
      simp.push_back(cur);
    }
    kuhn.add(simp, orient(simp));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(boundary(kuhn).size() == 12);
  CHECK(boundary(boundary(kuhn)).is_zero());
  CHECK(boundary_facets(cube).size() == 12);
}

TEST_CASE("polytope validation") {
  CHECK(unit_cube().volume() == Real(1));
  CHECK(unit_cube().warnings.empty());

  auto neg = make_polytope(2, {P({0, 0}), P({0, 1}), P({1, 0})}, {{0, 1, 2}});
  CHECK(neg.warnings.size() == 1);
  CHECK(neg.volume() == Real(Rational(1, 2)));

  // overlapping triangles in the plane
  CHECK_THROWS_AS(make_polytope(2, {P({0, 0}), P({2, 0}), P({0, 2}), P({1, 1}), P({-1, 1}), P({1, -1})},
                                {{0, 1, 2}, {3, 4, 5}}),
                  Error);
  // two triangles meeting in a single vertex: non-manifold boundary
  try {
    make_polytope(2, {P({0, 0}), P({1, 0}), P({0, 1}), P({-1, 0}), P({0, -1})}, {{0, 1, 2}, {0, 3, 4}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonManifoldBoundary);
  }
  // two cubes sharing only an edge
  Polytope c = unit_cube();
  std::vector<Point> v = c.vertices;
  std::vector<std::vector<int>> cells = c.cells;
  for (const auto& p : c.vertices) v.push_back(Point{p[0] + Real(1), p[1] + Real(1), p[2]});
  for (auto cell : c.cells) {
    for (int& k : cell) k += 8;
    cells.push_back(cell);
  }
  try {
    make_polytope(3, v, cells);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonManifoldBoundary);
  }
  CHECK_THROWS_AS(make_polytope(3, {P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({1, 1, 0})}, {{0, 1, 2, 3}}), Error);

  // overlapping tetrahedra caught by the strict refinement
  std::vector<Point> ov{P({0, 0, 0}), P({4, 0, 0}), P({0, 4, 0}), P({0, 0, 4}),
                        P({1, 1, 1}), P({5, 1, 1}), P({1, 5, 1}), P({1, 1, 5})};
  CHECK_THROWS_AS(make_polytope(3, ov, {{0, 1, 2, 3}, {4, 5, 6, 7}}, "", Validation::Strict), Error);
  // the sample audit misses this pair (neither audit point lies in the other cell) ...
  CHECK_NOTHROW(make_polytope(3, ov, {{0, 1, 2, 3}, {4, 5, 6, 7}}));
  // ... but catches a nested one
  std::vector<Point> nest{P({0, 0, 0}), P({4, 0, 0}), P({0, 4, 0}), P({0, 0, 4}),
                          P({1, 1, 1}), P({2, 1, 1}), P({1, 2, 1}), P({1, 1, 2})};
  CHECK_THROWS_AS(make_polytope(3, nest, {{0, 1, 2, 3}, {4, 5, 6, 7}}), Error);
}

TEST_CASE("signed indicator") {
  SimplexChain cube = unit_cube().chain();
  CHECK(signed_indicator(cube, Point{Real(Rational(1, 3)), Real(Rational(1, 5)), Real(Rational(1, 7))}) == 1);
  CHECK(signed_indicator(cube, P({2, 2, 2})) == 0);
  CHECK_THROWS_AS(signed_indicator(cube, Point{Real(Rational(1, 3)), Real(Rational(1, 3)), Real(Rational(1, 3))}),
                  Error);  // on an internal face x=y

  // cube split by the plane x + y = 1
  std::vector<Point> pts;
  for (const auto& p : unit_cube().vertices) pts.push_back(p);
  auto [pos, neg] = split_points(pts, P({1, 1, 0}), Real(1));
  SimplexChain diff = cube - convex_polytope(pos).chain() - convex_polytope(neg).chain();
  CHECK(signed_indicator(diff, Point{Real(Rational(1, 7)), Real(Rational(2, 9)), Real(Rational(3, 11))}) == 0);
  CHECK(signed_indicator(diff, Point{Real(Rational(5, 7)), Real(Rational(3, 5)), Real(Rational(3, 11))}) == 0);
}

TEST_CASE("verify dissection") {
  Polytope cube = unit_cube();
  std::vector<Polytope> tets;
  for (const auto& cell : cube.cells) {
    std::vector<Point> v;
    for (int k : cell) v.push_back(cube.vertices[k]);
    tets.push_back(make_polytope(3, v, {{0, 1, 2, 3}}));
  }
  CHECK(verify_dissection(cube, tets));
  auto five = tets;
  five.pop_back();
  CHECK_FALSE(verify_dissection(cube, five));

  // equal volume but different regions
  Polytope shifted = transform(cube, {{Real(1), Real(0), Real(0)}, {Real(0), Real(1), Real(0)}, {Real(0), Real(0), Real(1)}},
                               Point{Real(Rational(1, 2)), Real(0), Real(0)});
  CHECK_FALSE(verify_dissection(cube, {shifted}));

  // triangle vs its barycentric subdivision
  Point a = P({0, 0}), b = P({6, 0}), c = P({0, 6});
  Point ab = P({3, 0}), bc = P({3, 3}), ca = P({0, 3}), g = P({2, 2});
  Polytope tri = make_polytope(2, {a, b, c}, {{0, 1, 2}});
  std::vector<Polytope> small;
  for (auto t : std::vector<std::vector<Point>>{{a, ab, g}, {ab, b, g}, {b, bc, g}, {bc, c, g}, {c, ca, g}, {ca, a, g}})
    small.push_back(make_polytope(2, t, {{0, 1, 2}}));
  CHECK(verify_dissection(tri, small));
  Polytope sd = make_polytope(2, {a, b, c, ab, bc, ca, g},
                              {{0, 3, 6}, {3, 1, 6}, {1, 4, 6}, {4, 2, 6}, {2, 5, 6}, {5, 0, 6}});
  CHECK(verify_dissection(tri, {sd}));
  small.pop_back();
  small.push_back(make_polytope(2, {ca, a, P({1, 1})}, {{0, 1, 2}}));
  CHECK_FALSE(verify_dissection(tri, small));

  // tiny cap trips the resource error
  std::vector<WeightedSimplex> ws;
  for (size_t i = 0; i < cube.cells.size(); ++i) ws.push_back({1, cube.cell_points(i)});
  CHECK_THROWS_AS(refine_and_check(ws, [](long long c) { return c <= 1; }, 3), Error);
}

TEST_CASE("phi boundary check") {
  Point o3 = P({0, 0, 0}), e1 = P({1, 0, 0}), e2 = P({0, 1, 0}), e3 = P({0, 0, 1});
  CHECK(phi_boundary_check({o3, e1, e2, e3, P({1, 1, 1})}));
  CHECK(phi_boundary_check(
      {o3, e1, e2, e3, Point{Real(Rational(1, 8)), Real(Rational(1, 8)), Real(Rational(1, 8))}}));
  CHECK(phi_boundary_check({P({0, 0}), P({1, 0}), P({0, 1}), P({1, 1})}));
  // degenerate configuration: four coplanar points plus one apex
  CHECK(phi_boundary_check({o3, e1, e2, P({1, 1, 0}), e3}));

  Rng rng(2024);
  for (int dim : {2, 3})
    for (int k = 0; k < 200; ++k) {
      std::vector<Point> pts;
      for (int i = 0; i < dim + 2; ++i) {
        Point p;
        for (int d = 0; d < dim; ++d) p.emplace_back(rng.rational(4, 2));
        pts.push_back(p);
      }
      if (affine_dimension(pts) < dim) continue;
      CHECK(phi_boundary_check(pts));
    }
}

TEST_CASE("dihedral angles") {
  auto cube_edges = dihedral_edges(unit_cube());
  int right = 0, flat = 0;
  for (const auto& e : cube_edges) {
    if (e.angle.cos.is_zero()) {
      ++right;
      CHECK(e.length == Real(1));
    } else if (e.angle.cos == Real(-1)) {
      ++flat;
    }
  }
  CHECK(right == 12);
  CHECK(flat == 6);
  CHECK(cube_edges.size() == 18);

  // oracle: outward normals of the unscaled tetrahedron
  std::vector<std::vector<Rational>> tv{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  auto sub = [](auto a, auto b) { return std::vector<Rational>{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto n_opp = [&](int skip) {
    std::vector<std::vector<Rational>> f;
    for (int i = 0; i < 4; ++i)
      if (i != skip) f.push_back(tv[i]);
    auto n = rcross(sub(f[1], f[0]), sub(f[2], f[0]));
    if (rdot(n, sub(tv[skip], f[0])) > 0) n = {-n[0], -n[1], -n[2]};
    return n;
  };
  auto n0 = n_opp(0), n1 = n_opp(1);
  Rational cos_oracle = -rdot(n0, n1) / rdot(n0, n0);  // equal norms
  CHECK(cos_oracle == Rational(1, 3));

  auto tet = dihedral_edges(regular_tetrahedron_edge1());
  CHECK(tet.size() == 6);
  for (const auto& e : tet) {
    CHECK(e.angle.cos == Real(cos_oracle));
    CHECK(e.length == Real(1));
    CHECK(e.angle.sin.sign() > 0);
  }

  auto oct = dihedral_edges(regular_octahedron_edge1());
  CHECK(oct.size() == 12);
  for (const auto& e : oct) {
    CHECK(e.angle.cos == Real(Rational(-1, 3)));
    CHECK(e.length == Real(1));
  }

  // L-shaped prism has one reflex vertical edge
  Polytope L = prism(make_polytope(2, {P({0, 0}), P({2, 0}), P({2, 1}), P({1, 1}), P({1, 2}), P({0, 2})},
                                   {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}}),
                     Real(1));
  int reflex = 0;
  for (const auto& e : dihedral_edges(L)) {
    if (e.reflex) {
      ++reflex;
      CHECK(e.angle.cos.is_zero());  // 3pi/2 stored as pi/2
    }
  }
  CHECK(reflex == 1);
}

TEST_CASE("prisms") {
  Polytope sq = make_polytope(2, {P({0, 0}), P({1, 0}), P({1, 1}), P({0, 1})}, {{0, 1, 2}, {0, 2, 3}});
  Polytope cube = prism(sq, Real(1));
  CHECK(cube.volume() == Real(1));
  CHECK(verify_dissection(cube, {unit_cube()}));

  Polytope rt = make_polytope(2, {P({0, 0}), P({1, 0}), P({0, 1})}, {{0, 1, 2}});
  CHECK(prism(rt, Real(2)).volume() == Real(1));

  // hexagon area (3 sqrt3 / 2) s^2 with s = 1
  Real oracle = Real(3).sqrt() * Real(Rational(3, 2));
  Polytope hex = prism(regular_hexagon(), Real(1));
  CHECK(hex.volume() == oracle);
  CHECK(regular_hexagon().volume() == oracle);

  Rng rng(5);
  for (int k = 0; k < 5; ++k) {
    Polytope poly = random_rational_polygon(rng);
    Polytope pr = prism(poly, Real(Rational(3, 2)));
    CHECK(pr.volume() == poly.volume() * Real(Rational(3, 2)));
    for (const auto& e : dihedral_edges(pr)) CHECK(e.angle.sin.sign() >= 0);
  }
}

TEST_CASE("isometry invariance") {
  Real h = Real(Rational(1, 2)).sqrt();
  Real z(0), one(1);
  std::vector<std::vector<Real>> rot{{h, -h, z}, {h, h, z}, {z, z, one}};
  std::vector<std::vector<Real>> refl{{one, z, z}, {z, -one, z}, {z, z, one}};
  for (const Polytope& p : {unit_cube(), regular_tetrahedron_edge1()}) {
    for (const auto& m : {rot, refl}) {
      Polytope q = transform(p, m, Point{Real(Rational(1, 3)), z, Real(2)});
      CHECK(q.volume() == p.volume());
      CHECK(angle_multiset(q) == angle_multiset(p));
    }
  }
}

TEST_CASE("convex hulls and plane splits") {
  std::vector<Point> pts = unit_cube().vertices;
  pts.push_back(Point{Real(Rational(1, 2)), Real(Rational(1, 2)), Real(Rational(1, 2))});
  pts.push_back(Point{Real(Rational(1, 2)), Real(0), Real(0)});  // on an edge
  Polytope hull = convex_polytope(pts);
  CHECK(hull.vertices.size() == 8);
  CHECK(hull.volume() == Real(1));
  CHECK(verify_dissection(hull, {unit_cube()}));

  Rng rng(99);
  for (int k = 0; k < 6; ++k) {
    auto s = random_plane_split(rng, k % 2 == 1);
    CHECK(s.whole.volume() == s.pos.volume() + s.neg.volume());
    CHECK(verify_dissection(s.whole, {s.pos, s.neg}));
    CHECK_FALSE(verify_dissection(s.whole, {s.pos}));
  }
}

TEST_CASE("polytope json round trip") {
  Polytope t = regular_tetrahedron_edge1();
  auto j = polytope_json(t);
  Polytope back = polytope_from_json(j);
  CHECK(back.volume() == t.volume());
  CHECK(polytope_json(back) == j);
  CHECK(t.volume() == Real(2).sqrt() / Real(12));
  CHECK_THROWS_AS(polytope_from_json(nlohmann::json::parse(R"({"dim":3})")), Error);
  CHECK_THROWS_AS(polytope_from_json(nlohmann::json::parse(R"({"dim":2,"vertices":[[0,0],[1,0],[0,1]],"cells":[[0,1,5]]})")),
                  Error);
}
