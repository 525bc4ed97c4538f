#include <doctest.h>

#include "scissors/dehn/verdict.hpp"
#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/geom/construct.hpp"

using namespace scissors;
using namespace scissors::dehn;
using exact::AnglePair;
using exact::Rational;
using exact::Real;

namespace {

AnglePair acos_q(long p, long q) { return AnglePair::from_cos(Real(Rational(p, q))); }

geom::Point P(std::initializer_list<long> xs) {
  geom::Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

bool equal_tensors(const DehnTensor& a, const DehnTensor& b) { return tensor_sub(a, b).empty(); }

}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize({{Real(3), AnglePair::from_cos(Real(0))}}).empty());
  AnglePair th = acos_q(1, 3);
  CHECK(normalize({{Real(1), th}, {Real(1), th.supplement()}}).empty());
  CHECK(normalize({{Real(2), th}, {Real(-2), th}}).empty());

  auto one = normalize({{Real(2), th}, {Real(3), th}, {Real(0), acos_q(1, 5)}});
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms[0].length == Real(5));

  // double angle: 2 arccos(1/3) + arccos(7/9) = pi
  auto dbl = normalize({{Real(1), th}, {Real(1), acos_q(7, 9)}});
  REQUIRE(dbl.terms.size() == 1);
  // arccos(7/9) is the smaller angle and survives: 1 (x) t1 = -(1/2) (x) t2
  CHECK(dbl.terms[0].angle == acos_q(7, 9));
  CHECK(dbl.terms[0].length == Real(Rational(1, 2)));
  CHECK(dbl.relations_used.size() == 1);

  auto unk = normalize({{Real(1), acos_q(1, 5)}, {Real(1), acos_q(1, 7)}});
  CHECK(unk.terms.size() == 2);
  CHECK(is_zero(unk) == ZeroStatus::Unknown);
  CHECK(unk.height_bound == kDefaultHeightBound);
  CHECK(unk.relations_used.empty());

  CHECK(is_zero(normalize({})) == ZeroStatus::Zero);
  CHECK(is_zero(normalize({{Real(1), th}})) == ZeroStatus::NonzeroCertified);
}

TEST_CASE("dehn invariants of classical solids") {
  CHECK(is_zero(dehn_invariant(geom::unit_cube())) == ZeroStatus::Zero);
  CHECK(is_zero(dehn_invariant(geom::box(1, 2, Rational(7, 3)))) == ZeroStatus::Zero);

  auto d = dehn_invariant(geom::regular_tetrahedron_edge1());
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].length == Real(6));
  CHECK(d.terms[0].angle.cos == Real(Rational(1, 3)));
  CHECK(is_zero(d) == ZeroStatus::NonzeroCertified);

  // octahedron: 12 edges at arccos(-1/3) = pi - arccos(1/3)
  auto o = dehn_invariant(geom::regular_octahedron_edge1());
  REQUIRE(o.terms.size() == 1);
  CHECK(o.terms[0].length == Real(12));

  // 2 D(tetra) + D(octahedron) = 12 (x) a + 12 (x) (pi - a) = 0
  CHECK(tensor_add(tensor_add(d, d), o).empty());
  auto o2 = tensor_add(o, normalize({{Real(12), AnglePair::from_cos(Real(Rational(1, 3)))}}));
  CHECK(o2.empty());
}

TEST_CASE("prism kernel") {
  // oracle: the triangle's interior angles sum to pi, so a relation (1,1,1) exists
  auto tri = geom::make_polytope(2, {P({0, 0}), P({5, 1}), P({2, 4})}, {{0, 1, 2}});
  auto pr = geom::prism(tri, Real(1));
  auto d = dehn_invariant(pr);
  CHECK(is_zero(d) == ZeroStatus::Zero);
  CHECK_FALSE(d.relations_used.empty());

  Rng rng(17);
  for (int k = 0; k < 6; ++k) {
    auto poly = geom::random_rational_polygon(rng);
    CHECK(is_zero(dehn_invariant(geom::prism(poly, Real(Rational(2, 3))))) == ZeroStatus::Zero);
  }
  CHECK(is_zero(dehn_invariant(geom::prism(geom::regular_hexagon(), Real(1)))) == ZeroStatus::Zero);
}

TEST_CASE("additivity under plane splits") {
  Rng rng(3);
  for (int k = 0; k < 4; ++k) {
    auto s = geom::random_plane_split(rng, k % 2 == 1);
    REQUIRE(geom::verify_dissection(s.whole, {s.pos, s.neg}));
    auto whole = dehn_invariant(s.whole);
    auto parts = tensor_add(dehn_invariant(s.pos), dehn_invariant(s.neg));
    CHECK(equal_tensors(whole, parts));
  }
}

TEST_CASE("isometry and orientation invariance") {
  Real h = Real(Rational(1, 2)).sqrt();
  Real z(0), one(1);
  auto t = geom::regular_tetrahedron_edge1();
  auto rot = geom::transform(t, {{h, -h, z}, {h, h, z}, {z, z, one}}, geom::Point{one, z, z});
  auto refl = geom::transform(t, {{-one, z, z}, {z, one, z}, {z, z, one}}, geom::Point{z, z, z});
  CHECK(equal_tensors(dehn_invariant(rot), dehn_invariant(t)));
  CHECK(equal_tensors(dehn_invariant(refl), dehn_invariant(t)));

  // every cell listed with reversed orientation
  auto c = geom::unit_cube();
  auto cells = c.cells;
  for (auto& cell : cells) std::swap(cell[2], cell[3]);
  auto rev = geom::make_polytope(3, c.vertices, cells);
  CHECK(rev.warnings.size() == cells.size());
  auto pr = geom::prism(geom::make_polytope(2, {P({0, 0}), P({3, 0}), P({1, 2})}, {{0, 1, 2}}), Real(1));
  auto prc = pr.cells;
  for (auto& cell : prc) std::swap(cell[0], cell[1]);
  CHECK(equal_tensors(dehn_invariant(geom::make_polytope(3, pr.vertices, prc)), dehn_invariant(pr)));
}

TEST_CASE("congruence verdicts and certificates") {
  auto cube = geom::unit_cube();
  auto tet = geom::regular_tetrahedron_unit_volume();
  CHECK(tet.volume() == Real(1));
  auto v = compare_polytopes(cube, tet);
  CHECK(v.tag == Verdict::NotCongruent_Dehn);
  auto cert = verdict_certificate(cube, tet, v);
  // 2 cos = 2/3 has minimal polynomial 3x - 2, which is not monic
  CHECK(cert["witness"]["minpoly_2cos"] == nlohmann::json::array({-2, 3}));
  CHECK(cert["witness"]["monic"] == false);
  auto rc = recheck(cert);
  CHECK(rc.ok);

  auto tampered = cert;
  tampered["witness"]["cos"] = "rat:1/4";
  CHECK_FALSE(recheck(tampered).ok);
  tampered = cert;
  tampered["volume_b"] = "rat:2/1";
  CHECK_FALSE(recheck(tampered).ok);

  Real h = Real(Rational(1, 2)).sqrt();
  Real z(0), one(1);
  auto rot = geom::transform(cube, {{h, -h, z}, {h, h, z}, {z, z, one}}, geom::Point{z, z, z});
  auto cv = compare_polytopes(cube, rot);
  CHECK(cv.tag == Verdict::Congruent_DSJ);
  CHECK(recheck(verdict_certificate(cube, rot, cv)).ok);

  auto bv = compare_polytopes(geom::box(1, 1, 2), cube);
  CHECK(bv.tag == Verdict::NotCongruent_Volume);
  CHECK(recheck(verdict_certificate(geom::box(1, 1, 2), cube, bv)).ok);

  // corner tetrahedron with legs 1, 2, 3 also has volume 1
  auto corner = geom::make_polytope(3, {P({0, 0, 0}), P({1, 0, 0}), P({0, 2, 0}), P({0, 0, 3})}, {{0, 1, 2, 3}});
  auto uv = compare_polytopes(cube, corner);
  CHECK(uv.tag == Verdict::Unknown);
  CHECK(uv.height_bound == kDefaultHeightBound);
  CHECK(uv.difference.terms.size() == 3);

  auto nz = nonzero_certificate(geom::regular_tetrahedron_edge1(), dehn_invariant(geom::regular_tetrahedron_edge1()));
  CHECK(recheck(nz).ok);
  CHECK_FALSE(recheck(nlohmann::json{{"kind", "nonsense"}}).ok);
}

TEST_CASE("tensor json") {
  auto d = dehn_invariant(geom::regular_tetrahedron_edge1());
  auto j = tensor_json(d);
  auto back = tensor_from_json(j);
  CHECK(equal_tensors(back, d));
  auto t = tensor_from_json(nlohmann::json::parse(R"({"terms":[{"length":"rat:1/1","cos":"rat:1/3"}],"height_bound":5})"));
  CHECK(t.height_bound == 5);
  CHECK(t.terms.size() == 1);
  CHECK_THROWS_AS(tensor_from_json(nlohmann::json::parse(R"({"terms":[{"length":"rat:1/1","cos":"rat:2/1"}]})")), Error);
}
