#include <doctest.h>

#include <cmath>
#include <random>

#include "scissors/exact/algebraic.hpp"
#include "scissors/exact/angle.hpp"
#include "scissors/exact/error.hpp"
#include "scissors/exact/factor.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/exact/lll.hpp"
#include "scissors/exact/qlinalg.hpp"
#include "scissors/exact/relations.hpp"

using namespace scissors;
using namespace scissors::exact;

namespace {

Real sqrt_of(long n) { return Real(n).sqrt(); }

Rational near(double x) {
  Rational q(x);
  return q;
}

// cos(pi a / b) as a root of T_b(x) - (-1)^a, bracketed numerically
Real cos_pi_rational(long a, long b) {
  std::vector<ZPoly> T{ZPoly{1}, ZPoly{0, 1}};
  for (long k = 2; k <= b; ++k) T.push_back(ZPoly{0, 2} * T[k - 1] - T[k - 2]);
  ZPoly p = T[b] - ZPoly::constant(Integer((a % 2) ? -1 : 1));
  double c = std::cos(M_PI * a / b);
  return Real::make(p, near(c - 1e-9), near(c + 1e-9));
}

bool is_expected_factorization(const ZPoly& p, const std::vector<ZPoly>& fs) {
  ZPoly prod{1};
  for (const auto& f : fs) prod = prod * f;
  return primitive_of(prod) == primitive_of(squarefree_part(p));
}

}  // namespace

TEST_CASE("make_algebraic") {
  Real r2 = Real::make(ZPoly{-2, 0, 1}, 1, 2);
  CHECK(r2.minpoly() == ZPoly{-2, 0, 1});
  Real third = Real::make(ZPoly{-1, 3}, 0, 1);
  CHECK(third.is_rational());
  CHECK(third.rational() == Rational(1, 3));
  Real phi = Real::make(ZPoly{-1, -1, 1}, 1, 2);
  // p(8/5) = -1/25 < 0 < 1/64 = p(13/8) by hand
  CHECK(phi > Real(Rational(8, 5)));
  CHECK(phi < Real(Rational(13, 8)));
  CHECK(std::abs(phi.to_double() - 1.6180339887498949) < 1e-12);
}

TEST_CASE("make_algebraic errors and reducible input") {
  CHECK_THROWS_AS(Real::make(ZPoly{-2, 0, 1}, 2, 3), Error);
  CHECK_THROWS_AS(Real::make(ZPoly{-2, 0, 1}, -2, 2), Error);
  // (x^2-2)(x-3) in [1,2] selects sqrt 2
  Real r = Real::make(ZPoly{-2, 0, 1} * ZPoly{-3, 1}, 1, 2);
  CHECK(r.minpoly() == ZPoly{-2, 0, 1});
  Real three = Real::make(ZPoly{-2, 0, 1} * ZPoly{-3, 1}, Rational(5, 2), 4);
  CHECK(three == Real(3));
}

TEST_CASE("field operations") {
  Real r2 = sqrt_of(2);
  CHECK(r2 * r2 == Real(2));
  CHECK((r2 + (-r2)).is_zero());
  CHECK(compare(r2, Real(Rational(7, 5))) == 1);
  CHECK_THROWS_AS(Real(1) / Real(0), Error);
  CHECK_THROWS_AS(Real(-2).sqrt(), Error);
  CHECK_THROWS_AS((-r2).sqrt(), Error);
}

TEST_CASE("resultant arithmetic produces minimal polynomials") {
  Real s = sqrt_of(2) + sqrt_of(3);
  CHECK(s.minpoly() == ZPoly{1, 0, -10, 0, 1});
  Real p = sqrt_of(2) * sqrt_of(3);
  CHECK(p.minpoly() == ZPoly{-6, 0, 1});
  Real q = sqrt_of(6) / sqrt_of(3);
  CHECK(q == sqrt_of(2));
  Real c = Real::make(ZPoly{-2, 0, 0, 1}, 1, 2);  // cbrt 2
  CHECK(c * c * c == Real(2));
  CHECK((c * c).minpoly() == ZPoly{-4, 0, 0, 1});
  Real nested = (Real(2) + sqrt_of(2)).sqrt();
  CHECK(nested.minpoly() == ZPoly{2, 0, -4, 0, 1});
  CHECK(nested * nested - sqrt_of(2) == Real(2));
}

TEST_CASE("field identities on random algebraic numbers") {
  std::mt19937_64 rng(12345);
  std::vector<Real> pool;
  for (int i = 0; i < 6; ++i) {
    long n = 2 + rng() % 11;
    Real v = sqrt_of(n) + Real(Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
    pool.push_back(v);
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    const Real& a = pool[i];
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == Real(1));
    const Real& b = pool[(i + 1) % pool.size()];
    double da = a.to_double(), db = b.to_double();
    int c = compare(a, b);
    if (std::abs(da - db) > 1e-9) CHECK(c == (da < db ? -1 : 1));
    CHECK(std::abs((a * b).to_double() - da * db) < 1e-9);
    CHECK(std::abs((a - b).to_double() - (da - db)) < 1e-9);
  }
}

TEST_CASE("factorization: known irreducibles and products") {
  CHECK(is_irreducible(ZPoly{1, 0, 0, 0, 1}));                      // x^4+1
  CHECK(is_irreducible(ZPoly{576, 0, -960, 0, 352, 0, -40, 0, 1}));  // Swinnerton-Dyer
  CHECK(is_irreducible(cyclotomic(15)));
  CHECK(is_irreducible(cyclotomic(105)));
  ZPoly p = ZPoly{-2, 0, 1} * ZPoly{-3, 0, 1} * ZPoly{1, 1} * ZPoly{1, 1} * ZPoly{5, 0, 0, 3};
  auto fs = irreducible_factors(p);
  CHECK(fs.size() == 4);
  CHECK(is_expected_factorization(p, fs));
  ZPoly q = ZPoly{1, 0, -10, 0, 1} * ZPoly{1, 0, 0, 0, 1} * ZPoly{-7, 2} * ZPoly{0, 1};
  auto gs = irreducible_factors(q);
  CHECK(gs.size() == 4);
  CHECK(is_expected_factorization(q, gs));
  for (auto& g : gs) CHECK(is_irreducible(g));
  // x^n - 1 splits into cyclotomic factors
  for (int n : {6, 12, 20, 30}) {
    std::vector<Integer> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    ZPoly xn(std::move(v));
    int divisors = 0;
    for (int d = 1; d <= n; ++d) divisors += (n % d == 0);
    CHECK(irreducible_factors(xn).size() == static_cast<size_t>(divisors));
  }
}

TEST_CASE("is_rational_angle") {
  Real half(Rational(1, 2));
  auto a = AnglePair::make(half, sqrt_of(3) / Real(2));
  REQUIRE(is_rational_angle(a).has_value());
  CHECK(*is_rational_angle(a) == Rational(1, 3));
  CHECK(!is_rational_angle(AnglePair::from_cos(Real(Rational(1, 3)))).has_value());
  auto q = is_rational_angle(AnglePair::from_cos(sqrt_of(2) / Real(2)));
  REQUIRE(q.has_value());
  CHECK(*q == Rational(1, 4));
}

TEST_CASE("is_rational_angle agrees with the Chebyshev oracle") {
  for (long b = 1; b <= 16; ++b)
    for (long a = 0; a <= b; ++a) {
      Real c = cos_pi_rational(a, b);
      auto q = is_rational_angle(AnglePair::from_cos(c));
      REQUIRE(q.has_value());
      Rational expect(a, b);
      expect.canonicalize();
      CHECK(*q == expect);
    }
  // algebraic-integer but non-rational angles: 2cos = sqrt 2 + 1/2 is not an algebraic integer;
  // 2cos = sqrt(3) - 1 is one, yet not a cyclotomic value
  CHECK(!is_rational_angle(AnglePair::from_cos((sqrt_of(3) - Real(1)) / Real(2))).has_value());
  CHECK(!is_rational_angle(AnglePair::from_cos(Real(Rational(3, 5)))).has_value());
}

TEST_CASE("find_angle_relations") {
  auto t = AnglePair::from_cos(Real(Rational(1, 3)));
  auto r = find_angle_relations({t, t.supplement()}, 20);
  REQUIRE(r.relations.size() == 1);
  CHECK(((r.relations[0].m[0] == 1 && r.relations[0].m[1] == 1) ||
         (r.relations[0].m[0] == -1 && r.relations[0].m[1] == -1)));
  auto t2 = AnglePair::from_cos(Real(Rational(7, 9)));
  auto r2 = find_angle_relations({t, t2}, 20);
  REQUIRE(r2.relations.size() == 1);
  CHECK(abs(r2.relations[0].m[0]) == 2);
  CHECK(abs(r2.relations[0].m[1]) == 1);
  CHECK(sgn(r2.relations[0].m[0]) == sgn(r2.relations[0].m[1]));
  auto r3 = find_angle_relations({t}, 50);
  CHECK(r3.relations.empty());
  CHECK(r3.height_bound == 50);
}

TEST_CASE("relations re-verify and unrelated angles stay unrelated") {
  auto a = AnglePair::from_cos(Real(Rational(1, 5)));
  auto b = AnglePair::from_cos(Real(Rational(1, 7)));
  auto r = find_angle_relations({a, b}, 20);
  CHECK(r.relations.empty());
  // triangle angles sum to pi
  auto c1 = AnglePair::from_cos(Real(Rational(3, 5)));
  auto c2 = AnglePair::from_cos(Real(Rational(4, 5)));
  auto right = AnglePair::from_cos(Real(0));
  auto rr = find_angle_relations({c1, c2, right}, 20);
  REQUIRE(!rr.relations.empty());
  for (const auto& rel : rr.relations) CHECK(verify_relation({c1, c2, right}, rel.m));
  CHECK(!verify_relation({c1, c2}, {Integer(1), Integer(2)}));
  // generic (non-quadratic) verification path: theta and pi - theta with cos a cubic irrational
  Real cub = Real::make(ZPoly{-1, -3, 0, 8}, Rational(1, 2), 1);  // root of 8x^3-3x-1
  auto g = AnglePair::from_cos(cub);
  std::string field;
  CHECK(verify_relation({g, g.supplement()}, {Integer(1), Integer(1)}, &field));
  CHECK(field == "algebraic");
}

TEST_CASE("number literal round trip") {
  std::vector<Real> xs = {Real(Rational(-7, 3)), sqrt_of(2), sqrt_of(2) + sqrt_of(3),
                          Real::make(ZPoly{-2, 0, 0, 1}, 1, 2)};
  for (const auto& x : xs) {
    auto j = number_json(x);
    CHECK(parse_number(j) == x);
    CHECK(number_json(parse_number(j)) == j);
  }
  CHECK(parse_number(nlohmann::json("rat:6/4")) == Real(Rational(3, 2)));
  CHECK_THROWS_AS(parse_number(nlohmann::json("6/4")), Error);
  CHECK_THROWS_AS(parse_number(nlohmann::json("rat:1/0")), Error);
}

TEST_CASE("canonical interval ignores refinement history") {
  Real a = sqrt_of(2) + sqrt_of(3);
  Real b = sqrt_of(2) + sqrt_of(3);
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 200);
  b.approx(w);
  CHECK(a.canonical_interval() == b.canonical_interval());
}

TEST_CASE("lll finds the short relation") {
  // rows (e_i, N*x_i) with x = (1, sqrt2 approx, 1 + sqrt2 approx)
  Integer N("1000000000000");
  Integer s2("1414213562373");
  std::vector<std::vector<Integer>> b = {{1, 0, 0, N}, {0, 1, 0, s2}, {0, 0, 1, N + s2}};
  lll_reduce(b);
  bool found = false;
  for (auto& r : b)
    if (r[3] == 0 && abs(r[0]) == 1 && abs(r[1]) == 1 && abs(r[2]) == 1) found = true;
  CHECK(found);
}

TEST_CASE("rational linear algebra") {
  QVec a, b, c;
  a.add(0, 1); a.add(1, 2);
  b.add(1, 1); b.add(2, 1);
  c.add(0, 1); c.add(1, 3); c.add(2, 1);  // a + b
  a.normalize(); b.normalize(); c.normalize();
  CHECK(rank_of({a, b, c}) == 2);
  auto ker = kernel({a, b, c});
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].at(0) == -ker[0].at(2));
  CHECK(ker[0].at(1) == -ker[0].at(2));
  CHECK(same_span({a, b}, {c, a}));
}
