#include <doctest.h>

#include <numeric>

#include "scissors/exact/error.hpp"
#include "scissors/exact/rng.hpp"
#include "scissors/homology/flags.hpp"
#include "scissors/homology/groups.hpp"
#include "scissors/homology/smith.hpp"
#include "scissors/homology/span.hpp"
#include "scissors/homology/subdivision.hpp"
#include "scissors/homology/torus.hpp"

using namespace scissors;
using namespace scissors::homology;
using exact::Real;

namespace {

geom::Point P(std::initializer_list<long> xs) {
  geom::Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

// d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors (brute force)
long long det_ll(std::vector<std::vector<long long>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long r = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> m;
    for (size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      m.push_back(row);
    }
    r += (j % 2 ? -1 : 1) * a[0][j] * det_ll(m);
  }
  return r;
}

std::vector<long long> determinantal_divisors(const std::vector<std::vector<long long>>& a) {
  size_t R = a.size(), C = a[0].size();
  std::vector<long long> out;
  long long prev = 1;
  for (size_t k = 1; k <= std::min(R, C); ++k) {
    long long g = 0;
    std::vector<size_t> rs(k), cs(k);
    // iterate k-subsets of rows and columns via bitmasks
    for (unsigned rm = 0; rm < (1u << R); ++rm) {
      if (__builtin_popcount(rm) != static_cast<int>(k)) continue;
      for (unsigned cm = 0; cm < (1u << C); ++cm) {
        if (__builtin_popcount(cm) != static_cast<int>(k)) continue;
        std::vector<std::vector<long long>> m;
        for (size_t i = 0; i < R; ++i) {
          if (!(rm >> i & 1)) continue;
          std::vector<long long> row;
          for (size_t j = 0; j < C; ++j)
            if (cm >> j & 1) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = std::gcd(g, std::llabs(det_ll(m)));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

SparseIntMatrix from_ll(const std::vector<std::vector<long long>>& a) {
  SparseIntMatrix m(a.size(), a[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m.set(i, j, Integer(static_cast<long>(a[i][j])));
  return m;
}

// independent rank over Q: plain fraction Gaussian elimination on a dense copy
size_t oracle_rank(const SparseIntMatrix& m) {
  std::vector<std::vector<exact::Rational>> a(m.rows(), std::vector<exact::Rational>(m.cols()));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = exact::Rational(v);
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      exact::Rational f = a[i][c] / a[r][c];
      for (size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<long> bettis(const std::vector<HomologyResult>& h) {
  std::vector<long> b;
  for (const auto& x : h) b.push_back(x.betti);
  return b;
}

long pascal(int n, int k) {
  std::vector<std::vector<long>> t(n + 1, std::vector<long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

}  // namespace

TEST_CASE("smith normal form") {
  auto id = smith_normal_form(SparseIntMatrix::identity(3));
  CHECK(id.D == SparseIntMatrix::identity(3));

  auto s = smith_normal_form(from_ll({{2, 4}, {6, 8}}));
  REQUIRE(s.diagonal.size() == 2);
  // gcd of entries is 2, |det| = 8
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 4);
  CHECK(s.U * from_ll({{2, 4}, {6, 8}}) * s.V == s.D);

  auto z = smith_normal_form(SparseIntMatrix(3, 2));
  CHECK(z.D.is_zero());
  CHECK(z.diagonal.empty());

  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    int R = static_cast<int>(rng.uniform(1, 4)), C = static_cast<int>(rng.uniform(1, 4));
    std::vector<std::vector<long long>> a(R, std::vector<long long>(C));
    for (auto& row : a)
      for (auto& x : row) x = rng.uniform(0, 2) == 0 ? 0 : rng.uniform(-9, 9);
    auto expect = determinantal_divisors(a);
    auto m = from_ll(a);
    auto sf = smith_normal_form(m);
    auto inv = invariant_factors(m);
    REQUIRE(sf.diagonal.size() == expect.size());
    REQUIRE(inv.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
      CHECK(sf.diagonal[i] == Integer(static_cast<long>(expect[i])));
      CHECK(inv[i] == Integer(static_cast<long>(expect[i])));
    }
    CHECK(rational_rank(m) == oracle_rank(m));
  }
}

TEST_CASE("simplicial homology") {
  auto circle = simplicial_complex({{0, 1}, {1, 2}, {0, 2}});
  auto h = homology_all(circle);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z");

  // 6-vertex projective plane
  auto rp2 = simplicial_complex({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                 {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
  auto hr = homology_all(rp2);
  CHECK(hr[0].to_string() == "Z");
  CHECK(hr[1].to_string() == "Z/2");
  CHECK(hr[2].to_string() == "0");

  // 7-vertex torus: triangles {i, i+1, i+3}, {i, i+2, i+3} mod 7
  std::vector<std::vector<int>> tri;
  for (int i = 0; i < 7; ++i) {
    tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  auto t7 = simplicial_complex(tri);
  CHECK(bettis(homology_all(t7)) == std::vector<long>{1, 2, 1});
  // rank-nullity over Q with an independent elimination
  for (int k = 0; k <= 2; ++k) {
    long expect = static_cast<long>(t7.rank(k)) - static_cast<long>(oracle_rank(t7.boundary(k))) -
                  static_cast<long>(oracle_rank(t7.boundary(k + 1)));
    CHECK(homology_of(t7, k).betti == expect);
  }
  CHECK_THROWS_AS(homology_of(t7, 3), Error);

  auto j = complex_json(rp2);
  auto back = complex_from_json(j);
  CHECK(homology_all(back) == hr);
  auto bad = nlohmann::json::parse(R"({"ranks":{"0":1,"1":1,"2":1},"boundaries":{"1":[[0,0,"1"]],"2":[[0,0,"1"]]}})");
  try {
    complex_from_json(bad);
    FAIL("accepted d d != 0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantViolation);
  }
}

TEST_CASE("span filtration") {
  auto s = simplicial_complex_of({P({0, 0}), P({1, 0}), P({0, 1})}, 2);
  auto level = [&](std::vector<int> t) {
    int k = static_cast<int>(t.size()) - 1;
    for (size_t i = 0; i < s.tuples[k].size(); ++i)
      if (s.tuples[k][i] == t) return s.level[k][i];
    return -1;
  };
  CHECK(level({0, 1, 2}) == 2);
  CHECK(level({0, 0, 1}) == 1);
  CHECK(level({2, 2, 2}) == 0);

  auto flat = simplicial_complex_of({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({1, 1, 0})}, 2);
  for (int l : flat.level[2]) CHECK(l <= 2);

  // unit square: 4 triangles, each with one class per orientation, and one
  // relation from the boundary of (a, b, c, d)
  auto sq = simplicial_complex_of({P({0, 0}), P({1, 0}), P({1, 1}), P({0, 1})}, 3);
  auto gr = graded_piece(sq, 2);
  auto h2 = homology_of(gr, 2);
  CHECK(h2.betti == 3);
  CHECK(h2.torsion.empty());
  CHECK(static_cast<long>(gr.rank(2)) - static_cast<long>(oracle_rank(gr.boundary(3))) == 3);

  // full complex of tuples with repetition is acyclic
  auto full = homology_all(sq.complex);
  CHECK(full[0].to_string() == "Z");
  CHECK(full[1].to_string() == "0");
  CHECK(full[2].to_string() == "0");

  std::vector<geom::Point> many;
  for (long i = 0; i < 9; ++i) many.push_back(P({i, i * i}));
  try {
    simplicial_complex_of(many, 1);
    FAIL("no cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyPoints);
  }
}

TEST_CASE("barycentric subdivision") {
  auto a = P({0}), b = P({4});
  SimplexChain e(1);
  e.add({a, b}, 1);
  auto m = P({2});
  SimplexChain expect(1);
  expect.add({m, b}, 1);
  expect.add({m, a}, -1);
  CHECK(barycentric_sd(e) == expect);

  // triangle: 6 pieces, signed areas (shoelace) add up to the original
  auto x = P({0, 0}), y = P({6, 0}), z = P({1, 3});
  SimplexChain t(2);
  t.add({x, y, z}, 1);
  auto sd = barycentric_sd(t);
  CHECK(sd.size() == 6);
  auto shoelace = [](const std::vector<geom::Point>& p) {
    return (p[1][0] - p[0][0]) * (p[2][1] - p[0][1]) - (p[2][0] - p[0][0]) * (p[1][1] - p[0][1]);
  };
  Real total(0);
  for (const auto& [s, c] : sd.terms()) total += Real(static_cast<long>(c)) * shoelace(s);
  CHECK(total == shoelace({x, y, z}));

  Rng rng(5);
  SimplexChain r(3);
  std::vector<geom::Point> v;
  for (int i = 0; i < 4; ++i) v.push_back(geom::Point{Real(rng.rational(9, 4)), Real(rng.rational(9, 4)), Real(rng.rational(9, 4))});
  r.add(v, 1);
  CHECK(geom::boundary(barycentric_sd(r)) == barycentric_sd(geom::boundary(r)));
  CHECK(barycentric_sd(r).size() == 24);
}

TEST_CASE("subdivision homotopy") {
  // direct expansion on (a, b) with midpoint m:
  //   H = (m, m, b) - (m, m, a) - (m, a, b)
  auto a = P({0}), b = P({2}), m = P({1});
  auto h = subdivision_homotopy({a, b}, 1);
  SimplexChain expect(1);
  expect.add({m, m, b}, 1);
  expect.add({m, m, a}, -1);
  expect.add({m, a, b}, -1);
  CHECK(h == expect);
  CHECK(check_subdivision_homotopy({a, b}, 1));
  CHECK(subdivision_homotopy({a, b}, 0).is_zero());

  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 3));
    int rounds = static_cast<int>(rng.uniform(1, 2));
    std::vector<geom::Point> s;
    for (int i = 0; i <= dim; ++i) {
      geom::Point p;
      for (int k = 0; k < dim; ++k) p.emplace_back(rng.rational(7, 3));
      s.push_back(p);
    }
    CHECK(check_subdivision_homotopy(s, rounds));
  }

  // prism operator of a vertex map: dh + hd = f_* - id
  auto x = P({0, 0}), y = P({3, 0}), z = P({0, 3});
  SimplexChain tri(2);
  tri.add({x, y, z}, 1);
  auto sub = barycentric_sd(tri);
  VertexMap nearest = [&](const geom::Point& p) {
    geom::Point best = x;
    Real bd = geom::dot(geom::operator-(p, x), geom::operator-(p, x));
    for (const auto& c : {y, z}) {
      Real d = geom::dot(geom::operator-(p, c), geom::operator-(p, c));
      if (d < bd) bd = d, best = c;
    }
    return best;
  };
  auto hp = prism_homotopy(sub, nearest);
  CHECK(geom::boundary(hp) + prism_homotopy(geom::boundary(sub), nearest) == push_forward(sub, nearest) - sub);
}

TEST_CASE("flag double complex") {
  auto fc = flag_double_complex({P({0, 0}), P({1, 0}), P({0, 1})}, 2, 2);
  CHECK(fc.pool.size() == 6);
  CHECK(fc.flags[0].size() == 6);
  CHECK(fc.flags[1].size() == 6);  // line > point
  CHECK(fc.flags[2].empty());
  CHECK(verify_flag_nullhomotopy(fc));

  auto fc3 = flag_double_complex({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}, 3, 2);
  CHECK(verify_flag_nullhomotopy(fc3));

  FlagOptions bad;
  bad.corrupt_column = 1;
  CHECK_FALSE(verify_flag_nullhomotopy(flag_double_complex({P({0, 0}), P({1, 0}), P({0, 1})}, 2, 2, bad)));

  // 4 generic points in the plane: the total complex and the augmentation
  // column have the same homology below the truncation degree; both match
  // the order complex of the pool (K4 as a graph: b0 = 1, b1 = 3)
  auto f4 = flag_double_complex({P({0, 0}), P({3, 0}), P({0, 2}), P({2, 3})}, 2, 3);
  CHECK(verify_flag_nullhomotopy(f4));
  auto tot = f4.dc.total(0);
  auto col = f4.dc.column(-1);
  for (int d = 0; d <= 2; ++d) CHECK(homology_of(tot, d) == homology_of(col, d));
  CHECK(homology_of(col, 0).to_string() == "Z");
  CHECK(homology_of(col, 1).to_string() == "Z^3");
  auto order = flag_order_complex(f4);
  CHECK(homology_of(order, 1).betti == 3);

  // missing span
  FlagOptions pool;
  pool.pool_masks = std::vector<unsigned>{1, 2, 4};
  auto partial = flag_double_complex({P({0, 0}), P({1, 0}), P({0, 1})}, 2, 1, pool);
  try {
    verify_flag_nullhomotopy(partial);
    FAIL("missing span not reported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpanMissingFromPool);
  }

  // random configurations of up to 5 points in E^3, degeneracies included
  Rng rng(99);
  for (int t = 0; t < 6; ++t) {
    std::vector<geom::Point> pts;
    int n = static_cast<int>(rng.uniform(1, 5));
    while (static_cast<int>(pts.size()) < n) {
      auto p = P({rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 1)});
      bool dup = false;
      for (const auto& q : pts) dup = dup || (!geom::PointLess{}(p, q) && !geom::PointLess{}(q, p));
      if (!dup) pts.push_back(p);
    }
    CHECK(verify_flag_nullhomotopy(flag_double_complex(pts, 3, 1)));
  }
}

TEST_CASE("group homology") {
  // periodic resolution of Z/m with generator acting by e on Z:
  //   H_0 = Z/(e-1), H_odd = ker(e-1)/N, H_even = ker N/(e-1), N = sum e^k
  auto oracle = [](int m, int e, int k) -> std::string {
    long t = e - 1, norm = 0, p = 1;
    for (int i = 0; i < m; ++i) norm += p, p *= e;
    auto quot = [](long kernel_is_all, long img) -> std::string {
      if (!kernel_is_all) return "0";
      img = std::labs(img);
      if (img == 0) return "Z";
      return img == 1 ? "0" : "Z/" + std::to_string(img);
    };
    if (k == 0) return quot(1, t);
    if (k % 2 == 1) return quot(t == 0, norm);
    return quot(norm == 0, t);
  };
  for (int m : {2, 3, 4}) {
    auto g = cyclic_group(m);
    auto h = group_homology(g, trivial_module(g), 3);
    for (int k = 0; k <= 3; ++k) CHECK(h[k].to_string() == oracle(m, 1, k));
    CHECK(h[0] == coinvariants(g, trivial_module(g)));
  }
  auto z2 = cyclic_group(2);
  auto hs = group_homology(z2, sign_module(z2), 3);
  for (int k = 0; k <= 3; ++k) CHECK(hs[k].to_string() == oracle(2, -1, k));
  CHECK(hs[0].to_string() == "Z/2");
  CHECK(hs[0] == coinvariants(z2, sign_module(z2)));

  auto one = trivial_group();
  CHECK(group_homology(one, trivial_module(one, 3), 1)[0].to_string() == "Z^3");

  auto s3 = symmetric_group3();
  auto hs3 = group_homology(s3, trivial_module(s3), 2);
  CHECK(hs3[1].to_string() == "Z/2");  // abelianization
  CHECK(hs3[0] == coinvariants(s3, trivial_module(s3)));
  CHECK(group_homology(s3, sign_module(s3), 1)[0] == coinvariants(s3, sign_module(s3)));

  auto z4 = cyclic_group(4);
  auto sub = make_subgroup(z4, {0, 2});
  auto sh = shapiro_check(z4, sub, trivial_module(sub.group), 3);
  CHECK(sh.equal);
  std::vector<std::string> expect{"Z", "Z/2", "0", "Z/2"};
  for (int k = 0; k <= 3; ++k) CHECK(sh.over_g[k].to_string() == expect[k]);

  auto c3 = make_subgroup(s3, {0, 3, 4});  // the 3-cycles
  CHECK(c3.group.order() == 3);
  auto sh3 = shapiro_check(s3, c3, trivial_module(c3.group), 2);
  CHECK(sh3.equal);
  CHECK(sh3.over_h[1].to_string() == "Z/3");

  auto whole = make_subgroup(z4, {0, 1, 2, 3});
  CHECK(shapiro_check(z4, whole, trivial_module(whole.group), 2).equal);

  CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 3}), Error);
  try {
    bar_complex(cyclic_group(16), trivial_module(cyclic_group(16)), 4);
    FAIL("no size cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
  }

  auto gj = nlohmann::json::parse(R"({"order":2,"table":[[0,1],[1,0]]})");
  auto g2 = group_from_json(gj);
  auto mod = module_from_json(g2, nlohmann::json::parse(R"({"1":[[0,1],[1,0]]})"));
  // Z[Z/2] is free: H_0 = Z, higher homology vanishes
  auto hf = group_homology(g2, mod, 2);
  CHECK(hf[0].to_string() == "Z");
  CHECK(hf[1].to_string() == "0");
  CHECK(hf[2].to_string() == "0");
  CHECK_THROWS_AS(module_from_json(g2, nlohmann::json::parse(R"({"1":[[2]]})")), Error);
}

TEST_CASE("torus homology") {
  for (int n = 1; n <= 3; ++n) {
    auto h = torus_homology(n);
    REQUIRE(h.size() == static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      CHECK(h[k].betti == pascal(n, k));
      CHECK(h[k].torsion.empty());
    }
  }
  // Kunneth: betti of circle x circle is the convolution of circle bettis
  auto c1 = bettis(torus_homology(1));
  std::vector<long> conv(3, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) conv[i + j] += c1[i] * c1[j];
  CHECK(bettis(torus_homology(2)) == conv);
  CHECK_THROWS_AS(torus_homology(4), Error);
}
