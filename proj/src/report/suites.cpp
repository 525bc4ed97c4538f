#include "scissors/report/suites.hpp"

#include <functional>
#include <map>

#include "scissors/dehn/tensor.hpp"
#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/exact/rng.hpp"
#include "scissors/geom/construct.hpp"
#include "scissors/geom/io.hpp"
#include "scissors/hochschild/involution.hpp"
#include "scissors/hochschild/kahler.hpp"
#include "scissors/homology/flags.hpp"
#include "scissors/homology/groups.hpp"
#include "scissors/homology/subdivision.hpp"
#include "scissors/homology/torus.hpp"

namespace scissors::report {

using nlohmann::json;
using geom::Point;
using exact::Rational;
using exact::Real;
namespace hh = hochschild;

namespace {

struct Case {
  json row;       // table line; must carry "pass"
  json input;     // reproducer, recorded on failure
};

using Points = std::vector<Point>;

json points_json(const Points& pts) {
  json j = json::array();
  for (const auto& p : pts) j.push_back(geom::point_json(p));
  return j;
}

// drop points one at a time while the case keeps failing
Points minimize(Points pts, const std::function<bool(const Points&)>& fails) {
  for (size_t i = 0; i < pts.size();) {
    Points fewer = pts;
    fewer.erase(fewer.begin() + i);
    bool still = false;
    try {
      still = !fewer.empty() && fails(fewer);
    } catch (const Error&) {
      still = false;
    }
    if (still)
      pts = std::move(fewer);
    else
      ++i;
  }
  return pts;
}

Point random_point(Rng& rng, int dim, int64_t num, int64_t den) {
  Point p;
  for (int d = 0; d < dim; ++d) p.emplace_back(rng.rational(num, den));
  return p;
}

// --- geometry ---------------------------------------------------------------

Case phi_boundary_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  int dim = 2 + k % 2;
  Points pts;
  for (int i = 0; i < dim + 2; ++i) pts.push_back(random_point(rng, dim, 4, 2));
  bool ok = geom::phi_boundary_check(pts);
  Case c{{{"case", k}, {"dim", dim}, {"pass", ok}}, {}};
  if (!ok) c.input = points_json(minimize(pts, [](const Points& p) { return !geom::phi_boundary_check(p); }));
  return c;
}

Case dissection_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  bool tet = k % 2 == 1;
  auto s = geom::random_plane_split(rng, tet);
  bool dis = geom::verify_dissection(s.whole, {s.pos, s.neg});
  auto whole = dehn::dehn_invariant(s.whole);
  auto parts = dehn::tensor_add(dehn::dehn_invariant(s.pos), dehn::dehn_invariant(s.neg));
  bool add = dehn::tensor_sub(whole, parts).empty();
  Case c{{{"case", k},
          {"solid", tet ? "tetrahedron" : "box"},
          {"dissection", dis},
          {"additive", add},
          {"pass", dis && add}},
         {}};
  if (!(dis && add))
    c.input = json{{"whole", geom::polytope_json(s.whole)},
                   {"normal", geom::point_json(s.normal)},
                   {"offset", exact::number_json(s.offset)}};
  return c;
}

Case sd_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  int dim = static_cast<int>(rng.uniform(1, 3));
  int rounds = static_cast<int>(rng.uniform(1, 2));
  Points s;
  for (int i = 0; i <= dim; ++i) s.push_back(random_point(rng, dim, 7, 3));
  bool ok = homology::check_subdivision_homotopy(s, rounds);
  Case c{{{"case", k}, {"dim", dim}, {"rounds", rounds}, {"pass", ok}}, {}};
  if (!ok) c.input = json{{"simplex", points_json(s)}, {"rounds", rounds}};
  return c;
}

Case flag_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  Points pts;
  int n = static_cast<int>(rng.uniform(1, 5));
  while (static_cast<int>(pts.size()) < n) {
    Point p{Real(rng.uniform(0, 2)), Real(rng.uniform(0, 2)), Real(rng.uniform(0, 1))};
    bool dup = false;
    for (const auto& q : pts) dup = dup || (!geom::PointLess{}(p, q) && !geom::PointLess{}(q, p));
    if (!dup) pts.push_back(p);
  }
  auto check = [](const Points& p) {
    return homology::verify_flag_nullhomotopy(homology::flag_double_complex(p, 3, 1));
  };
  bool ok = check(pts);
  Case c{{{"case", k}, {"points", n}, {"pass", ok}}, {}};
  if (!ok) c.input = points_json(minimize(pts, [&](const Points& p) { return !check(p); }));
  return c;
}

// --- homology ---------------------------------------------------------------

// periodic resolution of Z/m on trivial Z
std::string cyclic_oracle(int m, int k) {
  if (k == 0) return "Z";
  return k % 2 ? "Z/" + std::to_string(m) : "0";
}

std::vector<Case> bar_shapiro_cases() {
  std::vector<Case> out;
  int idx = 0;
  for (int m : {2, 3, 4}) {
    auto g = homology::cyclic_group(m);
    auto h = homology::group_homology(g, homology::trivial_module(g), 3);
    json got = json::array(), want = json::array();
    bool ok = true;
    for (int k = 0; k <= 3; ++k) {
      got.push_back(h[k].to_string());
      want.push_back(cyclic_oracle(m, k));
      ok = ok && got.back() == want.back();
    }
    out.push_back({{{"case", idx++}, {"check", "H_*(Z/" + std::to_string(m) + ", Z)"}, {"got", got},
                    {"expected", want}, {"pass", ok}},
                   json{{"group", "Z/" + std::to_string(m)}, {"module", "trivialZ"}}});
  }
  struct Sh {
    std::string name;
    homology::FiniteGroup g;
    std::vector<int> h;
  };
  for (const auto& s : {Sh{"Z/4 > Z/2", homology::cyclic_group(4), {0, 2}},
                        Sh{"S3 > Z/3", homology::symmetric_group3(), {0, 3, 4}}}) {
    auto sub = homology::make_subgroup(s.g, s.h);
    auto r = homology::shapiro_check(s.g, sub, homology::trivial_module(sub.group), 3);
    json over_g = json::array(), over_h = json::array();
    for (const auto& x : r.over_g) over_g.push_back(x.to_string());
    for (const auto& x : r.over_h) over_h.push_back(x.to_string());
    out.push_back({{{"case", idx++}, {"check", "Shapiro " + s.name}, {"got", over_g}, {"expected", over_h},
                    {"pass", r.equal}},
                   json{{"group", s.name}, {"subgroup", s.h}}});
  }
  return out;
}

std::vector<Case> torus_cases() {
  std::vector<Case> out;
  for (int n = 1; n <= 3; ++n) {
    auto h = homology::torus_homology(n);
    json betti = json::array(), want = json::array();
    bool ok = true;
    long binom = 1;
    for (int k = 0; k <= n; ++k) {
      betti.push_back(h[k].betti);
      want.push_back(binom);
      ok = ok && h[k].betti == binom && h[k].torsion.empty();
      binom = binom * (n - k) / (k + 1);
    }
    out.push_back({{{"case", n - 1}, {"n", n}, {"betti", betti}, {"expected", want}, {"pass", ok}}, json{{"n", n}}});
  }
  return out;
}

// --- hochschild -------------------------------------------------------------

std::vector<Case> hochschild_cases() {
  struct Row {
    std::string name;
    std::vector<size_t> expect;
  };
  std::vector<Row> rows = {{"Q", {1, 0, 0, 0}}, {"QI", {2, 0, 0}}, {"quat", {1, 0, 0, 0}}, {"mat2", {1, 0, 0, 0}},
                           {"mat4", {1, 0}}};
  std::vector<Case> out;
  int idx = 0;
  for (const auto& r : rows) {
    auto a = hh::algebra_by_name(r.name);
    json got = json::array();
    bool ok = true;
    for (size_t n = 0; n < r.expect.size(); ++n) {
      size_t d = hh::hochschild_homology(a, static_cast<int>(n)).dim;
      got.push_back(d);
      ok = ok && d == r.expect[n];
    }
    out.push_back({{{"case", idx++}, {"algebra", r.name}, {"HH", got}, {"expected", r.expect}, {"pass", ok}},
                   json{{"algebra", r.name}}});
  }
  return out;
}

hh::Quaternion random_unit_quaternion(Rng& rng) {
  // inverse stereographic projection of a rational point of R^3
  Rational x = rng.rational(3, 2), y = rng.rational(3, 2), z = rng.rational(3, 2);
  Rational r2 = x * x + y * y + z * z, den = 1 + r2;
  return {(1 - r2) / den, 2 * x / den, 2 * y / den, 2 * z / den};
}

json quaternion_json(const hh::Quaternion& q) {
  json j = json::array();
  for (const auto& x : q) j.push_back(exact::rational_literal(x));
  return j;
}

Case tau_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  auto h = hh::algebra_quat();
  int n = 1 + k % 3;
  auto c = hh::random_omega_chain(h, n, rng);
  auto tc = hh::tau(h, c);
  bool inv = hh::tau(h, tc) == c;
  bool omega = hh::in_omega(h, tc);
  bool comm = hh::hochschild_boundary(h, tc) == hh::tau(h, hh::hochschild_boundary(h, c));
  Case out{{{"case", k}, {"degree", n}, {"involution", inv}, {"in_omega", omega}, {"commutes_with_b", comm},
            {"pass", inv && omega && comm}},
           {}};
  if (!(inv && omega && comm)) out.input = json{{"chain", hh::chain_to_string(h, c)}};
  return out;
}

std::vector<Case> tau_fixed(int first) {
  auto h = hh::algebra_quat();
  std::vector<Case> out;
  auto mc = hh::i2_minus_vs_b2_minus(h);
  out.push_back({{{"case", first},
                  {"check", "I2- = B2-"},
                  {"cycles_minus", mc.cycles_minus},
                  {"boundaries_minus", mc.boundaries_minus},
                  {"pass", mc.equal}},
                 json::object()});
  std::vector<hh::HochschildChain> all;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) all.push_back(hh::make_chain(h, 1, {{{x, y}, Rational(1)}}));
  auto sw = hh::eigenspace_split(all, [&](const hh::HochschildChain& c) { return hh::swap_conjugate(h, c); });
  auto fw = hh::eigenspace_split(all, [&](const hh::HochschildChain& c) { return hh::conjugate_tensor(h, c); });
  size_t rs = hh::wedge_rank(h, sw.minus), rf = hh::wedge_rank(h, fw.minus);
  out.push_back({{{"case", first + 1},
                  {"check", "wedge rank, swap conjugation"},
                  {"minus_dim", sw.minus.size()},
                  {"rank", rs},
                  {"pass", sw.minus.size() == 6 && rs == 6}},
                 json::object()});
  // informational: the factorwise conjugation has a 6-dim minus space of rank 3
  out.push_back({{{"case", first + 2},
                  {"check", "wedge rank, factorwise conjugation"},
                  {"minus_dim", fw.minus.size()},
                  {"rank", rf},
                  {"pass", fw.minus.size() == 6 && rf == 3}},
                 json::object()});
  return out;
}

Case spin_case(uint64_t seed, int k) {
  Rng rng(seed, k);
  auto h = hh::algebra_quat();
  auto q1 = random_unit_quaternion(rng), q2 = random_unit_quaternion(rng);
  int n = 1 + k % 3;
  auto c = hh::random_omega_chain(h, n, rng);
  auto sc = hh::spin_action(h, q1, q2, c);
  bool omega = hh::in_omega(h, sc);
  bool comm = hh::hochschild_boundary(h, sc) == hh::spin_action(h, q1, q2, hh::hochschild_boundary(h, c));
  Case out{{{"case", k}, {"degree", n}, {"in_omega", omega}, {"commutes_with_b", comm}, {"pass", omega && comm}}, {}};
  if (!(omega && comm))
    out.input = json{{"q1", quaternion_json(q1)}, {"q2", quaternion_json(q2)}, {"chain", hh::chain_to_string(h, c)}};
  return out;
}

std::vector<Case> hkr_cases() {
  std::vector<Case> out;
  int idx = 0;
  for (const auto& s : hh::presentation_corpus()) {
    auto r = hh::hkr_degree1_check(hh::parse_presentation(s));
    out.push_back({{{"case", idx++}, {"algebra", s}, {"HH1", r.hh1}, {"Omega1", r.omega1}, {"pass", r.equal}},
                   json{{"presentation", s}}});
  }
  return out;
}

std::vector<Case> ses_cases() {
  auto r = hh::ses_audit(hh::algebra_quat());
  bool ok = r.kernel_is_i1_minus && r.image_in_target && r.image_antidiagonal &&
            r.kernel_dim + r.image_dim == r.source_dim && r.image_dim + r.coker_dim == r.target_dim;
  return {{{{"case", 0},
            {"source", r.source_dim},
            {"kernel", r.kernel_dim},
            {"image", r.image_dim},
            {"target", r.target_dim},
            {"cokernel", r.coker_dim},
            {"I1_minus", r.i1_minus_dim},
            {"kernel_is_I1_minus", r.kernel_is_i1_minus},
            {"image_antidiagonal", r.image_antidiagonal},
            {"pass", ok}},
           json::object()}};
}

using RandomCase = Case (*)(uint64_t, int);

const std::map<std::string, std::pair<RandomCase, int>>& random_suites() {
  static const std::map<std::string, std::pair<RandomCase, int>> m = {
      {"dissection", {dissection_case, 25}}, {"phi-boundary", {phi_boundary_case, 50}},
      {"sd-homotopy", {sd_case, 100}},       {"flag-nullhomotopy", {flag_case, 20}},
      {"tau", {tau_case, 30}},               {"spin", {spin_case, 30}}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dissection", "phi-boundary", "sd-homotopy", "flag-nullhomotopy",
                                                 "bar-shapiro", "torus",       "hochschild",  "tau",
                                                 "spin",        "hkr",         "ses-audit"};
  return names;
}

int default_cases(const std::string& suite) {
  auto it = random_suites().find(suite);
  return it == random_suites().end() ? 0 : it->second.second;
}

SuiteRun run_suite(const std::string& suite, uint64_t seed, std::optional<int> cases) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    fail(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
  if (cases && *cases < 0) fail(ErrorKind::ParseError, "--cases must be non-negative");

  std::vector<Case> all;
  bool randomized = false;
  if (auto it = random_suites().find(suite); it != random_suites().end()) {
    randomized = true;
    int count = cases.value_or(it->second.second);
    for (int k = 0; k < count; ++k) {
      try {
        all.push_back(it->second.first(seed, k));
      } catch (const Error& e) {
        // keep the error kind (exit code), add the case coordinates
        throw Error(e.kind(), "suite " + suite + ", seed " + std::to_string(seed) + ", case " + std::to_string(k) +
                                  ": " + e.what());
      }
    }
    if (suite == "tau") {
      auto extra = tau_fixed(count);
      all.insert(all.end(), extra.begin(), extra.end());
    }
  } else if (suite == "bar-shapiro") {
    all = bar_shapiro_cases();
  } else if (suite == "torus") {
    all = torus_cases();
  } else if (suite == "hochschild") {
    all = hochschild_cases();
  } else if (suite == "hkr") {
    all = hkr_cases();
  } else {
    all = ses_cases();
  }

  SuiteRun run;
  json table = json::array(), failures = json::array();
  size_t passed = 0;
  for (auto& c : all) {
    bool ok = c.row.at("pass").get<bool>();
    passed += ok;
    if (!ok) {
      json f{{"case", c.row.at("case")}, {"reproducer", c.input}};
      if (randomized) f["rng"] = json{{"seed", seed}, {"stream", c.row.at("case")}};
      failures.push_back(f);
    }
    table.push_back(std::move(c.row));
  }
  run.pass = passed == all.size();
  run.results = json{{"suite", suite},
                     {"randomized", randomized},
                     {"cases", all.size()},
                     {"passed", passed},
                     {"failed", all.size() - passed},
                     {"verdict", run.pass ? "pass" : "fail"},
                     {"table", table},
                     {"failures", failures}};
  return run;
}

}  // namespace scissors::report
