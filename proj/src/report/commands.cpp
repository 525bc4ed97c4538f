#include "scissors/report/commands.hpp"

#include <cmath>
#include <filesystem>

#include "scissors/dehn/verdict.hpp"
#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/geom/io.hpp"
#include "scissors/hochschild/chains.hpp"
#include "scissors/hochschild/kahler.hpp"
#include "scissors/hochschild/phi.hpp"
#include "scissors/homology/complex.hpp"
#include "scissors/homology/groups.hpp"
#include "scissors/report/suites.hpp"

namespace scissors::report {

using nlohmann::json;
using exact::Real;

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, what + ": " + e.what());
  }
}

geom::Polytope load(Report& r, const std::string& name, const std::string& path, const Options& opt) {
  auto j = parse_json(read_input(r, name, path), path);
  auto mode = opt.exact_strict ? geom::Validation::Strict : geom::Validation::Default;
  try {
    return geom::polytope_from_json(j, mode);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

json angle_over_pi(const exact::AnglePair& a) {
  if (auto q = exact::is_rational_angle(a)) return exact::rational_literal(*q);
  return a.radians() / M_PI;
}

json tensor_view(const dehn::DehnTensor& t) {
  json rows = json::array();
  for (const auto& term : t.terms)
    rows.push_back(json{{"length", term.length.to_string()},
                        {"length_approx", term.length.to_double()},
                        {"cos", term.angle.cos.to_string()},
                        {"angle_over_pi", angle_over_pi(term.angle)}});
  return rows;
}

void recheck_into(Report& r) {
  json out = json::array();
  bool all = true;
  for (const auto& c : r.certificates) {
    auto res = dehn::recheck(c);
    all = all && res.ok;
    out.push_back(json{{"kind", c.value("kind", "")}, {"ok", res.ok}, {"detail", res.detail}});
  }
  r.results["recheck"] = out;
  if (!all) r.status = kCheckFailed;
}

void echo(Report& r, const Options& opt) {
  r.seed = opt.seed;
  r.args["height_bound"] = opt.height_bound;
  r.args["exact_strict"] = opt.exact_strict;
}

}  // namespace

Report cmd_polytope_info(const std::string& path, const Options& opt) {
  Report r;
  r.command = "polytope-info";
  echo(r, opt);
  auto p = load(r, "polytope", path, opt);
  auto d = dehn::dehn_invariant(p, opt.height_bound);
  auto status = dehn::is_zero(d);

  json edges = json::array();
  if (p.dim == 3)
    for (const auto& e : geom::dihedral_edges(p))
      edges.push_back(json{{"a", e.a},
                           {"b", e.b},
                           {"length", e.length.to_string()},
                           {"cos", e.angle.cos.to_string()},
                           {"angle_over_pi", angle_over_pi(e.angle)},
                           {"reflex", e.reflex}});
  Real vol = p.volume();
  r.results = json{{"name", p.name},
                   {"dim", p.dim},
                   {"vertices", p.vertices.size()},
                   {"cells", p.cells.size()},
                   {"volume", exact::number_json(vol)},
                   {"volume_text", vol.to_string()},
                   {"volume_approx", vol.to_double()},
                   {"edges", edges},
                   {"dehn", tensor_view(d)},
                   {"relations_used", d.relations_used.size()},
                   {"dehn_status", dehn::zero_status_name(status)}};
  if (!p.warnings.empty()) r.results["warnings"] = p.warnings;
  r.certificates.push_back(dehn::nonzero_certificate(p, d));
  if (opt.recheck) recheck_into(r);
  return r;
}

Report cmd_compare(const std::string& a, const std::string& b, const Options& opt) {
  Report r;
  r.command = "compare";
  echo(r, opt);
  auto pa = load(r, "a", a, opt), pb = load(r, "b", b, opt);
  auto v = dehn::compare_polytopes(pa, pb, opt.height_bound);
  r.results = json{{"verdict", dehn::verdict_name(v.tag)},
                   {"volume_a", v.volume_a.to_string()},
                   {"volume_b", v.volume_b.to_string()},
                   {"difference", tensor_view(v.difference)},
                   {"height_bound", v.height_bound}};
  r.certificates.push_back(dehn::verdict_certificate(pa, pb, v));
  if (opt.recheck) recheck_into(r);
  return r;
}

Report cmd_verify(const std::string& suite, const Options& opt) {
  Report r;
  r.command = "verify";
  r.seed = opt.seed;
  r.args["suite"] = suite;
  if (opt.cases) r.args["cases"] = *opt.cases;
  auto run = run_suite(suite, opt.seed, opt.cases);
  r.results = run.results;
  if (!run.pass) r.status = kCheckFailed;
  return r;
}

Report cmd_hochschild(const std::string& algebra, const Options& opt) {
  Report r;
  r.command = "hochschild";
  int top = opt.max_degree.value_or(2);
  if (top < 0) fail(ErrorKind::DegreeOutOfRange, "--max-degree must be non-negative");
  r.args["max_degree"] = top;
  hochschild::FiniteDimAlgebra a;
  if (std::filesystem::exists(algebra)) {
    a = hochschild::algebra_from_json(parse_json(read_input(r, "algebra", algebra), algebra));
  } else {
    record_input(r, "algebra", algebra);
    a = hochschild::algebra_by_name(algebra);
  }
  json table = json::array(), dims = json::array();
  for (int n = 0; n <= top; ++n) {
    auto h = hochschild::hochschild_homology(a, n);
    dims.push_back(h.dim);
    table.push_back(json{{"degree", n},
                         {"HH", h.dim},
                         {"omega", h.omega_dim},
                         {"cycles", h.cycles_dim},
                         {"boundaries", h.boundaries_dim}});
  }
  r.results = json{{"algebra", a.name}, {"dim", a.dim}, {"HH", dims}, {"table", table}};
  return r;
}

Report cmd_kahler(const std::string& presentation, const Options&) {
  Report r;
  r.command = "kahler";
  record_input(r, "presentation", presentation);
  auto p = hochschild::parse_presentation(presentation);
  auto k = hochschild::kahler_presented(p);
  auto hkr = hochschild::hkr_degree1_check(p);
  r.results = json{{"presentation", presentation},
                   {"algebra_dim", k.algebra_dim},
                   {"Omega1", k.dim},
                   {"HH1", hkr.hh1},
                   {"hkr_equal", hkr.equal}};
  if (!hkr.equal) r.status = kCheckFailed;
  return r;
}

namespace {

json homology_rows(const std::vector<homology::HomologyResult>& hs, int lo, json& summary) {
  json rows = json::array();
  for (size_t k = 0; k < hs.size(); ++k) {
    json t = json::array();
    for (const auto& x : hs[k].torsion) t.push_back(x.get_str());
    rows.push_back(json{{"degree", lo + static_cast<int>(k)}, {"group", hs[k].to_string()}, {"betti", hs[k].betti},
                        {"torsion", t}});
    summary.push_back(hs[k].to_string());
  }
  return rows;
}

}  // namespace

Report cmd_homology_complex(const std::string& path, const Options& opt) {
  Report r;
  r.command = "homology";
  auto c = homology::complex_from_json(parse_json(read_input(r, "complex", path), path));
  c.validate();
  auto hs = homology::homology_all(c);
  if (opt.max_degree && static_cast<int>(hs.size()) > *opt.max_degree - c.lo() + 1)
    hs.resize(std::max(0, *opt.max_degree - c.lo() + 1));
  json summary = json::array();
  r.results["table"] = homology_rows(hs, c.lo(), summary);
  r.results["homology"] = summary;
  return r;
}

Report cmd_homology_group(const std::string& group, const std::string& module, const Options& opt) {
  Report r;
  r.command = "homology";
  int top = opt.max_degree.value_or(3);
  if (top < 0) fail(ErrorKind::DegreeOutOfRange, "--max-degree must be non-negative");
  r.args["max_degree"] = top;
  r.args["module"] = module;
  homology::FiniteGroup g;
  homology::GroupModule m;
  if (std::filesystem::exists(group)) {
    auto j = parse_json(read_input(r, "group", group), group);
    g = homology::group_from_json(j);
    m = j.contains("action") ? homology::module_from_json(g, j.at("action")) : homology::module_from_spec(g, module);
  } else {
    record_input(r, "group", group);
    g = homology::group_from_spec(group);
    m = homology::module_from_spec(g, module);
  }
  auto hs = homology::group_homology(g, m, top);
  json summary = json::array();
  r.results["group"] = g.name;
  r.results["module"] = m.name;
  r.results["table"] = homology_rows(hs, 0, summary);
  r.results["homology"] = summary;
  return r;
}

Report cmd_phi(const std::string& tensor_path, const std::string& tower_spec, const Options&) {
  Report r;
  r.command = "phi";
  record_input(r, "tower", tower_spec);
  auto tower = hochschild::FieldTower::parse(tower_spec);
  auto j = parse_json(read_input(r, "tensor", tensor_path), tensor_path);
  hochschild::KahlerElement k;
  try {
    if (j.contains("terms")) {
      k = hochschild::phi_terms(tower, hochschild::phi_terms_from_json(tower, j));
    } else {
      // {"dehn": <tensor>, "embedding": [{"cos": <number>, "to": "t"}]}
      auto t = dehn::tensor_from_json(j.at("dehn"));
      std::vector<std::pair<Real, hochschild::TowerElem>> emb;
      for (const auto& e : j.value("embedding", json::array()))
        emb.emplace_back(exact::parse_number(e.at("cos")), tower.parse_element(e.at("to").get<std::string>()));
      k = hochschild::phi_map(tower, t, emb);
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, tensor_path + ": " + e.what());
  }
  json coeffs = json::object();
  auto names = tower.transcendentals();
  for (size_t i = 0; i < names.size(); ++i) coeffs["d" + names[i]] = tower.display(k.coeff[i]);
  r.results = json{{"tower", tower.spec()}, {"phi", tower.kahler_to_string(k)}, {"coefficients", coeffs}};
  return r;
}

Report cmd_recheck(const std::string& path, const Options&) {
  Report r;
  r.command = "recheck";
  auto j = parse_json(read_input(r, "certificate", path), path);
  if (j.is_object() && j.contains("certificates"))
    r.certificates = j.at("certificates");
  else if (j.is_array())
    r.certificates = j;
  else
    r.certificates.push_back(j);
  if (r.certificates.empty()) fail(ErrorKind::ParseError, "no certificates in " + path);
  recheck_into(r);
  r.results["all_ok"] = r.status == 0;
  return r;
}

}  // namespace scissors::report
