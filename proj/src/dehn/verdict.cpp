#include "scissors/dehn/verdict.hpp"

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/geom/io.hpp"

namespace scissors::dehn {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotCongruent_Volume: return "NotCongruent_Volume";
    case Verdict::NotCongruent_Dehn: return "NotCongruent_Dehn";
    case Verdict::Congruent_DSJ: return "Congruent_DSJ";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::vector<DehnTerm> difference_terms(const geom::Polytope& a, const geom::Polytope& b) {
  auto raw = dehn_terms(a);
  for (auto t : dehn_terms(b)) {
    t.length = -t.length;
    raw.push_back(std::move(t));
  }
  return raw;
}

nlohmann::json poly_coeffs(const exact::ZPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.c) a.push_back(c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str()));
  return a;
}

// theta/pi irrational: the minimal polynomial of 2 cos(theta) is not that of
// any 2 cos(2 pi k / n); non-monic already suffices
nlohmann::json irrationality_witness(const DehnTerm& t) {
  exact::ZPoly mp = (Real(2) * t.angle.cos).minpoly();
  return {{"length", length_json(t.length)},
          {"cos", exact::number_json(t.angle.cos)},
          {"sin", exact::number_json(t.angle.sin)},
          {"minpoly_2cos", poly_coeffs(mp)},
          {"minpoly_2cos_text", exact::to_string(mp)},
          {"monic", mp.lead() == 1 || mp.lead() == -1}};
}

bool same_term(const DehnTensor& t, const nlohmann::json& w, std::string& why) {
  if (t.terms.size() != 1) {
    why = "normal form has " + std::to_string(t.terms.size()) + " terms, expected 1";
    return false;
  }
  DehnTerm claimed = term_from_json(w);
  if (!(claimed.angle == t.terms[0].angle) || !(claimed.length == t.terms[0].length)) {
    why = "surviving term differs from the witness";
    return false;
  }
  if (exact::is_rational_angle(t.terms[0].angle)) {
    why = "witness angle is a rational multiple of pi";
    return false;
  }
  return true;
}

std::vector<exact::IntegerRelation> relations_of(const nlohmann::json& tensor, std::vector<AnglePair>& angles) {
  std::vector<exact::IntegerRelation> rels;
  for (const auto& a : tensor.at("relation_angles"))
    angles.push_back(AnglePair::make(exact::parse_number(a.at("cos")), exact::parse_number(a.at("sin"))));
  for (const auto& r : tensor.at("relations")) rels.push_back(relation_from_json(r));
  return rels;
}

}  // namespace

CongruenceVerdict compare_polytopes(const geom::Polytope& a, const geom::Polytope& b, long height_bound) {
  if (a.dim != 3 || b.dim != 3) fail(ErrorKind::DimensionMismatch, "compare needs 3-polytopes");
  CongruenceVerdict v;
  v.height_bound = height_bound;
  v.volume_a = a.volume();
  v.volume_b = b.volume();
  if (v.volume_a != v.volume_b) {
    v.tag = Verdict::NotCongruent_Volume;
    return v;
  }
  v.difference = normalize(difference_terms(a, b), height_bound);
  switch (is_zero(v.difference)) {
    case ZeroStatus::Zero: v.tag = Verdict::Congruent_DSJ; break;
    case ZeroStatus::NonzeroCertified: v.tag = Verdict::NotCongruent_Dehn; break;
    case ZeroStatus::Unknown: v.tag = Verdict::Unknown; break;
  }
  return v;
}

nlohmann::json verdict_certificate(const geom::Polytope& a, const geom::Polytope& b, const CongruenceVerdict& v) {
  nlohmann::json c = {{"kind", "congruence"},
                      {"verdict", verdict_name(v.tag)},
                      {"polytope_a", geom::polytope_json(a)},
                      {"polytope_b", geom::polytope_json(b)},
                      {"volume_a", exact::number_json(v.volume_a)},
                      {"volume_b", exact::number_json(v.volume_b)},
                      {"height_bound", v.height_bound}};
  if (v.tag != Verdict::NotCongruent_Volume) c["difference"] = tensor_json(v.difference);
  if (v.tag == Verdict::NotCongruent_Dehn) c["witness"] = irrationality_witness(v.difference.terms[0]);
  return c;
}

nlohmann::json nonzero_certificate(const geom::Polytope& p, const DehnTensor& d) {
  nlohmann::json c = {{"kind", "dehn_invariant"},
                      {"status", zero_status_name(is_zero(d))},
                      {"polytope", geom::polytope_json(p)},
                      {"invariant", tensor_json(d)}};
  if (is_zero(d) == ZeroStatus::NonzeroCertified) c["witness"] = irrationality_witness(d.terms[0]);
  return c;
}

RecheckResult recheck(const nlohmann::json& cert) {
  RecheckResult r;
  try {
    std::string kind = cert.at("kind").get<std::string>();
    if (kind == "congruence") {
      auto a = geom::polytope_from_json(cert.at("polytope_a"));
      auto b = geom::polytope_from_json(cert.at("polytope_b"));
      Real va = a.volume(), vb = b.volume();
      if (va != exact::parse_number(cert.at("volume_a")) || vb != exact::parse_number(cert.at("volume_b"))) {
        r.detail = "volumes do not match the certificate";
        return r;
      }
      std::string verdict = cert.at("verdict").get<std::string>();
      if (verdict == "NotCongruent_Volume") {
        r.ok = va != vb;
        r.detail = r.ok ? "volumes differ" : "volumes are equal";
        return r;
      }
      if (va != vb) {
        r.detail = "volumes differ but verdict is " + verdict;
        return r;
      }
      std::vector<AnglePair> angles;
      auto rels = relations_of(cert.at("difference"), angles);
      DehnTensor d = normalize_with(difference_terms(a, b), angles, rels);
      if (verdict == "NotCongruent_Dehn") {
        r.ok = same_term(d, cert.at("witness"), r.detail);
        if (r.ok) r.detail = "D(a) - D(b) reduces to one pi-irrational term using " + std::to_string(rels.size()) + " certified relation(s)";
      } else if (verdict == "Congruent_DSJ") {
        r.ok = d.terms.empty();
        r.detail = r.ok ? "D(a) - D(b) reduces to zero" : "difference does not vanish under the listed relations";
      } else {
        r.ok = true;
        r.detail = "no claim to verify";
      }
      return r;
    }
    if (kind == "dehn_invariant") {
      auto p = geom::polytope_from_json(cert.at("polytope"));
      std::vector<AnglePair> angles;
      auto rels = relations_of(cert.at("invariant"), angles);
      DehnTensor d = normalize_with(dehn_terms(p), angles, rels);
      std::string status = cert.at("status").get<std::string>();
      if (status == "NonzeroCertified") {
        r.ok = same_term(d, cert.at("witness"), r.detail);
        if (r.ok) r.detail = "invariant reduces to one pi-irrational term";
      } else if (status == "Zero") {
        r.ok = d.terms.empty();
        r.detail = r.ok ? "invariant reduces to zero" : "invariant does not vanish under the listed relations";
      } else {
        r.ok = true;
        r.detail = "no claim to verify";
      }
      return r;
    }
    r.detail = "unknown certificate kind " + kind;
  } catch (const nlohmann::json::exception& e) {
    r.detail = std::string("malformed certificate: ") + e.what();
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace scissors::dehn
