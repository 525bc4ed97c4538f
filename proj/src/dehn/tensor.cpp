#include "scissors/dehn/tensor.hpp"

#include <algorithm>

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"

namespace scissors::dehn {

using exact::Integer;
using exact::IntegerRelation;
using exact::Rational;

namespace {

// group equal angles, drop rational ones, then sum lengths per group
std::vector<DehnTerm> merge(std::vector<DehnTerm> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const DehnTerm& a, const DehnTerm& b) { return a.angle < b.angle; });
  std::vector<DehnTerm> kept;
  for (size_t i = 0; i < raw.size();) {
    size_t j = i + 1;
    while (j < raw.size() && raw[j].angle == raw[i].angle) ++j;
    if (!exact::is_rational_angle(raw[i].angle)) {
      Length sum;
      for (size_t k = i; k < j; ++k) sum += raw[k].length;
      if (!sum.is_zero()) kept.push_back(DehnTerm{sum, raw[i].angle});
    }
    i = j;
  }
  return kept;
}

// Substitute pivot angles using the relations (RREF, pivots taken from the
// largest angle first). `lengths` is indexed like `angles`.
void eliminate(std::vector<Length>& lengths, const std::vector<std::vector<Rational>>& rels) {
  size_t k = lengths.size();
  std::vector<std::vector<Rational>> r = rels;
  std::vector<bool> used(r.size(), false);
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t col = k; col-- > 0;) {
    size_t piv = r.size();
    for (size_t i = 0; i < r.size(); ++i)
      if (!used[i] && sgn(r[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv == r.size()) continue;
    used[piv] = true;
    Rational inv = 1 / r[piv][col];
    for (auto& x : r[piv]) x *= inv;
    for (size_t i = 0; i < r.size(); ++i) {
      if (i == piv || sgn(r[i][col]) == 0) continue;
      Rational f = r[i][col];
      for (size_t j = 0; j < k; ++j) r[i][j] -= f * r[piv][j];
    }
    pivots.push_back({piv, col});
  }
  // theta_p = -sum_{j != p} r[j] theta_j (mod pi Q); lengths are a Q-space
  for (auto [row, p] : pivots) {
    if (lengths[p].is_zero()) continue;
    for (size_t j = 0; j < k; ++j) {
      if (j == p || sgn(r[row][j]) == 0) continue;
      lengths[j] -= lengths[p].scaled(r[row][j]);
    }
    lengths[p] = Length();
  }
}

DehnTensor finish(const std::vector<AnglePair>& angles, std::vector<Length> lengths) {
  DehnTensor t;
  for (size_t j = 0; j < angles.size(); ++j) {
    if (lengths[j].is_zero()) continue;
    if (exact::is_rational_angle(angles[j])) continue;
    t.terms.push_back(DehnTerm{lengths[j], angles[j]});
  }
  return t;
}

std::vector<Rational> to_rational_row(const IntegerRelation& rel) {
  std::vector<Rational> row;
  for (const auto& m : rel.m) row.emplace_back(m);
  return row;
}

}  // namespace

DehnTensor normalize(const std::vector<DehnTerm>& raw, long height_bound) {
  auto merged = merge(raw);
  std::vector<AnglePair> angles;
  std::vector<Length> lengths;
  for (const auto& t : merged) {
    angles.push_back(t.angle);
    lengths.push_back(t.length);
  }
  exact::RelationSearch search;
  search.height_bound = height_bound;
  if (angles.size() >= 2) search = exact::find_angle_relations(angles, height_bound);
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : search.relations) rows.push_back(to_rational_row(rel));
  eliminate(lengths, rows);
  DehnTensor t = finish(angles, std::move(lengths));
  t.relation_angles = angles;
  t.relations_used = search.relations;
  t.height_bound = height_bound;
  t.precision_bits = search.precision_bits;
  return t;
}

DehnTensor normalize_with(const std::vector<DehnTerm>& raw, const std::vector<AnglePair>& rel_angles,
                          const std::vector<IntegerRelation>& relations) {
  for (const auto& rel : relations) {
    if (rel.m.size() != rel_angles.size()) fail(ErrorKind::DimensionMismatch, "relation length differs from angle list");
    if (!exact::verify_relation(rel_angles, rel.m)) fail(ErrorKind::InvariantViolation, "relation fails exact check");
  }
  auto merged = merge(raw);
  // universe: relation angles first, then any further term angles
  std::vector<AnglePair> angles = rel_angles;
  std::vector<Length> lengths(angles.size());
  for (const auto& t : merged) {
    auto it = std::find(angles.begin(), angles.end(), t.angle);
    if (it == angles.end()) {
      angles.push_back(t.angle);
      lengths.push_back(t.length);
    } else {
      lengths[it - angles.begin()] += t.length;
    }
  }
  // eliminate in increasing-angle order so pivots match normalize()
  std::vector<size_t> order(angles.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return angles[a] < angles[b]; });
  std::vector<AnglePair> sa;
  std::vector<Length> sl;
  for (size_t i : order) {
    sa.push_back(angles[i]);
    sl.push_back(lengths[i]);
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : relations) {
    std::vector<Rational> row(sa.size());
    for (size_t pos = 0; pos < order.size(); ++pos)
      if (order[pos] < rel.m.size()) row[pos] = Rational(rel.m[order[pos]]);
    rows.push_back(row);
  }
  eliminate(sl, rows);
  DehnTensor t = finish(sa, std::move(sl));
  t.relation_angles = rel_angles;
  t.relations_used = relations;
  return t;
}

DehnTensor tensor_add(const DehnTensor& a, const DehnTensor& b) {
  std::vector<DehnTerm> raw = a.terms;
  raw.insert(raw.end(), b.terms.begin(), b.terms.end());
  return normalize(raw, std::max(a.height_bound, b.height_bound));
}

DehnTensor tensor_neg(const DehnTensor& a) {
  DehnTensor r = a;
  for (auto& t : r.terms) t.length = -t.length;
  return r;
}

DehnTensor tensor_sub(const DehnTensor& a, const DehnTensor& b) { return tensor_add(a, tensor_neg(b)); }

std::vector<DehnTerm> dehn_terms(const geom::Polytope& p) {
  std::vector<DehnTerm> raw;
  for (const auto& e : geom::dihedral_edges(p)) {
    raw.push_back(DehnTerm{e.length, e.angle});
    // reflex edges: theta = (theta - pi) + pi; the pi term is torsion
    if (e.reflex) raw.push_back(DehnTerm{e.length, AnglePair{Real(-1), Real(0)}});
  }
  return raw;
}

DehnTensor dehn_invariant(const geom::Polytope& p, long height_bound) {
  return normalize(dehn_terms(p), height_bound);
}

const char* zero_status_name(ZeroStatus z) {
  switch (z) {
    case ZeroStatus::Zero: return "Zero";
    case ZeroStatus::NonzeroCertified: return "NonzeroCertified";
    case ZeroStatus::Unknown: return "Unknown";
  }
  return "?";
}

ZeroStatus is_zero(const DehnTensor& t) {
  if (t.terms.empty()) return ZeroStatus::Zero;
  // one surviving term: length != 0 and theta/pi irrational, both exact
  if (t.terms.size() == 1) return ZeroStatus::NonzeroCertified;
  return ZeroStatus::Unknown;
}

namespace {
nlohmann::json int_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
Integer int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  fail(ErrorKind::ParseError, "expected integer");
}
}  // namespace

nlohmann::json term_json(const DehnTerm& t) {
  return {{"length", length_json(t.length)},
          {"cos", exact::number_json(t.angle.cos)},
          {"sin", exact::number_json(t.angle.sin)}};
}

DehnTerm term_from_json(const nlohmann::json& j) {
  try {
    Real c = exact::parse_number(j.at("cos"));
    Length len = length_from_json(j.at("length"));
    if (j.contains("sin")) return DehnTerm{len, AnglePair::make(c, exact::parse_number(j.at("sin")))};
    return DehnTerm{len, AnglePair::from_cos(c)};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("tensor term: ") + e.what());
  }
}

nlohmann::json relation_json(const IntegerRelation& r) {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& x : r.m) m.push_back(int_json(x));
  return {{"m", m}, {"pi_multiple", int_json(r.pi_multiple)}, {"field", r.field}};
}

IntegerRelation relation_from_json(const nlohmann::json& j) {
  try {
    IntegerRelation r;
    for (const auto& x : j.at("m")) r.m.push_back(int_from_json(x));
    r.pi_multiple = j.contains("pi_multiple") ? int_from_json(j.at("pi_multiple")) : Integer(0);
    r.field = j.value("field", std::string());
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("relation: ") + e.what());
  }
}

nlohmann::json tensor_json(const DehnTensor& t) {
  nlohmann::json terms = nlohmann::json::array(), rels = nlohmann::json::array(), angles = nlohmann::json::array();
  for (const auto& x : t.terms) terms.push_back(term_json(x));
  for (const auto& r : t.relations_used) rels.push_back(relation_json(r));
  for (const auto& a : t.relation_angles)
    angles.push_back({{"cos", exact::number_json(a.cos)}, {"sin", exact::number_json(a.sin)}});
  return {{"terms", terms}, {"height_bound", t.height_bound}, {"relations", rels}, {"relation_angles", angles}};
}

DehnTensor tensor_from_json(const nlohmann::json& j) {
  try {
    std::vector<DehnTerm> raw;
    for (const auto& x : j.at("terms")) raw.push_back(term_from_json(x));
    long h = j.value("height_bound", kDefaultHeightBound);
    if (h < 1) fail(ErrorKind::ParseError, "height_bound must be positive");
    return normalize(raw, h);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("tensor: ") + e.what());
  }
}

}  // namespace scissors::dehn
