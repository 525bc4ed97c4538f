#include "scissors/hochschild/phi.hpp"

#include "scissors/exact/error.hpp"

namespace scissors::hochschild {

KahlerElement phi_terms(const FieldTower& tower, const std::vector<PhiTerm>& terms) {
  KahlerElement acc = tower.kahler_zero();
  for (const auto& t : terms) {
    KahlerElement dc = tower.d(t.cos);
    if (tower.kahler_is_zero(dc)) continue;
    TowerElem s;
    if (t.sin) {
      s = *t.sin;
      TowerElem check = tower.add(tower.mul(s, s), tower.mul(t.cos, t.cos));
      if (check != tower.one()) fail(ErrorKind::NotExpressible, "given sin does not satisfy sin^2 + cos^2 = 1");
    } else {
      auto r = tower.sqrt(tower.sub(tower.one(), tower.mul(t.cos, t.cos)));
      if (!r) fail(ErrorKind::NotExpressible, "sin = sqrt(1 - cos^2) is not in the tower " + tower.spec());
      s = *r;
    }
    acc = tower.kahler_add(acc, tower.kahler_scale(tower.mul(t.length, tower.inv(s)), dc));
  }
  return acc;
}

TowerElem length_in_tower(const FieldTower& tower, const dehn::Length& l) {
  if (l.other_part().sign() != 0) fail(ErrorKind::NotExpressible, "length is not a sum of square roots of rationals");
  TowerElem r = tower.zero();
  for (const auto& [d, q] : l.radical_part().terms()) {
    auto root = tower.sqrt(tower.rational(Rational(d)));
    if (!root) fail(ErrorKind::NotExpressible, "sqrt(" + d.get_str() + ") is not in the tower");
    r = tower.add(r, tower.mul(tower.rational(q), *root));
  }
  return r;
}

KahlerElement phi_map(const FieldTower& tower, const dehn::DehnTensor& t,
                      const std::vector<std::pair<exact::Real, TowerElem>>& embedding) {
  std::vector<PhiTerm> terms;
  for (const auto& term : t.terms) {
    const TowerElem* c = nullptr;
    for (const auto& [re, te] : embedding)
      if (re == term.angle.cos) c = &te;
    if (!c) continue;  // algebraic cos: d vanishes
    terms.push_back(PhiTerm{length_in_tower(tower, term.length), *c, std::nullopt});
  }
  return phi_terms(tower, terms);
}

std::vector<PhiTerm> phi_terms_from_json(const FieldTower& tower, const nlohmann::json& j) {
  auto elem = [&](const nlohmann::json& x) {
    if (x.is_number_integer()) return tower.rational(Rational(x.get<long>()));
    if (x.is_string()) return tower.parse_element(x.get<std::string>());
    fail(ErrorKind::ParseError, "tower element must be a string or integer");
  };
  try {
    std::vector<PhiTerm> r;
    for (const auto& t : j.at("terms")) {
      PhiTerm p{elem(t.at("length")), elem(t.at("cos")), std::nullopt};
      if (t.contains("sin")) p.sin = elem(t.at("sin"));
      r.push_back(std::move(p));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("phi input: ") + e.what());
  }
}

}  // namespace scissors::hochschild
