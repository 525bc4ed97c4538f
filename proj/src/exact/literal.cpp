#include "scissors/exact/literal.hpp"

#include "scissors/exact/error.hpp"

namespace scissors::exact {

namespace {
bool valid_int(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_int(const std::string& s) {
  if (!valid_int(s)) fail(ErrorKind::ParseError, "bad integer literal '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}
}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer p = parse_int(s.substr(0, slash)), q = parse_int(s.substr(slash + 1));
  if (sgn(q) == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string rational_literal(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Real parse_number(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("rat:", 0) != 0) fail(ErrorKind::ParseError, "number literal must start with 'rat:': " + s);
    return Real(parse_rational(s.substr(4)));
  }
  if (j.is_number_integer()) return Real(Rational(Integer(j.dump())));
  if (j.is_object()) {
    if (!j.contains("minpoly") || !j.contains("lo") || !j.contains("hi"))
      fail(ErrorKind::ParseError, "algebraic literal needs minpoly, lo, hi");
    std::vector<Integer> cs;
    for (const auto& c : j.at("minpoly")) {
      if (c.is_string())
        cs.push_back(parse_int(c.get<std::string>()));
      else if (c.is_number_integer())
        cs.push_back(Integer(c.dump()));
      else
        fail(ErrorKind::ParseError, "minpoly coefficient must be an integer string");
    }
    ZPoly p(std::move(cs));
    if (p.is_zero()) fail(ErrorKind::ParseError, "zero minpoly");
    auto str = [](const nlohmann::json& v) {
      if (!v.is_string()) fail(ErrorKind::ParseError, "interval endpoints must be strings");
      return parse_rational(v.get<std::string>());
    };
    Rational lo = str(j.at("lo")), hi = str(j.at("hi"));
    if (lo > hi) fail(ErrorKind::ParseError, "lo > hi");
    return Real::make(p, lo, hi);
  }
  fail(ErrorKind::ParseError, "unrecognised number literal: " + j.dump());
}

nlohmann::json number_json(const Real& x) {
  if (x.is_rational()) return "rat:" + rational_literal(x.rational());
  nlohmann::json j;
  auto m = x.minpoly();
  j["minpoly"] = nlohmann::json::array();
  for (const auto& c : m.c) j["minpoly"].push_back(c.get_str());
  auto [lo, hi] = x.canonical_interval();
  j["lo"] = rational_literal(lo);
  j["hi"] = rational_literal(hi);
  return j;
}

}  // namespace scissors::exact
