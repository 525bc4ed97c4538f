#include "scissors/hochschild/kahler.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"
#include "scissors/exact/qlinalg.hpp"
#include "scissors/hochschild/chains.hpp"
#include "scissors/hochschild/expr.hpp"

namespace scissors::hochschild {

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  // smaller exponent in the last differing variable wins
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) t.erase(it);
}

MPoly mpoly_add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.t) r.add_term(m, c);
  return r;
}

MPoly mpoly_sub(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.t) r.add_term(m, -c);
  return r;
}

namespace {
Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}
Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
MPoly term_mul(const MPoly& a, const Monomial& m, const Rational& c) {
  MPoly r;
  for (const auto& [x, y] : a.t) r.t.emplace(mono_mul(x, m), y * c);
  return r;
}
}  // namespace

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [m, c] : b.t)
    for (const auto& [x, y] : a.t) r.add_term(mono_mul(x, m), y * c);
  return r;
}

MPoly mpoly_scale(const MPoly& a, const Rational& s) {
  MPoly r;
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : a.t) r.t.emplace(m, c * s);
  return r;
}

MPoly mpoly_derivative(const MPoly& a, int var) {
  MPoly r;
  for (const auto& [m, c] : a.t) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * m[var]);
  }
  return r;
}

std::string mpoly_to_string(const MPoly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.t) {
    std::string lit = exact::rational_literal(c);
    bool neg = lit[0] == '-';
    if (neg) lit = lit.substr(1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) s += lit;
    else if (lit == "1") s += mono;
    else s += lit + "*" + mono;
  }
  return s;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb) {
  MPoly p = f, r;
  while (!p.is_zero()) {
    const Monomial lm = p.lead();
    const Rational lc = p.lead_coeff();
    bool reduced = false;
    for (const auto& g : gb) {
      if (!mono_divides(g.lead(), lm)) continue;
      p = mpoly_sub(p, term_mul(g, mono_div(lm, g.lead()), lc / g.lead_coeff()));
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.t.erase(p.t.begin());
    }
  }
  return r;
}

std::vector<MPoly> groebner_basis(std::vector<MPoly> gens) {
  std::vector<MPoly> g;
  for (auto& f : gens)
    if (!f.is_zero()) g.push_back(mpoly_scale(f, 1 / f.lead_coeff()));
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.push_back({i, j});
  size_t guard = 0;
  while (!pairs.empty()) {
    if (++guard > 200000) fail(ErrorKind::SizeCap, "Groebner basis computation too large");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial &a = g[i].lead(), &b = g[j].lead();
    Monomial l = mono_lcm(a, b);
    // coprime leading monomials: S-polynomial reduces to 0
    if (mono_mul(a, b) == l) continue;
    MPoly s = mpoly_sub(term_mul(g[i], mono_div(l, a), 1), term_mul(g[j], mono_div(l, b), 1));
    MPoly r = normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(mpoly_scale(r, 1 / r.lead_coeff()));
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.push_back({k, g.size() - 1});
  }
  // minimize, then inter-reduce
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !mono_divides(g[j].lead(), g[i].lead())) continue;
      redundant = g[j].lead() != g[i].lead() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly tail = minimal[i];
    Monomial lm = tail.lead();
    tail.t.erase(tail.t.begin());
    MPoly r = normal_form(tail, others);
    r.add_term(lm, 1);
    reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MPoly& x, const MPoly& y) { return GrevlexGreater()(y.lead(), x.lead()); });
  return reduced;
}

namespace {

struct PolyCtx {
  const std::vector<std::string>& vars;
  MPoly number(const Rational& q) {
    MPoly p;
    p.add_term(Monomial(vars.size(), 0), q);
    return p;
  }
  MPoly symbol(const std::string& s) {
    auto it = std::find(vars.begin(), vars.end(), s);
    if (it == vars.end()) fail(ErrorKind::ParseError, "unknown variable '" + s + "'");
    Monomial m(vars.size(), 0);
    m[it - vars.begin()] = 1;
    MPoly p;
    p.add_term(m, 1);
    return p;
  }
  MPoly add(const MPoly& a, const MPoly& b) { return mpoly_add(a, b); }
  MPoly sub(const MPoly& a, const MPoly& b) { return mpoly_sub(a, b); }
  MPoly mul(const MPoly& a, const MPoly& b) { return mpoly_mul(a, b); }
  MPoly neg(const MPoly& a) { return mpoly_scale(a, -1); }
  MPoly div(const MPoly& a, const MPoly& b) {
    if (b.t.size() != 1 || std::any_of(b.lead().begin(), b.lead().end(), [](int e) { return e != 0; }))
      fail(ErrorKind::ParseError, "division only by nonzero constants in a presentation");
    return mpoly_scale(a, 1 / b.lead_coeff());
  }
  MPoly pow(const MPoly& a, long e) {
    if (e < 0 || e > 64) fail(ErrorKind::ParseError, "exponent out of range");
    MPoly r = number(1);
    for (long k = 0; k < e; ++k) r = mpoly_mul(r, a);
    return r;
  }
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& s) {
  Presentation p;
  p.text = s;
  size_t lb = s.find('['), rb = s.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb || trim(s.substr(0, lb)) != "Q")
    fail(ErrorKind::ParseError, "presentation must look like Q[x,y]/(f, g)");
  for (auto& v : split_top(s.substr(lb + 1, rb - lb - 1))) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      fail(ErrorKind::ParseError, "bad variable name '" + v + "'");
    if (std::find(p.vars.begin(), p.vars.end(), v) != p.vars.end()) fail(ErrorKind::ParseError, "repeated variable " + v);
    p.vars.push_back(v);
  }
  if (p.vars.empty()) fail(ErrorKind::ParseError, "no variables");
  std::string rest = trim(s.substr(rb + 1));
  if (rest.empty()) return p;
  if (rest[0] != '/') fail(ErrorKind::ParseError, "expected '/(' after the variables");
  rest = trim(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') fail(ErrorKind::ParseError, "relations must be in (...)");
  PolyCtx ctx{p.vars};
  for (const auto& r : split_top(rest.substr(1, rest.size() - 2))) {
    if (r.empty()) fail(ErrorKind::ParseError, "empty relation");
    p.relations.push_back(parse_expression(r, ctx));
  }
  return p;
}

PresentedAlgebra presented_algebra(const Presentation& p, int max_dim) {
  PresentedAlgebra pa;
  pa.pres = p;
  pa.groebner = groebner_basis(p.relations);
  size_t m = p.vars.size();
  for (const auto& g : pa.groebner)
    if (std::all_of(g.lead().begin(), g.lead().end(), [](int e) { return e == 0; }))
      fail(ErrorKind::NotFiniteDimensional, "relations generate the unit ideal (zero ring)");
  for (size_t v = 0; v < m; ++v) {
    bool pure = false;
    for (const auto& g : pa.groebner) {
      const auto& lm = g.lead();
      bool only_v = lm[v] > 0;
      for (size_t w = 0; w < m; ++w)
        if (w != v && lm[w] != 0) only_v = false;
      pure = pure || only_v;
    }
    if (!pure) fail(ErrorKind::NotFiniteDimensional, "no pure power of " + p.vars[v] + " among leading monomials");
  }
  // standard monomials by breadth-first growth
  std::set<Monomial, GrevlexGreater> seen;
  std::deque<Monomial> queue{Monomial(m, 0)};
  auto standard = [&](const Monomial& x) {
    for (const auto& g : pa.groebner)
      if (mono_divides(g.lead(), x)) return false;
    return true;
  };
  while (!queue.empty()) {
    Monomial x = queue.front();
    queue.pop_front();
    if (seen.count(x) || !standard(x)) continue;
    seen.insert(x);
    if (static_cast<int>(seen.size()) > max_dim) fail(ErrorKind::SizeCap, "quotient dimension exceeds " + std::to_string(max_dim));
    for (size_t v = 0; v < m; ++v) {
      Monomial y = x;
      ++y[v];
      queue.push_back(y);
    }
  }
  // increasing order, so 1 comes first
  pa.standard.assign(seen.rbegin(), seen.rend());
  std::map<Monomial, int> index;
  for (size_t i = 0; i < pa.standard.size(); ++i) index[pa.standard[i]] = static_cast<int>(i);
  auto& a = pa.algebra;
  a.name = p.text;
  a.dim = static_cast<int>(pa.standard.size());
  a.mul.assign(a.dim, std::vector<Product>(a.dim));
  a.unit.assign(a.dim, Rational(0));
  a.unit[0] = 1;
  for (const auto& x : pa.standard) {
    MPoly mp;
    mp.add_term(x, 1);
    a.labels.push_back(mpoly_to_string(mp, p.vars));
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      MPoly mp;
      mp.add_term(mono_mul(pa.standard[i], pa.standard[j]), 1);
      MPoly nf = normal_form(mp, pa.groebner);
      for (const auto& [mono, c] : nf.t) a.mul[i][j].push_back({index.at(mono), c});
      std::sort(a.mul[i][j].begin(), a.mul[i][j].end(),
                [](const auto& u, const auto& v) { return u.first < v.first; });
    }
  validate_algebra(a);
  return pa;
}

KahlerResult kahler_presented(const Presentation& p) {
  auto pa = presented_algebra(p);
  size_t m = p.vars.size(), d = pa.standard.size();
  std::map<Monomial, int> index;
  for (size_t i = 0; i < d; ++i) index[pa.standard[i]] = static_cast<int>(i);
  KahlerResult r;
  r.algebra_dim = d;
  r.free_rank = m * d;
  // coordinates: (variable v, basis b) at v * d + b
  std::vector<exact::QVec> rel;
  for (const auto& f : p.relations) {
    std::vector<MPoly> partial;
    std::string text;
    for (size_t v = 0; v < m; ++v) {
      partial.push_back(normal_form(mpoly_derivative(f, static_cast<int>(v)), pa.groebner));
      if (partial.back().is_zero()) continue;
      text += (text.empty() ? "" : " + ") + std::string("(") + mpoly_to_string(partial.back(), p.vars) + ") d" + p.vars[v];
    }
    r.relations.push_back("d(" + mpoly_to_string(f, p.vars) + ") = " + (text.empty() ? "0" : text));
    for (const auto& b : pa.standard) {
      exact::QVec vec;
      for (size_t v = 0; v < m; ++v) {
        MPoly bm;
        bm.add_term(b, 1);
        for (const auto& [mono, c] : normal_form(mpoly_mul(bm, partial[v]), pa.groebner).t)
          vec.add(v * d + index.at(mono), c);
      }
      vec.normalize();
      rel.push_back(std::move(vec));
    }
  }
  r.relation_rank = exact::rank_of(rel);
  r.dim = r.free_rank - r.relation_rank;
  return r;
}

HkrResult hkr_degree1_check(const Presentation& p) {
  auto pa = presented_algebra(p);
  ensure(pa.algebra.is_commutative(), "presented algebra must be commutative");
  HkrResult r;
  r.hh1 = hochschild_homology(pa.algebra, 1).dim;
  r.omega1 = kahler_presented(p).dim;
  r.equal = r.hh1 == r.omega1;
  return r;
}

std::vector<std::string> presentation_corpus() {
  return {"Q[x]/(x^2)",        "Q[x]/(x^2 + 1)",         "Q[x]/(x^3)",           "Q[x]/(x^2 - 2)",
          "Q[x]/(x^3 - x^2)",  "Q[x,y]/(x^2, y^2)",      "Q[x,y]/(x^2, x*y, y^2)", "Q[x,y]/(x^2 - y, y^2)",
          "Q[x]/(x^4 - 1)"};
}

}  // namespace scissors::hochschild
