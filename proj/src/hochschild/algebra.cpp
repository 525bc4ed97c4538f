#include "scissors/hochschild/algebra.hpp"

#include <map>

#include "scissors/exact/error.hpp"
#include "scissors/exact/literal.hpp"

namespace scissors::hochschild {

namespace {

std::vector<Rational> basis_vec(int dim, int i) {
  std::vector<Rational> v(dim);
  v[i] = 1;
  return v;
}

std::vector<Rational> dense(int dim, const Product& p) {
  std::vector<Rational> v(dim);
  for (const auto& [k, c] : p) v[k] += c;
  return v;
}

FiniteDimAlgebra empty_algebra(std::string name, int dim) {
  FiniteDimAlgebra a;
  a.name = std::move(name);
  a.dim = dim;
  a.mul.assign(dim, std::vector<Product>(dim));
  a.unit.assign(dim, Rational(0));
  return a;
}

}  // namespace

std::optional<int> FiniteDimAlgebra::unit_index() const {
  std::optional<int> idx;
  for (int i = 0; i < dim; ++i) {
    if (sgn(unit[i]) == 0) continue;
    if (idx || unit[i] != 1) return std::nullopt;
    idx = i;
  }
  return idx;
}

bool FiniteDimAlgebra::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (dense(dim, mul[i][j]) != dense(dim, mul[j][i])) return false;
  return true;
}

std::vector<Rational> multiply(const FiniteDimAlgebra& a, const std::vector<Rational>& x,
                               const std::vector<Rational>& y) {
  std::vector<Rational> r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational s = x[i] * y[j];
      for (const auto& [k, c] : a.mul[i][j]) r[k] += s * c;
    }
  }
  return r;
}

void validate_algebra(const FiniteDimAlgebra& a) {
  ensure(a.dim > 0, "algebra of dimension 0");
  ensure(static_cast<int>(a.mul.size()) == a.dim && static_cast<int>(a.unit.size()) == a.dim,
         "structure constant table has wrong shape");
  for (const auto& row : a.mul) {
    ensure(static_cast<int>(row.size()) == a.dim, "structure constant table has wrong shape");
    for (const auto& p : row)
      for (const auto& [k, c] : p) ensure(k >= 0 && k < a.dim, "structure constant index out of range");
  }
  for (int i = 0; i < a.dim; ++i) {
    auto e = basis_vec(a.dim, i);
    ensure(multiply(a, a.unit, e) == e && multiply(a, e, a.unit) == e, a.name + ": unit law fails on basis " +
                                                                            std::to_string(i));
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto ij = dense(a.dim, a.mul[i][j]);
      for (int k = 0; k < a.dim; ++k) {
        auto ek = basis_vec(a.dim, k);
        auto jk = dense(a.dim, a.mul[j][k]);
        ensure(multiply(a, ij, ek) == multiply(a, basis_vec(a.dim, i), jk),
               a.name + ": not associative on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
      }
    }
  if (a.conj) {
    ensure(static_cast<int>(a.conj->size()) == a.dim, "conjugation table has wrong shape");
    // anti-automorphism: (xy)* = y* x*
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        auto lhs = dense(a.dim, a.mul[i][j]);
        for (int k = 0; k < a.dim; ++k) lhs[k] *= (*a.conj)[k];
        auto rhs = dense(a.dim, a.mul[j][i]);
        for (auto& x : rhs) x *= (*a.conj)[i] * (*a.conj)[j];
        ensure(lhs == rhs, a.name + ": conjugation is not an anti-automorphism");
      }
  }
}

FiniteDimAlgebra algebra_Q() {
  auto a = empty_algebra("Q", 1);
  a.labels = {"1"};
  a.mul[0][0] = {{0, 1}};
  a.unit = {1};
  a.conj = std::vector<int>{1};
  validate_algebra(a);
  return a;
}

FiniteDimAlgebra algebra_QI() {
  auto a = empty_algebra("QI", 2);
  a.labels = {"1", "i"};
  a.mul[0][0] = {{0, 1}};
  a.mul[0][1] = a.mul[1][0] = {{1, 1}};
  a.mul[1][1] = {{0, -1}};
  a.unit = {1, 0};
  a.conj = std::vector<int>{1, -1};
  validate_algebra(a);
  return a;
}

FiniteDimAlgebra algebra_quat() {
  auto a = empty_algebra("quat", 4);
  a.labels = {"1", "i", "j", "k"};
  for (int x = 0; x < 4; ++x) {
    a.mul[0][x] = {{x, 1}};
    a.mul[x][0] = {{x, 1}};
  }
  for (int x = 1; x < 4; ++x) a.mul[x][x] = {{0, -1}};
  // i j = k, j k = i, k i = j and the reversed products negated
  for (int x = 1; x < 4; ++x) {
    int y = x % 3 + 1, z = y % 3 + 1;
    a.mul[x][y] = {{z, 1}};
    a.mul[y][x] = {{z, -1}};
  }
  a.unit = {1, 0, 0, 0};
  a.conj = std::vector<int>{1, -1, -1, -1};
  validate_algebra(a);
  return a;
}

FiniteDimAlgebra matrix_algebra(int n) {
  if (n < 1 || n > 4) fail(ErrorKind::SizeCap, "matrix algebras up to 4x4");
  auto a = empty_algebra("mat" + std::to_string(n), n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  // E_rc E_st = [c == s] E_rt
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int t = 0; t < n; ++t) a.mul[r * n + c][c * n + t] = {{r * n + t, 1}};
  for (int r = 0; r < n; ++r) a.unit[r * n + r] = 1;
  validate_algebra(a);
  return a;
}

FiniteDimAlgebra algebra_by_name(const std::string& name) {
  if (name == "Q") return algebra_Q();
  if (name == "QI") return algebra_QI();
  if (name == "quat" || name == "H") return algebra_quat();
  if (name == "mat2") return matrix_algebra(2);
  if (name == "mat4") return matrix_algebra(4);
  fail(ErrorKind::ParseError, "unknown algebra '" + name + "' (Q, QI, quat, mat2, mat4)");
}

namespace {
Rational rat_of(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  fail(ErrorKind::ParseError, "expected rational");
}
}  // namespace

FiniteDimAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > 64) fail(ErrorKind::ParseError, "algebra dimension must be in 1..64");
    auto a = empty_algebra(j.value("name", std::string("custom")), dim);
    if (j.contains("labels"))
      a.labels = j.at("labels").get<std::vector<std::string>>();
    else
      for (int i = 0; i < dim; ++i) a.labels.push_back("e" + std::to_string(i));
    const auto& u = j.at("unit");
    if (!u.is_array() || static_cast<int>(u.size()) != dim) fail(ErrorKind::ParseError, "unit must have dim entries");
    for (int i = 0; i < dim; ++i) a.unit[i] = rat_of(u[i]);
    const auto& m = j.at("mul");
    if (!m.is_array() || static_cast<int>(m.size()) != dim) fail(ErrorKind::ParseError, "mul must be dim x dim");
    for (int i = 0; i < dim; ++i) {
      if (!m[i].is_array() || static_cast<int>(m[i].size()) != dim) fail(ErrorKind::ParseError, "mul must be dim x dim");
      for (int k = 0; k < dim; ++k) {
        std::map<int, Rational> acc;
        for (const auto& e : m[i][k]) {
          if (!e.is_array() || e.size() != 2) fail(ErrorKind::ParseError, "structure constant must be [k, c]");
          int idx = e[0].get<int>();
          if (idx < 0 || idx >= dim) fail(ErrorKind::IndexOutOfRange, "structure constant index");
          acc[idx] += rat_of(e[1]);
        }
        for (const auto& [idx, c] : acc)
          if (sgn(c) != 0) a.mul[i][k].push_back({idx, c});
      }
    }
    if (j.contains("conj")) a.conj = j.at("conj").get<std::vector<int>>();
    validate_algebra(a);
    return a;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("algebra: ") + e.what());
  }
}

nlohmann::json algebra_json(const FiniteDimAlgebra& a) {
  nlohmann::json mul = nlohmann::json::array(), unit = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim; ++j) {
      nlohmann::json p = nlohmann::json::array();
      for (const auto& [k, c] : a.mul[i][j]) p.push_back({k, exact::rational_literal(c)});
      row.push_back(p);
    }
    mul.push_back(row);
  }
  for (const auto& x : a.unit) unit.push_back(exact::rational_literal(x));
  nlohmann::json j = {{"name", a.name}, {"dim", a.dim}, {"labels", a.labels}, {"unit", unit}, {"mul", mul}};
  if (a.conj) j["conj"] = *a.conj;
  return j;
}

}  // namespace scissors::hochschild
