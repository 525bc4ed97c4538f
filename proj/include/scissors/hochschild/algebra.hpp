#pragma once
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scissors/exact/poly.hpp"

namespace scissors::hochschild {

using exact::Rational;

// e_i e_j = sum_k c_{ij}^k e_k, stored sparse.
using Product = std::vector<std::pair<int, Rational>>;

struct FiniteDimAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Product>> mul;  // mul[i][j]
  std::vector<Rational> unit;             // dense coordinates of 1
  // basis signs of an involution e_i* = conj[i] e_i, when the algebra has one
  std::optional<std::vector<int>> conj;

  const Product& product(int i, int j) const { return mul[i][j]; }
  // index of the basis vector equal to 1, if there is one
  std::optional<int> unit_index() const;
  bool is_commutative() const;
};

// Throws InvariantViolation unless associative and unital over all triples.
void validate_algebra(const FiniteDimAlgebra& a);

FiniteDimAlgebra algebra_Q();
FiniteDimAlgebra algebra_QI();
FiniteDimAlgebra algebra_quat();
FiniteDimAlgebra matrix_algebra(int n);
// "Q", "QI", "quat", "mat2", "mat4"
FiniteDimAlgebra algebra_by_name(const std::string& name);

// {"dim": n, "unit": [..], "mul": [[[[k, "p/q"], ...], ...], ...]}
FiniteDimAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_json(const FiniteDimAlgebra& a);

// dense coordinates of x*y
std::vector<Rational> multiply(const FiniteDimAlgebra& a, const std::vector<Rational>& x,
                               const std::vector<Rational>& y);

}  // namespace scissors::hochschild
