#pragma once
#include <map>
#include <string>
#include <vector>

#include "scissors/hochschild/algebra.hpp"

namespace scissors::hochschild {

using Monomial = std::vector<int>;

// graded reverse lexicographic, larger first
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial over Q in a fixed number of variables.
struct MPoly {
  std::map<Monomial, Rational, GrevlexGreater> t;

  bool is_zero() const { return t.empty(); }
  const Monomial& lead() const { return t.begin()->first; }
  const Rational& lead_coeff() const { return t.begin()->second; }
  void add_term(const Monomial& m, const Rational& c);
  bool operator==(const MPoly& o) const { return t == o.t; }
};

MPoly mpoly_add(const MPoly& a, const MPoly& b);
MPoly mpoly_sub(const MPoly& a, const MPoly& b);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);
MPoly mpoly_scale(const MPoly& a, const Rational& s);
MPoly mpoly_derivative(const MPoly& a, int var);
std::string mpoly_to_string(const MPoly& a, const std::vector<std::string>& vars);

// Reduced Groebner basis (grevlex), monic, sorted by leading monomial.
std::vector<MPoly> groebner_basis(std::vector<MPoly> gens);
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb);

struct Presentation {
  std::vector<std::string> vars;
  std::vector<MPoly> relations;
  std::string text;
};
// "Q[x,y]/(x^2, x*y - y^2)"
Presentation parse_presentation(const std::string& s);

struct PresentedAlgebra {
  Presentation pres;
  std::vector<MPoly> groebner;
  std::vector<Monomial> standard;  // normal-form basis, 1 first
  FiniteDimAlgebra algebra;
};
// NotFiniteDimensional unless every variable has a pure power among the leading monomials.
PresentedAlgebra presented_algebra(const Presentation& p, int max_dim = 64);

struct KahlerResult {
  size_t algebra_dim = 0;
  size_t free_rank = 0;      // m * dim A
  size_t relation_rank = 0;  // Q-rank of A * (df_j)
  size_t dim = 0;            // dim_Q Omega^1
  std::vector<std::string> relations;  // df_j = sum (df_j/dx_i) dx_i
};
// Omega^1 = (+_i A dx_i) / A<sum_i (df_j/dx_i) dx_i>
KahlerResult kahler_presented(const Presentation& p);

struct HkrResult {
  size_t hh1 = 0;
  size_t omega1 = 0;
  bool equal = false;
};
HkrResult hkr_degree1_check(const Presentation& p);

// commutative test presentations
std::vector<std::string> presentation_corpus();

}  // namespace scissors::hochschild
