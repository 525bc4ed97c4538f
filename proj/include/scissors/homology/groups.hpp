#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "scissors/homology/complex.hpp"

namespace scissors::homology {

// Finite group by multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> sign;                // a homomorphism to {+1,-1}, empty if none given

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
};

// validated: identity at 0, associativity, inverses
FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table, std::vector<int> sign = {});
FiniteGroup cyclic_group(int m);
FiniteGroup symmetric_group3();
FiniteGroup trivial_group();
// "Z/m", "S3", "1"
FiniteGroup group_from_spec(const std::string& spec);
// {"order": n, "table": [[...]], "action": {gen: matrix}}; returns the group,
// the module is read by module_from_json
FiniteGroup group_from_json(const nlohmann::json& j);

using IntMat = std::vector<std::vector<long>>;

// Free Z-module of rank r with integer action matrices rho(g), one per element.
struct GroupModule {
  std::string name;
  int rank = 0;
  std::vector<IntMat> action;
};

GroupModule trivial_module(const FiniteGroup& g, int rank = 1);
GroupModule sign_module(const FiniteGroup& g);
// "trivialZ", "signZ"
GroupModule module_from_spec(const FiniteGroup& g, const std::string& spec);
// action given on generators, extended multiplicatively
GroupModule module_from_json(const FiniteGroup& g, const nlohmann::json& action);
// checks rho(a) rho(b) = rho(ab), rho(e) = 1
void validate_module(const FiniteGroup& g, const GroupModule& m);

inline constexpr int kMaxGroupOrder = 16;
inline constexpr int kMaxBarDegree = 4;
inline constexpr size_t kMaxBarRank = 40000;

// Coinvariants of the homogeneous bar complex C_*(G) (x) M, in degrees
// 0..degree_cap + 1 so that homology is exact through degree_cap. The
// class of (g_0, .., g_n) (x) m is represented by (g_0^-1 g_1, .., g_0^-1 g_n) (x) g_0^-1 m.
// errors: SizeCap
ChainComplex bar_complex(const FiniteGroup& g, const GroupModule& m, int degree_cap);
std::vector<HomologyResult> group_homology(const FiniteGroup& g, const GroupModule& m, int degree_cap);

// M_G computed directly: Z^r modulo the span of (rho(g) - 1) e_i
HomologyResult coinvariants(const FiniteGroup& g, const GroupModule& m);

// H <= G given by element ids of G; returns H as a group and the embedding
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;  // H id -> G id
};
Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

// Z[G] (x)_{Z[H]} M with basis (coset representative, basis vector of M)
GroupModule induced_module(const FiniteGroup& g, const Subgroup& h, const GroupModule& m);

struct ShapiroResult {
  bool equal = false;
  std::vector<HomologyResult> over_g, over_h;
};
ShapiroResult shapiro_check(const FiniteGroup& g, const Subgroup& h, const GroupModule& m, int degree_cap);

}  // namespace scissors::homology
