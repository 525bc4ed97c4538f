#pragma once
#include <string>
#include <vector>

#include "scissors/exact/angle.hpp"

namespace scissors::exact {

// sum m_j theta_j = pi_multiple * pi, certified by prod z_j^(2 m_j) = 1.
struct IntegerRelation {
  std::vector<Integer> m;
  Integer pi_multiple;
  std::string field;  // "multiquadratic" or "algebraic" (where the product was evaluated)
};

struct RelationSearch {
  std::vector<IntegerRelation> relations;  // independent, each certified
  long height_bound = 0;
  unsigned precision_bits = 0;
};

constexpr unsigned kDefaultPrecision = 256;
constexpr unsigned kMaxPrecision = 4096;

RelationSearch find_angle_relations(const std::vector<AnglePair>& angles, long height_bound,
                                    unsigned start_bits = kDefaultPrecision);

// Exact check of prod z_j^(2 m_j) == 1; sets `field` to the arithmetic used.
bool verify_relation(const std::vector<AnglePair>& angles, const std::vector<Integer>& m,
                     std::string* field = nullptr);

}  // namespace scissors::exact
