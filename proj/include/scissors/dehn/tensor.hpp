#pragma once
#include <json.hpp>
#include <vector>

#include "scissors/dehn/length.hpp"
#include "scissors/exact/relations.hpp"
#include "scissors/geom/polytope.hpp"

namespace scissors::dehn {

using exact::AnglePair;
using exact::Real;

constexpr long kDefaultHeightBound = 20;

struct DehnTerm {
  Length length;
  AnglePair angle;
};

// Element of R (x) R/pi Z in normal form: rational angles dropped, equal
// angles merged, certified relations used to eliminate dependent angles.
struct DehnTensor {
  std::vector<DehnTerm> terms;  // increasing angle
  // relations among `relation_angles` (the merged angles before elimination)
  std::vector<AnglePair> relation_angles;
  std::vector<exact::IntegerRelation> relations_used;
  long height_bound = kDefaultHeightBound;
  unsigned precision_bits = 0;

  bool empty() const { return terms.empty(); }
};

DehnTensor normalize(const std::vector<DehnTerm>& raw, long height_bound = kDefaultHeightBound);

// Normal form using only the given relations (no numeric search); used to
// recheck certificates with exact arithmetic alone.
DehnTensor normalize_with(const std::vector<DehnTerm>& raw, const std::vector<AnglePair>& angles,
                          const std::vector<exact::IntegerRelation>& relations);

DehnTensor tensor_add(const DehnTensor& a, const DehnTensor& b);
DehnTensor tensor_neg(const DehnTensor& a);
DehnTensor tensor_sub(const DehnTensor& a, const DehnTensor& b);

// length (x) angle over all boundary edges, unnormalized
std::vector<DehnTerm> dehn_terms(const geom::Polytope& p);
DehnTensor dehn_invariant(const geom::Polytope& p, long height_bound = kDefaultHeightBound);

enum class ZeroStatus { Zero, NonzeroCertified, Unknown };
const char* zero_status_name(ZeroStatus z);
ZeroStatus is_zero(const DehnTensor& t);

nlohmann::json term_json(const DehnTerm& t);
DehnTerm term_from_json(const nlohmann::json& j);
nlohmann::json relation_json(const exact::IntegerRelation& r);
exact::IntegerRelation relation_from_json(const nlohmann::json& j);
// {"terms": [...], "height_bound": n, "relations": [...], "relation_angles": [...]}
nlohmann::json tensor_json(const DehnTensor& t);
// raw terms plus optional height_bound; normalized on load
DehnTensor tensor_from_json(const nlohmann::json& j);

}  // namespace scissors::dehn
