#pragma once
#include <json.hpp>
#include <string>

#include "scissors/dehn/tensor.hpp"

namespace scissors::dehn {

enum class Verdict { NotCongruent_Volume, NotCongruent_Dehn, Congruent_DSJ, Unknown };
const char* verdict_name(Verdict v);

struct CongruenceVerdict {
  Verdict tag = Verdict::Unknown;
  Real volume_a, volume_b;
  DehnTensor difference;  // D(a) - D(b)
  long height_bound = kDefaultHeightBound;
};

CongruenceVerdict compare_polytopes(const geom::Polytope& a, const geom::Polytope& b,
                                    long height_bound = kDefaultHeightBound);

// Certificate for a verdict or a nonzero Dehn invariant: the inputs, the
// relations used and the irrationality witness of the surviving angle.
nlohmann::json verdict_certificate(const geom::Polytope& a, const geom::Polytope& b, const CongruenceVerdict& v);
nlohmann::json nonzero_certificate(const geom::Polytope& p, const DehnTensor& d);

struct RecheckResult {
  bool ok = false;
  std::string detail;
};
// Re-verifies a certificate with exact arithmetic only (no relation search).
RecheckResult recheck(const nlohmann::json& certificate);

}  // namespace scissors::dehn
