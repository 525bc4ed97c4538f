#pragma once
#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "scissors/hochschild/chains.hpp"

namespace scissors::hochschild {

// The Hochschild involution on Omega_n of an algebra with conjugation:
//   a_0 da_1 .. da_n  ->  (-1)^{n(n+1)/2} a_0* da_n* .. da_1*
// In degree 1 this is a_0 da_1 -> -a_0* d(a_1*).  Commutes with b.
HochschildChain tau(const FiniteDimAlgebra& a, const HochschildChain& c);

// a_0 (x) .. (x) a_n -> a_0* (x) .. (x) a_n* on the full tensor power
HochschildChain conjugate_tensor(const FiniteDimAlgebra& a, const HochschildChain& c);
// a_0 (x) a_1 -> a_1* (x) a_0*
HochschildChain swap_conjugate(const FiniteDimAlgebra& a, const HochschildChain& c);

using ChainMap = std::function<HochschildChain(const HochschildChain&)>;

struct Eigenspaces {
  std::vector<HochschildChain> plus, minus;
};
// Splits span(basis) under an involution f; NotStable if f leaves the span.
Eigenspaces eigenspace_split(const std::vector<HochschildChain>& basis, const ChainMap& f);

// a_0 (x) a_1 -> a_0 ^ a_1*, coordinates on e_a ^ e_b (a < b) at a*dim+b
QVec wedge_image(const FiniteDimAlgebra& a, const HochschildChain& c);
size_t wedge_rank(const FiniteDimAlgebra& a, const std::vector<HochschildChain>& cs);

using Quaternion = std::array<Rational, 4>;
Quaternion quat_mul(const Quaternion& x, const Quaternion& y);
Quaternion quat_conj(const Quaternion& x);
Rational quat_norm(const Quaternion& x);

// (q_1, q_2) acting by a_0 -> q_2 a_0 q_2* in degree 0 and by
// q_1 a_0 q_2* (x) q_2 a_1 q_1* (x) q_1 a_i q_1* .. in degree n > 0
HochschildChain spin_action(const FiniteDimAlgebra& a, const Quaternion& q1, const Quaternion& q2,
                            const HochschildChain& c);

struct MinusCheck {
  size_t omega_minus = 0;  // dim Omega_2^-
  size_t cycles_minus = 0;  // dim I_2^-
  size_t boundaries_minus = 0;  // dim B_2^-
  bool equal = false;
};
// I_2(H)^- versus B_2(H)^- under tau
MinusCheck i2_minus_vs_b2_minus(const FiniteDimAlgebra& h);

// 0 -> I_1^- -> (H (x) H)^- -> H^- + H^- under (eps_0, -eps_1), with
// eps_1(a_0 (x) a_1) = a_1 a_0 and "-" the factorwise conjugation
struct SesAudit {
  size_t source_dim = 0;
  size_t kernel_dim = 0;
  size_t image_dim = 0;
  size_t target_dim = 0;
  size_t coker_dim = 0;
  bool image_in_target = false;
  size_t i1_minus_dim = 0;  // I_1 intersected with the minus space
  bool kernel_is_i1_minus = false;
  bool image_antidiagonal = false;  // image inside {(x, -x)}
};
SesAudit ses_audit(const FiniteDimAlgebra& h);

}  // namespace scissors::hochschild
