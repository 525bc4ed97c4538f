#pragma once
#include <map>
#include <optional>
#include <vector>

#include "scissors/geom/simplex.hpp"
#include "scissors/homology/complex.hpp"

namespace scissors::homology {

inline constexpr size_t kMaxPool = 512;

// A proper affine subspace spanned by points of the configuration, stored as
// the set of configuration points it contains.
struct PoolSpace {
  unsigned mask = 0;
  int dim = 0;
};

// Flag double complex on a finite configuration:
//   A_{-1,q} = q-tuples spanning a proper subspace,
//   A_{p,q}  = sum over strict flags U_0 > ... > U_p of q-tuples in U_p.
// Horizontal maps are the flag face maps sum (-1)^i s^i (inclusion at p = 0),
// vertical maps (-1)^p d.
struct FlagComplex {
  std::vector<geom::Point> points;
  int n = 0;
  int p_max = 0, q_max = 0;
  std::vector<PoolSpace> pool;
  std::map<unsigned, int> pool_index;  // mask -> pool id
  std::vector<std::vector<std::vector<int>>> flags;  // flags[p] = list of pool-id chains of length p + 1
  // basis of A_{p,q}: (flag id or -1, tuple); keyed by (p, q)
  std::map<std::pair<int, int>, std::vector<std::pair<int, std::vector<int>>>> basis;
  DoubleComplex dc;
};

struct FlagOptions {
  // negate the horizontal map out of this column (keeps all d^2 = 0 identities)
  std::optional<int> corrupt_column;
  // replace the full subset-span pool by the spans of these point subsets
  std::optional<std::vector<unsigned>> pool_masks;
};

// errors: PoolExplosion, TooManyPoints, SpanMissingFromPool
FlagComplex flag_double_complex(const std::vector<geom::Point>& points, int p_max, int q_max,
                                const FlagOptions& opt = {});

// s(sigma_(U_0..U_p)) = (-1)^(p+1) sigma_(U_0..U_p, U_sigma), zero when
// U_sigma = U_p; maps A_{p,q} -> A_{p+1,q}.
SparseIntMatrix flag_homotopy(const FlagComplex& fc, int p, int q);

// checks h s + s h = id on A_{p,q} for -1 <= p < p_max and all q
bool verify_flag_nullhomotopy(const FlagComplex& fc);

// order complex of the pool (chains = strict flags), degree p = flags of length p + 1
ChainComplex flag_order_complex(const FlagComplex& fc);

}  // namespace scissors::homology
