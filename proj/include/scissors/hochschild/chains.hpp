#pragma once
#include <map>
#include <vector>

#include "scissors/exact/qlinalg.hpp"
#include "scissors/exact/rng.hpp"
#include "scissors/hochschild/algebra.hpp"

namespace scissors::hochschild {

using exact::QVec;

// Element of A^{(n+1)}: tuple (i_0..i_n) is stored at index sum i_s d^(n-s).
struct HochschildChain {
  int degree = 0;
  QVec v;

  bool is_zero() const { return v.empty(); }
  bool operator==(const HochschildChain& o) const { return degree == o.degree && v == o.v; }
};

uint64_t tuple_index(int dim, const std::vector<int>& t);
std::vector<int> index_tuple(int dim, int degree, uint64_t idx);

HochschildChain make_chain(const FiniteDimAlgebra& a, int degree, const std::map<std::vector<int>, Rational>& terms);
std::map<std::vector<int>, Rational> chain_terms(const FiniteDimAlgebra& a, const HochschildChain& c);
HochschildChain operator+(const HochschildChain& x, const HochschildChain& y);
HochschildChain operator-(const HochschildChain& x, const HochschildChain& y);
HochschildChain scaled(const HochschildChain& x, const Rational& s);

// a_0 (x) .. (x) a_i a_{i+1} (x) .. (x) a_n
HochschildChain epsilon(const FiniteDimAlgebra& a, int i, const HochschildChain& c);
// sum_{i<n} (-1)^i eps_i + (-1)^n a_n a_0 (x) a_1 .. a_{n-1}, on the whole tensor power
HochschildChain bar_boundary(const FiniteDimAlgebra& a, const HochschildChain& c);
bool in_omega(const FiniteDimAlgebra& a, const HochschildChain& c);
// bar_boundary restricted to Omega_n; NotInOmega otherwise
HochschildChain hochschild_boundary(const FiniteDimAlgebra& a, const HochschildChain& c);

// da = 1 (x) a - a (x) 1, forms multiplied over A
HochschildChain differential_form(const FiniteDimAlgebra& a, const std::vector<int>& idx);
// {e_{i0} de_{i1} .. de_{in}} with i_1..i_n avoiding one unit index: a basis of Omega_n
std::vector<HochschildChain> differential_basis(const FiniteDimAlgebra& a, int n);
// the complement index skipped by differential_basis
int unit_complement_index(const FiniteDimAlgebra& a);
// Omega_n as the intersection of the kernels of eps_0..eps_{n-1}
std::vector<HochschildChain> omega_basis(const FiniteDimAlgebra& a, int n, uint64_t cap = 65536);

struct HHResult {
  int degree = 0;
  size_t dim = 0;
  size_t omega_dim = 0;
  size_t cycles_dim = 0;      // I_n = ker b on Omega_n
  size_t boundaries_dim = 0;  // B_n = b(Omega_{n+1})
  std::vector<HochschildChain> representatives;
};

// default cap on dim Omega_{n+1}
constexpr uint64_t kHochschildCap = 20000;
HHResult hochschild_homology(const FiniteDimAlgebra& a, int n, uint64_t cap = kHochschildCap);

HochschildChain random_omega_chain(const FiniteDimAlgebra& a, int n, Rng& rng, int terms = 4);

std::string chain_to_string(const FiniteDimAlgebra& a, const HochschildChain& c);

// spans, as chains of one degree
size_t chain_rank(const std::vector<HochschildChain>& cs);
bool same_span(const std::vector<HochschildChain>& x, const std::vector<HochschildChain>& y);

}  // namespace scissors::hochschild
