#include "scissors/exact/lll.hpp"

#include "scissors/exact/error.hpp"

namespace scissors::exact {
namespace {

Integer round_nearest(const Rational& q) {
  Rational t = q + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return r;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const size_t n = b.size();
  if (n < 2) return;
  const Rational delta(99, 100);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> B(n);
  // Gram-Schmidt from scratch
  std::vector<std::vector<Rational>> bs(n);
  for (size_t i = 0; i < n; ++i) {
    bs[i].assign(b[i].begin(), b[i].end());
    for (size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (size_t t = 0; t < b[i].size(); ++t) num += Rational(b[i][t]) * bs[j][t];
      mu[i][j] = num / B[j];
      for (size_t t = 0; t < bs[i].size(); ++t) bs[i][t] -= mu[i][j] * bs[j][t];
    }
    B[i] = 0;
    for (auto& x : bs[i]) B[i] += x * x;
    ensure(sgn(B[i]) > 0, "lll: dependent basis");
  }
  auto size_reduce = [&](size_t k, size_t l) {
    if (abs(mu[k][l]) <= Rational(1, 2)) return;
    Integer q = round_nearest(mu[k][l]);
    for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
    mu[k][l] -= q;
    for (size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
  };
  size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      Rational m = mu[k][k - 1];
      Rational Bn = B[k] + m * m * B[k - 1];
      mu[k][k - 1] = m * B[k - 1] / Bn;
      B[k] = B[k - 1] * B[k] / Bn;
      B[k - 1] = Bn;
      for (size_t i = k + 1; i < n; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
}

}  // namespace scissors::exact
