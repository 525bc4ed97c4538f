#include "scissors/homology/smith.hpp"

#include <algorithm>
#include <set>

#include "scissors/exact/error.hpp"

namespace scissors::homology {

namespace {

using Dense = std::vector<std::vector<Integer>>;

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// diag(a, b) ~ diag(gcd, lcm): turns any diagonal into a divisibility chain
std::vector<Integer> chain_of(std::vector<Integer> d) {
  std::vector<Integer> units, rest;
  for (auto& x : d) {
    x = abs(x);
    (x == 1 ? units : rest).push_back(x);
  }
  for (size_t i = 0; i < rest.size(); ++i)
    for (size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = gcd(rest[i], rest[j]);
      Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  std::sort(rest.begin(), rest.end());
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

void swap_rows(Dense& a, size_t i, size_t j) { std::swap(a[i], a[j]); }
void swap_cols(Dense& a, size_t i, size_t j) {
  for (auto& r : a) std::swap(r[i], r[j]);
}
// row_i -= q * row_j
void row_axpy(Dense& a, size_t i, size_t j, const Integer& q) {
  for (size_t k = 0; k < a[i].size(); ++k)
    if (sgn(a[j][k]) != 0) a[i][k] -= q * a[j][k];
}
void col_axpy(Dense& a, size_t i, size_t j, const Integer& q) {
  for (auto& r : a)
    if (sgn(r[j]) != 0) r[i] -= q * r[j];
}

Dense identity(size_t n) {
  Dense d(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  size_t R = m.rows(), C = m.cols();
  Dense D = m.to_dense(), U = identity(R), V = identity(C);
  size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      size_t pi = R, pj = C;
      for (size_t i = t; i < R; ++i)
        for (size_t j = t; j < C; ++j)
          if (sgn(D[i][j]) != 0 && (pi == R || cmpabs(D[i][j], D[pi][pj]) < 0)) pi = i, pj = j;
      if (pi == R) break;
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
      bool dirty = false;
      for (size_t i = t + 1; i < R; ++i) {
        if (sgn(D[i][t]) == 0) continue;
        Integer q = D[i][t] / D[t][t];
        row_axpy(D, i, t, q);
        row_axpy(U, i, t, q);
        dirty = dirty || sgn(D[i][t]) != 0;
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (sgn(D[t][j]) == 0) continue;
        Integer q = D[t][j] / D[t][t];
        col_axpy(D, j, t, q);
        col_axpy(V, j, t, q);
        dirty = dirty || sgn(D[t][j]) != 0;
      }
      if (dirty) continue;
      // divisibility: fold an offending row into row t and go again
      size_t bad = R;
      for (size_t i = t + 1; i < R && bad == R; ++i)
        for (size_t j = t + 1; j < C; ++j)
          if (sgn(D[i][j]) != 0 && !mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      row_axpy(D, t, bad, -1);
      row_axpy(U, t, bad, -1);
    }
    if (sgn(D[t][t]) == 0) break;
    if (sgn(D[t][t]) < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : U[t]) x = -x;
    }
  }
  SmithForm s{SparseIntMatrix::from_dense(U), SparseIntMatrix::from_dense(D), SparseIntMatrix::from_dense(V), {}};
  if (R == 0) s.U = SparseIntMatrix(0, 0);
  if (C == 0) s.V = SparseIntMatrix(0, 0);
  if (R == 0 || C == 0) s.D = SparseIntMatrix(R, C);
  for (size_t i = 0; i < std::min(R, C); ++i)
    if (sgn(D[i][i]) != 0) s.diagonal.push_back(D[i][i]);
  ensure(s.U * m * s.V == s.D, "SNF: U m V != D");
  ensure(abs_determinant(s.U) == 1 && abs_determinant(s.V) == 1, "SNF: transform not unimodular");
  for (size_t i = 0; i + 1 < s.diagonal.size(); ++i)
    ensure(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()), "SNF: divisibility chain");
  for (const auto& [rc, v] : s.D.entries()) ensure(rc.first == rc.second, "SNF: off-diagonal entry");
  return s;
}

std::vector<Integer> invariant_factors(const SparseIntMatrix& m) {
  std::vector<std::map<size_t, Integer>> rows = m.row_maps();
  std::vector<std::set<size_t>> cols(m.cols());
  for (const auto& [rc, v] : m.entries()) cols[rc.second].insert(rc.first);
  std::set<size_t> live;
  for (size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) live.insert(i);

  auto put = [&](size_t i, size_t j, const Integer& v) {
    if (sgn(v) == 0) {
      rows[i].erase(j);
      cols[j].erase(i);
    } else {
      rows[i][j] = v;
      cols[j].insert(i);
    }
  };

  std::vector<Integer> diag;
  while (!live.empty()) {
    // pivot: smallest |value|, ties broken by Markowitz cost
    size_t pr = 0, pc = 0;
    const Integer* best = nullptr;
    size_t cost = 0;
    for (size_t i : live)
      for (const auto& [j, v] : rows[i]) {
        size_t c = (rows[i].size() - 1) * (cols[j].size() - 1);
        int cmp = best ? cmpabs(v, *best) : -1;
        if (cmp < 0 || (cmp == 0 && c < cost)) {
          best = &v;
          pr = i, pc = j, cost = c;
        }
      }
    Integer p = *best;
    bool dirty = false;
    std::vector<size_t> others(cols[pc].begin(), cols[pc].end());
    const auto prow = rows[pr];
    for (size_t i : others) {
      if (i == pr) continue;
      Integer q = rows[i][pc] / p;
      if (sgn(q) == 0) {
        dirty = true;
        continue;
      }
      for (const auto& [j, v] : prow) put(i, j, rows[i].count(j) ? Integer(rows[i][j] - q * v) : Integer(-q * v));
      if (rows[i].count(pc)) dirty = true;
      if (rows[i].empty()) live.erase(i);
    }
    if (dirty) continue;
    // column c is clean; reduce the pivot row by column operations
    if (abs(p) != 1) {
      std::vector<std::pair<size_t, Integer>> rest(rows[pr].begin(), rows[pr].end());
      for (const auto& [j, v] : rest) {
        if (j == pc) continue;
        Integer r = v - (v / p) * p;
        put(pr, j, r);
        dirty = dirty || sgn(r) != 0;
      }
      if (dirty) continue;
    }
    diag.push_back(abs(p));
    for (const auto& [j, v] : rows[pr]) cols[j].erase(pr);
    rows[pr].clear();
    live.erase(pr);
  }
  return chain_of(std::move(diag));
}

Integer abs_determinant(const SparseIntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;
  Dense a = m.to_dense();
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n || k == 0; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t s = k + 1;
      while (s < n && sgn(a[s][k]) == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    if (k + 1 >= n) break;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  (void)sign;
  return abs(a[n - 1][n - 1]);
}

}  // namespace scissors::homology
