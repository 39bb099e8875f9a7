#include "quadric/lattice.hpp"

#include <utility>

#include "quadric/error.hpp"

namespace quadric {

IntVector to_vector(const KClass& v) { return {v.rank(), v.c1_e(), v.c1_f(), v.chi()}; }

KClass from_vector(const IntVector& x) {
  if (x.size() != 4) throw Error(ErrorCode::ParseError, "K-class vectors have four entries");
  return KClass(x[0], x[1], x[2], x[3]);
}

namespace {

size_t columns(const IntMatrix& a) { return a.empty() ? 0 : a.front().size(); }

// col_j -= q * col_i on both matrices
void column_axpy(IntMatrix& a, IntMatrix& u, size_t i, size_t j, const Integer& q) {
  for (auto& row : a) row[j] -= q * row[i];
  for (auto& row : u) row[j] -= q * row[i];
}

void column_swap(IntMatrix& a, IntMatrix& u, size_t i, size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : u) std::swap(row[i], row[j]);
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& input) {
  IntMatrix a = input;
  size_t n = columns(a);
  if (n == 0) return {};
  IntMatrix u(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  // Column echelon form: A U = [H | 0]; the trailing columns of U span the kernel.
  size_t pivot_col = 0;
  for (size_t row = 0; row < a.size() && pivot_col < n; ++row) {
    for (;;) {
      // smallest nonzero entry in this row among the remaining columns becomes the pivot
      size_t best = n;
      for (size_t j = pivot_col; j < n; ++j)
        if (a[row][j] != 0 && (best == n || abs(a[row][j]) < abs(a[row][best]))) best = j;
      if (best == n) break;
      column_swap(a, u, pivot_col, best);
      bool done = true;
      for (size_t j = pivot_col + 1; j < n; ++j) {
        if (a[row][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[row][j].get_mpz_t(), a[row][pivot_col].get_mpz_t());
        column_axpy(a, u, pivot_col, j, q);
        if (a[row][j] != 0) done = false;
      }
      if (done) {
        ++pivot_col;
        break;
      }
    }
  }
  IntMatrix basis;
  for (size_t j = pivot_col; j < n; ++j) {
    IntVector col(n);
    for (size_t i = 0; i < n; ++i) col[i] = u[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  size_t m = a.size(), n = columns(a);
  std::vector<Integer> out;
  size_t t = 0;
  while (t < m && t < n) {
    // move the smallest nonzero entry of the trailing block to (t, t)
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    bool clean = true;
    for (size_t i = t + 1; i < m; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < n; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // the pivot must divide the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < m && divides; ++i)
      for (size_t j = t + 1; j < n; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (size_t c = t; c < n; ++c) a[t][c] += a[i][c];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

bool is_saturated(const IntMatrix& rows) {
  auto d = smith_invariants(rows);
  if (d.size() != rows.size()) return false;
  for (const auto& x : d)
    if (x != 1) return false;
  return true;
}

}  // namespace quadric
