#include "vpart/linalg.hpp"

#include <utility>

namespace vpart {

namespace {

IntMat identity(size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMat& a, size_t i, size_t j) { std::swap(a[i], a[j]); }

void swap_cols(IntMat& a, size_t i, size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += k * row_j
void add_row(IntMat& a, size_t i, size_t j, const Int& k) {
  for (size_t c = 0; c < a[i].size(); ++c) a[i][c] += k * a[j][c];
}

void add_col(IntMat& a, size_t i, size_t j, const Int& k) {
  for (auto& row : a) row[i] += k * row[j];
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMat& a, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t k = 0; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  if (m.empty() || m[0].empty()) throw DimensionError("smith_normal_form: empty matrix");
  const size_t rows = m.size(), cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw DimensionError("smith_normal_form: ragged matrix");
  SmithForm s{identity(rows), m, identity(cols)};
  IntMat& D = s.D;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      size_t pr = rows, pc = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pr == rows || abs(D[i][j]) < abs(D[pr][pc]))) pr = i, pc = j;
      if (pr == rows) return s;
      if (pr != t) swap_rows(D, pr, t), swap_rows(s.U, pr, t);
      if (pc != t) swap_cols(D, pc, t), swap_cols(s.V, pc, t);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        add_row(D, i, t, -q);
        add_row(s.U, i, t, -q);
        if (D[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        add_col(D, j, t, -q);
        add_col(s.V, j, t, -q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(D, t, bad, Int(1));
      add_row(s.U, t, bad, Int(1));
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
  }
  return s;
}

IntMat to_int_mat(const std::vector<IntVec>& rows) {
  IntMat m;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return m;
}

RatMat to_rat_mat(const std::vector<IntVec>& rows) {
  RatMat m;
  for (const auto& r : rows) m.push_back(to_rat(r));
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || a[0].size() != b.size()) throw DimensionError("int_mul: shape mismatch");
  IntMat c(a.size(), std::vector<Int>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Int int_det(const IntMat& m) {
  RatMat r;
  for (const auto& row : m) {
    RatVec x;
    for (const auto& v : row) x.emplace_back(v);
    r.push_back(std::move(x));
  }
  return det(r).get_num();
}

Rat det(const RatMat& m) {
  const size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw DimensionError("det: matrix is not square");
  RatMat a = m;
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return d;
}

size_t rank(const RatMat& m) {
  if (m.empty()) return 0;
  RatMat a = m;
  return rref(a, m[0].size()).size();
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || a[0].size() != b.size()) throw DimensionError("mul: shape mismatch");
  RatMat c(a.size(), RatVec(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatVec mul(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw DimensionError("mul: shape mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

std::optional<RatMat> inverse(const RatMat& m) {
  const size_t n = m.size();
  RatMat a(n, RatVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse: matrix is not square");
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  auto piv = rref(a, n);
  if (piv.size() < n) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<RatVec> kernel(const RatMat& m, size_t cols) {
  RatMat a = m;
  auto piv = rref(a, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RatVec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const RatMat& m, const RatVec& b) {
  if (m.size() != b.size()) throw DimensionError("solve: rhs length mismatch");
  const size_t cols = m.empty() ? 0 : m[0].size();
  RatMat a = m;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw DimensionError("solve: ragged matrix");
    a[i].push_back(b[i]);
  }
  auto piv = rref(a, cols + 1);
  if (!piv.empty() && piv.back() == cols) return NoSolution{};
  RatVec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  if (piv.size() == cols) return Solution{x};
  return Underdetermined{x, kernel(m, cols)};
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& m, size_t cols) {
  if (m.empty()) {
    std::vector<IntVec> e;
    for (size_t i = 0; i < cols; ++i) {
      IntVec v(cols, 0);
      v[i] = 1;
      e.push_back(v);
    }
    return e;
  }
  auto s = smith_normal_form(to_int_mat(m));
  size_t r = 0;
  while (r < std::min(m.size(), cols) && s.D[r][r] != 0) ++r;
  std::vector<IntVec> out;
  for (size_t j = r; j < cols; ++j) {
    IntVec v(cols);
    for (size_t i = 0; i < cols; ++i) v[i] = to_ll(s.V[i][j]);
    out.push_back(v);
  }
  return out;
}

std::vector<size_t> independent_rows(const RatMat& rows) {
  std::vector<size_t> idx;
  RatMat cur;
  for (size_t i = 0; i < rows.size(); ++i) {
    cur.push_back(rows[i]);
    if (rank(cur) == cur.size()) {
      idx.push_back(i);
    } else {
      cur.pop_back();
    }
  }
  return idx;
}

}  // namespace vpart
