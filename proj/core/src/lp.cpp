#include "vpart/lp.hpp"

#include <stdexcept>

#include "vpart/linalg.hpp"

namespace vpart {

void LinearSystem::add_eq(RatVec a, Rat rhs) {
  if (a.size() != nvars) throw DimensionError("LinearSystem: constraint length mismatch");
  equalities.push_back({std::move(a), std::move(rhs)});
}

void LinearSystem::add_ge(RatVec a, Rat rhs, bool strict) {
  if (a.size() != nvars) throw DimensionError("LinearSystem: constraint length mismatch");
  inequalities.push_back({std::move(a), std::move(rhs), strict});
}

void LinearSystem::add_le(RatVec a, Rat rhs, bool strict) {
  for (auto& x : a) x = -x;
  add_ge(std::move(a), -rhs, strict);
}

void LinearSystem::bound(size_t var, const Rat& lo, const Rat& hi, bool strict) {
  RatVec e(nvars, 0);
  e[var] = 1;
  add_ge(e, lo, strict);
  add_le(e, hi, strict);
}

namespace {

class Tableau {
 public:
  Tableau(size_t rows, size_t cols) : t_(rows + 1, RatVec(cols + 1, 0)), basis_(rows), m_(rows), n_(cols) {}

  Rat& at(size_t r, size_t c) { return t_[r][c]; }
  Rat& rhs(size_t r) { return t_[r][n_]; }
  Rat& obj(size_t c) { return t_[m_][c]; }
  size_t& basic(size_t r) { return basis_[r]; }
  size_t rows() const { return m_; }
  size_t cols() const { return n_; }

  void pivot(size_t r, size_t c) {
    Rat inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rat f = t_[i][c];
      for (size_t k = 0; k <= n_; ++k)
        if (t_[r][k] != 0) t_[i][k] -= f * t_[r][k];
    }
    basis_[r] = c;
  }

  // Minimize the objective row (stored as reduced costs, value in rhs slot
  // negated). Columns in `blocked` may not enter.
  void minimize(const std::vector<bool>& blocked) {
    for (;;) {
      size_t enter = n_;
      for (size_t c = 0; c < n_; ++c)
        if (!blocked[c] && t_[m_][c] < 0) {
          enter = c;
          break;
        }
      if (enter == n_) return;
      size_t leave = m_;
      Rat best;
      for (size_t r = 0; r < m_; ++r) {
        if (t_[r][enter] <= 0) continue;
        Rat ratio = t_[r][n_] / t_[r][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == m_) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
    }
  }

 private:
  std::vector<RatVec> t_;
  std::vector<size_t> basis_;
  size_t m_, n_;
};

}  // namespace

std::optional<RatVec> feasible(const LinearSystem& sys) {
  const size_t n = sys.nvars;
  std::vector<bool> nonneg = sys.nonneg;
  if (nonneg.empty()) nonneg.assign(n, false);
  if (nonneg.size() != n) throw DimensionError("LinearSystem: nonneg mask length mismatch");

  // column layout: per variable one or two columns, then surplus per
  // inequality, then the strict slack s and its complement, then artificials
  std::vector<size_t> pos(n), neg(n, SIZE_MAX);
  size_t col = 0;
  for (size_t i = 0; i < n; ++i) {
    pos[i] = col++;
    if (!nonneg[i]) neg[i] = col++;
  }
  bool any_strict = false;
  for (const auto& q : sys.inequalities) any_strict = any_strict || q.strict;
  const size_t surplus0 = col;
  col += sys.inequalities.size();
  size_t s_col = SIZE_MAX, s_comp = SIZE_MAX;
  if (any_strict) {
    s_col = col++;
    s_comp = col++;
  }
  const size_t rows = sys.equalities.size() + sys.inequalities.size() + (any_strict ? 1 : 0);
  const size_t art0 = col;
  const size_t total = col + rows;
  Tableau tab(rows, total);

  size_t r = 0;
  auto fill_vars = [&](const RatVec& a) {
    for (size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      tab.at(r, pos[i]) = a[i];
      if (neg[i] != SIZE_MAX) tab.at(r, neg[i]) = -a[i];
    }
  };
  for (const auto& e : sys.equalities) {
    fill_vars(e.a);
    tab.rhs(r) = e.rhs;
    ++r;
  }
  for (size_t k = 0; k < sys.inequalities.size(); ++k) {
    const auto& q = sys.inequalities[k];
    fill_vars(q.a);
    tab.at(r, surplus0 + k) = -1;
    if (q.strict) tab.at(r, s_col) = -1;
    tab.rhs(r) = q.rhs;
    ++r;
  }
  if (any_strict) {
    tab.at(r, s_col) = 1;
    tab.at(r, s_comp) = 1;
    tab.rhs(r) = 1;
    ++r;
  }
  for (size_t i = 0; i < rows; ++i) {
    if (tab.rhs(i) < 0) {
      for (size_t c = 0; c < art0; ++c) tab.at(i, c) = -tab.at(i, c);
      tab.rhs(i) = -tab.rhs(i);
    }
    tab.at(i, art0 + i) = 1;
    tab.basic(i) = art0 + i;
  }
  // phase 1: minimize the sum of artificials
  for (size_t c = 0; c <= total; ++c) {
    if (c >= art0 && c < total) continue;
    Rat s = 0;
    for (size_t i = 0; i < rows; ++i) s -= (c == total ? tab.rhs(i) : tab.at(i, c));
    if (c == total)
      tab.obj(total) = s;
    else
      tab.obj(c) = s;
  }
  std::vector<bool> blocked(total, false);
  tab.minimize(blocked);
  if (tab.obj(total) != 0) return std::nullopt;
  // drive remaining artificials out of the basis where possible
  for (size_t i = 0; i < rows; ++i) {
    if (tab.basic(i) < art0) continue;
    for (size_t c = 0; c < art0; ++c)
      if (tab.at(i, c) != 0) {
        tab.pivot(i, c);
        break;
      }
  }
  for (size_t c = art0; c < total; ++c) blocked[c] = true;

  if (any_strict) {
    // phase 2: maximize s, i.e. minimize -s
    for (size_t c = 0; c <= total; ++c) tab.obj(c) = 0;
    tab.obj(s_col) = -1;
    for (size_t i = 0; i < rows; ++i) {
      size_t b = tab.basic(i);
      if (b == s_col) {
        for (size_t c = 0; c <= total; ++c) {
          Rat v = (c == total) ? tab.rhs(i) : tab.at(i, c);
          if (c == total)
            tab.obj(total) += v;
          else
            tab.obj(c) += v;
        }
      }
    }
    tab.minimize(blocked);
  }

  std::vector<Rat> val(total, 0);
  for (size_t i = 0; i < rows; ++i) val[tab.basic(i)] = tab.rhs(i);
  if (any_strict && val[s_col] <= 0) return std::nullopt;
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = val[pos[i]] - (neg[i] != SIZE_MAX ? val[neg[i]] : Rat(0));
  return x;
}

bool satisfies(const LinearSystem& sys, const RatVec& x) {
  if (x.size() != sys.nvars) return false;
  for (const auto& e : sys.equalities)
    if (dot(e.a, x) != e.rhs) return false;
  for (const auto& q : sys.inequalities) {
    Rat v = dot(q.a, x);
    if (q.strict ? !(v > q.rhs) : !(v >= q.rhs)) return false;
  }
  if (!sys.nonneg.empty())
    for (size_t i = 0; i < x.size(); ++i)
      if (sys.nonneg[i] && x[i] < 0) return false;
  return true;
}

}  // namespace vpart
