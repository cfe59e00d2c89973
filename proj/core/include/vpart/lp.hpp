#pragma once

#include <optional>

#include "vpart/numeric.hpp"

namespace vpart {

// a . x >= rhs, or a . x > rhs when strict.
struct Inequality {
  RatVec a;
  Rat rhs;
  bool strict = false;
};

struct Equality {
  RatVec a;
  Rat rhs;
};

struct LinearSystem {
  size_t nvars = 0;
  std::vector<Equality> equalities;
  std::vector<Inequality> inequalities;
  std::vector<bool> nonneg;  // optional per-variable x_i >= 0, empty means all free

  explicit LinearSystem(size_t n = 0) : nvars(n) {}
  void add_eq(RatVec a, Rat rhs);
  void add_ge(RatVec a, Rat rhs, bool strict = false);
  void add_le(RatVec a, Rat rhs, bool strict = false);
  void bound(size_t var, const Rat& lo, const Rat& hi, bool strict = false);
};

// Exact feasibility by two-phase simplex with Bland's rule. Strict
// inequalities share one slack s in [0,1] that is maximized; the system is
// infeasible when the optimum is s = 0.
std::optional<RatVec> feasible(const LinearSystem& sys);

bool satisfies(const LinearSystem& sys, const RatVec& x);

}  // namespace vpart
