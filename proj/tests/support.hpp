#pragma once

#include <random>
#include <set>

#include "vpart/arrangement.hpp"
#include "vpart/formula.hpp"
#include "vpart/sympoly.hpp"

namespace vtest {

using namespace vpart;

inline SymPoly P(const std::string& s, size_t n = 2) { return parse_sympoly(s, n); }

// binom(x + m, k) as a polynomial
inline SymPoly binom(const SymPoly& x, long m, int k) {
  SymPoly r(Rat(1));
  Rat fact = 1;
  for (int j = 0; j < k; ++j) {
    r *= x + SymPoly(Rat(m - j));
    fact *= j + 1;
  }
  return r * CycNumber(Rat(1) / fact);
}

inline SymPoly a(size_t i, size_t n = 2) { return SymPoly::var(i - 1, n); }

inline System a2(int h = 1) { return System(2, {{1, 0}, {0, 1}, {1, 1}}, {h, h, h}); }
inline System nonuni(int h = 1) { return System(2, {{1, 0}, {0, 1}, {1, 2}}, {h, h, h}); }

inline RatVec qv(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline RatVec zero(size_t n) { return RatVec(n, 0); }

// Random valid system with n <= 3, N <= 6 and entries in [0,3].
inline System random_system(std::mt19937& rng) {
  for (;;) {
    size_t n = 1 + rng() % 3;
    size_t dirs = n + rng() % (7 - n);
    std::set<IntVec> seen;
    System s;
    s.n = n;
    int total = 0;
    for (size_t d = 0; d < dirs * 4 && s.vectors.size() < dirs; ++d) {
      IntVec v(n);
      for (auto& x : v) x = static_cast<long long>(rng() % 4);
      if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
      if (!seen.insert(v).second) continue;
      s.vectors.push_back(v);
      s.multiplicities.push_back(1);
      ++total;
    }
    while (total < 6 && rng() % 3 == 0) {
      ++s.multiplicities[rng() % s.vectors.size()];
      ++total;
    }
    try {
      validate_system(s);
      return s;
    } catch (const SystemError&) {
    }
  }
}

// All integer points of [lo,hi]^n.
inline std::vector<IntVec> box(size_t n, long long lo, long long hi) {
  std::vector<IntVec> out;
  IntVec p(n, lo);
  for (;;) {
    out.push_back(p);
    size_t i = 0;
    while (i < n && ++p[i] > hi) p[i++] = lo;
    if (i == n) break;
  }
  return out;
}

}  // namespace vtest
