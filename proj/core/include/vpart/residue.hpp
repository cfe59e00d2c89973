#pragma once

#include <map>

#include "vpart/arrangement.hpp"
#include "vpart/series.hpp"

namespace vpart {

// p = 2 pi i q modulo 2 pi i Z^n, with q in [0,1)^n
struct Pole {
  RatVec q;
  Int order_hint() const { return lcm_den(q); }
  friend bool operator==(const Pole& a, const Pole& b) { return a.q == b.q; }
  friend bool operator<(const Pole& a, const Pole& b) { return a.q < b.q; }
};

// All q in [0,1)^n with B_sigma q = -r (mod Z^n); exactly vol(sigma) of them.
std::vector<Pole> poles_of_basis(const Basis& sigma, const RatVec& r);

struct PoleSet {
  std::vector<Pole> poles;
  unsigned M = 1;
};

// Union of the pole sets of the bases of c; r is indexed by direction.
PoleSet reduced_pole_set(const Arrangement& arr, const Chamber& c, const RatVec& r);

// Sorted list of n independent forms, the key of f_sigma = 1/prod(forms).
using FormSet = std::vector<IntVec>;

template <class C>
using SimpleFractionVector = std::map<FormSet, C>;

// coeff * z^numerator / prod(denominators), denominators not spanning
template <class C>
struct DroppedFraction {
  C coeff;
  Exponent numerator;
  std::vector<IntVec> denominators;
};

template <class C>
struct Decomposition {
  SimpleFractionVector<C> simple;
  std::vector<DroppedFraction<C>> dropped;
};

using HomogeneousPoly = std::map<Exponent, Rat>;

// Exact rewriting of P/prod(denoms) as simple fractions plus fractions with
// non-spanning denominators. Requires deg P = |denoms| - n and spanning denoms.
Decomposition<Rat> simple_fraction_decompose(const HomogeneousPoly& P, const std::vector<IntVec>& denoms,
                                             bool keep_dropped = true);
Decomposition<SymPoly> simple_fraction_decompose(const std::map<Exponent, SymPoly>& P,
                                                 const std::vector<IntVec>& denoms, bool keep_dropped = false);
Decomposition<CycNumber> simple_fraction_decompose(const std::map<Exponent, CycNumber>& P,
                                                   const std::vector<IntVec>& denoms, bool keep_dropped = true);

// Jeffrey-Kirwan pairing: sum coeff/vol(sigma) over sigma whose cone contains c.
SymPoly jk(const SimpleFractionVector<SymPoly>& v, const Chamber& c);
Rat jk(const SimpleFractionVector<Rat>& v, const Chamber& c);
CycNumber jk(const SimpleFractionVector<CycNumber>& v, const Chamber& c);
bool cone_contains_chamber(const FormSet& sigma, const Chamber& c);

// One factor (1 - zeta e^{-<beta,z>})^{-h} of the generating function.
struct PoleFactor {
  IntVec beta;
  CycNumber zeta;
  unsigned h = 1;
};

// Factors with zeta' = zeta e^{2 pi i <beta,q>} equal to 1 at the pole q.
std::vector<size_t> polar_factors(const std::vector<PoleFactor>& factors, const Pole& q);

// Tres of e^{<lambda,z>} / prod (1 - zeta'_j e^{-<beta_j,z>})^{h_j} at z = 0, with
// symbolic lambda. The character e^{-<lambda,p>} is not included.
SimpleFractionVector<SymPoly> tres_at_pole(size_t n, const std::vector<PoleFactor>& factors, const Pole& q);

// Same computation with numeric lambda and arbitrary forms (no halfspace
// condition). Also returns the homogeneous numerator that was decomposed.
struct NumericTres {
  std::map<Exponent, CycNumber> numerator;
  std::vector<IntVec> denominators;
  Decomposition<CycNumber> decomposition;
  bool spanning = true;
};
NumericTres tres_at_pole_numeric(size_t n, const std::vector<PoleFactor>& factors, const Pole& q,
                                 const RatVec& lambda);

}  // namespace vpart
