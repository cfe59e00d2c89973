#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include "vpart/arrangement.hpp"
#include "vpart/cyclotomic.hpp"
#include "vpart/formula.hpp"
#include "vpart/mero.hpp"

namespace vpart {

// Visits every x in N^m with sum_k x_k vectors[k] = target. The vectors must
// lie in an open halfspace.
void enumerate_solutions(const std::vector<IntVec>& vectors, const IntVec& target,
                         const std::function<void(const IntVec&)>& visit);

Int count_points(const System& s, const IntVec& lambda);

// f is a polynomial in the flattened coordinates x_1..x_N.
Rat sum_weight(const System& s, const IntVec& lambda, const PolyN& f);
// sum of e^{2 pi i <r,x>}; r indexed by the flattened sequence
CycNumber sum_weight_twisted(const System& s, const IntVec& lambda, const RatVec& r);
// sum of e^{<y,x>}
std::complex<double> sum_weight_exp(const System& s, const IntVec& lambda, const std::vector<std::complex<double>>& y);

// Coefficient of e^{<lambda,z>} in the expansion of F in powers of u_k e^{<beta_k,z>}.
CycNumber coeff_expansion(const MeroFunction& f, const IntVec& lambda);

struct Unbounded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonSpanning : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {v in R^r : <u_k,v> + h_k >= 0}
struct InequalityPolytope {
  size_t r = 0;
  std::vector<IntVec> normals;
  IntVec offsets;

  bool contains(const IntVec& v) const;
};

struct Embedding {
  System system;
  IntVec a;
  std::vector<IntVec> normals;  // possibly augmented by standard basis rows
  IntVec offsets;
  std::vector<size_t> flat_to_normal;  // flattened index -> normal index

  // l_k = <u_k,v> + h_k, listed in flattened order
  IntVec section(const IntVec& v) const;
};

Embedding embed_polytope(const InequalityPolytope& p);

// Whether Pi(a) + Pi(b) = Pi(a+b).
bool minkowski_sum_law_check(const System& s, const IntVec& a, const IntVec& b);

}  // namespace vpart
