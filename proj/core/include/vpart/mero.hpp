#pragma once

#include <complex>

#include "vpart/cyclotomic.hpp"

namespace vpart {

// Denominator factor 1 - u e^{<beta,z>} with u = e^{2 pi i r}.
struct MeroFactor {
  Rat r;
  IntVec beta;

  CycNumber u() const { return exp_2pi_i(r); }
};

struct MeroTerm {
  CycNumber coeff;
  IntVec xi;
};

// sum_xi c_xi e^{<xi,z>} / prod_k (1 - u_k e^{<beta_k,z>})
struct MeroFunction {
  size_t n = 0;
  std::vector<MeroTerm> terms;
  std::vector<MeroFactor> factors;

  std::complex<double> eval(const std::vector<std::complex<double>>& z) const;
};

}  // namespace vpart
