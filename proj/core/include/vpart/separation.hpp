#pragma once

#include <optional>
#include <stdexcept>

#include "vpart/mero.hpp"

namespace vpart {

struct DegenerateRelation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EssentialityViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// t per numerator term with mu + xi = sum_k t_k beta_k and 0 <= t <= 1
// (0 < t < 1 when interior).
std::optional<std::vector<RatVec>> box_certificate(const MeroFunction& f, const RatVec& mu, bool interior = false);
bool box_membership(const MeroFunction& f, const RatVec& mu, bool interior = false);

// Splits a single-term F = c e^xi / prod (1 - u_i e^{alpha_i}) into r terms
// F_i with mu in Box(F_i). t is a certificate for mu (computed if absent);
// factors are taken in increasing t, ties by index.
std::vector<MeroFunction> crucial_split(const MeroFunction& f, const RatVec& mu,
                                        std::optional<RatVec> t = std::nullopt);

// Identities that rewrite one factor without changing the function.
// 1/(1-u e^b) = -u^{-1} e^{-b} / (1 - u^{-1} e^{-b})
MeroFunction flip_factor(const MeroFunction& f, size_t k);
// 1/(1-u e^b) = sum_{j<s} u^j e^{jb} / (1 - u^s e^{sb})
MeroFunction scale_factor(const MeroFunction& f, size_t k, unsigned s);
// 1 - u e^{s b} = prod_j (1 - w_j e^b) over the s-th roots w_j of u; s must divide beta
MeroFunction root_split_factor(const MeroFunction& f, size_t k, unsigned s);

// c e^{<xi,z>} / prod_i (1 - u_i e^{<alpha_i,z>})^{h_i} with independent alpha_i
struct SimpleTerm {
  CycNumber coeff;
  IntVec xi;
  std::vector<IntVec> alpha;
  RatVec r;  // u_i = e^{2 pi i r_i}
  std::vector<unsigned> h;

  MeroFunction as_function(size_t n) const;
};

struct AdmissibleDecomposition {
  std::vector<SimpleTerm> terms;
  RatVec mu_used;
  bool perturbed = false;
};

// F = sum of terms with independent denominators and mu in the interior of
// every term's Box. When the given mu fails that check, a nearby point of
// the interior of Box(F) is used instead and reported.
AdmissibleDecomposition admissible_decompose(const MeroFunction& f, const RatVec& mu);

}  // namespace vpart
