#pragma once

#include <complex>
#include <stdexcept>

#include "vpart/arrangement.hpp"
#include "vpart/mero.hpp"
#include "vpart/residue.hpp"

namespace vpart {

struct NonRealValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenericityViolated : std::runtime_error {
  std::vector<size_t> basis;  // flattened indices
  RatVec pole;                // q, or empty in floating-point mode
  size_t k = 0;               // offending factor (flattened index)
  GenericityViolated(std::vector<size_t> b, RatVec q, size_t kk, const std::string& what)
      : std::runtime_error(what), basis(std::move(b)), pole(std::move(q)), k(kk) {}
};

struct ExteriorPoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct QPTerm {
  RatVec q;
  SymPoly poly;
};

// lambda -> sum_q e^{-2 pi i <lambda,q>} poly_q(lambda)
struct QuasiPolynomial {
  size_t n = 0;
  unsigned M = 1;
  std::vector<QPTerm> terms;
  std::string chamber;
  // Validity region: intersection over entries s of c - Box(Phi, s), where s
  // scales each direction.
  std::vector<std::vector<int>> validity;

  CycNumber value(const IntVec& lambda) const;
  // Exact value; throws NonRealValue if it is not rational.
  Rat evaluate(const IntVec& lambda) const;
  int degree() const;
  const SymPoly* term_at(const RatVec& q) const;

  QuasiPolynomial& add(const QuasiPolynomial& o, const Rat& scale = 1);
};

inline Rat evaluate(const QuasiPolynomial& qp, const IntVec& lambda) { return qp.evaluate(lambda); }

bool in_validity_region(const Arrangement& arr, const QuasiPolynomial& qp, const IntVec& lambda);

// (1 - e^{2 pi i r} e^{-<beta_direction, z>})^{-h}
struct WeightedFactor {
  size_t direction = 0;
  Rat r;
  unsigned h = 1;
};

QuasiPolynomial residue_quasipoly(const Arrangement& arr, const Chamber& c, const std::vector<WeightedFactor>& factors);

QuasiPolynomial partition_quasipoly(const Arrangement& arr, const Chamber& c);
// The region outside C(Phi) has no lattice points of Pi(lambda): the zero formula.
inline constexpr const char* kNullChamber = "null";
QuasiPolynomial null_quasipoly(size_t n);

// h and r are indexed by the flattened sequence of the system.
QuasiPolynomial euler_maclaurin_quasipoly(const Arrangement& arr, const Chamber& c, const std::vector<int>& h,
                                          const RatVec& r);

// Polynomial in x_1..x_N (flattened indices) with rational coefficients.
using PolyN = std::map<Exponent, Rat>;

// a with x^d = sum_{h=1}^{d+1} a[h-1] c(x,h), c(x,h) = binom(x+h-1, h-1)
std::vector<Rat> c_basis_coefficients(int d);
Rat c_poly(const Rat& x, int h);

QuasiPolynomial weighted_sum_quasipoly(const Arrangement& arr, const Chamber& c, const PolyN& f);

SymPoly volume_polynomial(const Arrangement& arr, const Chamber& c);

// Exact twist mode: y = 2 pi i r, r indexed by the flattened sequence.
QuasiPolynomial exponential_sum_closed_form(const Arrangement& arr, const Chamber& c, const RatVec& r);
// Floating-point mode for arbitrary complex y.
std::complex<double> exponential_sum_closed_form(const Arrangement& arr, const Chamber& c,
                                                 const std::vector<std::complex<double>>& y, const IntVec& lambda,
                                                 double tol = 1e-9);

struct EhrhartQP {
  unsigned period = 1;
  std::vector<std::vector<Rat>> polys;  // polys[j][i] = coefficient of k^i for k = j mod period
  std::string chamber;

  Rat evaluate(long long k) const;
};

EhrhartQP ehrhart(const Arrangement& arr, const IntVec& lambda0);

// Coefficient formula for a function with numerator terms and cyclotomic u.
class MeroCoefficientFormula {
 public:
  MeroCoefficientFormula(const MeroFunction& f, const std::string& chamber_id);

  const Arrangement& arrangement() const { return arr_; }
  const Chamber& chamber() const { return arr_.chamber(chamber_); }
  const QuasiPolynomial& base() const { return base_; }
  // (lambda + Box(F)^0) meets the chamber
  bool valid_at(const IntVec& lambda) const;
  CycNumber coefficient(const IntVec& lambda) const;

  static System directions_of(const MeroFunction& f, std::vector<size_t>* factor_direction = nullptr);

 private:
  MeroFunction f_;
  Arrangement arr_;
  std::string chamber_;
  QuasiPolynomial base_;
};

}  // namespace vpart
