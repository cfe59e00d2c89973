#pragma once

#include <map>
#include <string>

#include "vpart/cyclotomic.hpp"

namespace vpart {

using Exponent = std::vector<int>;

// Polynomial in lambda_1..lambda_n with coefficients in Q(zeta_M).
// A polynomial with nvars() == 0 is a constant that adapts to any arity.
class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(long c);         // NOLINT
  SymPoly(const Rat& c);   // NOLINT
  SymPoly(const CycNumber& c);  // NOLINT
  SymPoly(size_t nvars, std::map<Exponent, CycNumber> terms);

  static SymPoly var(size_t i, size_t nvars);

  size_t nvars() const { return n_; }
  const std::map<Exponent, CycNumber>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;  // -1 for zero
  SymPoly homogeneous(int d) const;
  CycNumber coeff(const Exponent& e) const;

  CycNumber eval(const IntVec& x) const;
  CycNumber eval(const RatVec& x) const;
  // lambda -> lambda - xi
  SymPoly shift(const IntVec& xi) const;
  // coefficients in k of p(k * lambda0)
  std::vector<CycNumber> along_ray(const IntVec& lambda0) const;
  SymPoly conj() const;
  unsigned order() const;  // lcm of coefficient orders

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  SymPoly& operator*=(const CycNumber& c);
  SymPoly operator-() const;
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
  friend SymPoly operator*(SymPoly a, const CycNumber& c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b);
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  // e.g. "1/2*a1^2*a2-a2+1", variables named prefix1..prefixn
  std::string str(const std::string& prefix = "a") const;

 private:
  void adapt(size_t n);
  size_t n_ = 0;
  std::map<Exponent, CycNumber> t_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

// Parses the output of SymPoly::str for rational coefficients, e.g.
// "1/2*a1^2-3*a2+1". Throws std::invalid_argument on malformed input.
SymPoly parse_sympoly(const std::string& s, size_t nvars, const std::string& prefix = "a");

}  // namespace vpart
