#pragma once

#include <complex>
#include <stdexcept>

#include "vpart/numeric.hpp"

namespace vpart {

// Coefficients of the M-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);
unsigned euler_phi(unsigned m);

// An element of Q(zeta_M), stored as a polynomial in zeta_M of degree
// below phi(M), reduced modulo the M-th cyclotomic polynomial.
class CycNumber {
 public:
  CycNumber();
  CycNumber(long v);  // NOLINT: implicit from integers is convenient
  CycNumber(const Rat& v);  // NOLINT
  // Builds sum c_k zeta_M^k for arbitrary exponents and reduces.
  CycNumber(unsigned order, const std::vector<Rat>& coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational() const;  // throws unless is_rational()

  CycNumber promote(unsigned new_order) const;
  CycNumber conj() const;  // zeta -> zeta^{-1}
  CycNumber inv() const;
  CycNumber pow(long e) const;
  std::complex<double> to_complex() const;
  // Smallest order at which the value is representable.
  CycNumber simplified() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inv(); }
  CycNumber operator-() const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  std::string str() const;

 private:
  void reduce();
  unsigned order_ = 1;
  std::vector<Rat> c_;
};

// zeta_den^num
CycNumber root_of_unity(long num, long den);
// e^{2 pi i r}
CycNumber exp_2pi_i(const Rat& r);

inline bool is_zero(const CycNumber& c) { return c.is_zero(); }
inline bool is_zero(const Rat& r) { return r == 0; }

}  // namespace vpart
