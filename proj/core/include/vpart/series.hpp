#pragma once

#include <map>
#include <stdexcept>

#include "vpart/cyclotomic.hpp"
#include "vpart/sympoly.hpp"

namespace vpart {

inline Rat ring_inverse(const Rat& r) {
  if (r == 0) throw std::domain_error("series inverse: constant term is not a unit");
  return 1 / r;
}
inline CycNumber ring_inverse(const CycNumber& c) {
  if (c.is_zero()) throw std::domain_error("series inverse: constant term is not a unit");
  return c.inv();
}
inline SymPoly ring_inverse(const SymPoly& p) {
  if (p.total_degree() != 0) throw std::domain_error("series inverse: constant term is not a unit");
  return SymPoly(p.terms().begin()->second.inv());
}

// Multivariate power series in z_1..z_n truncated above total degree D.
template <class C>
class TruncSeries {
 public:
  using Terms = std::map<Exponent, C>;

  TruncSeries(size_t nvars, int degree) : n_(nvars), d_(degree) {
    if (degree < 0) throw std::invalid_argument("TruncSeries: negative degree bound");
  }

  static TruncSeries constant(size_t nvars, int degree, const C& c) {
    TruncSeries s(nvars, degree);
    s.set(Exponent(nvars, 0), c);
    return s;
  }
  static TruncSeries one(size_t nvars, int degree) { return constant(nvars, degree, C(Rat(1))); }

  size_t nvars() const { return n_; }
  int degree_bound() const { return d_; }
  const Terms& terms() const { return t_; }

  C coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? C(Rat(0)) : it->second;
  }

  void set(const Exponent& e, const C& c) {
    if (e.size() != n_) throw std::invalid_argument("TruncSeries: exponent length mismatch");
    if (degree(e) > d_) return;
    if (is_zero(c))
      t_.erase(e);
    else
      t_[e] = c;
  }

  void add_to(const Exponent& e, const C& c) {
    if (degree(e) > d_ || is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_to(e, c);
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_to(e, C(Rat(0)) - c);
    return *this;
  }

  TruncSeries& operator*=(const C& k) {
    if (is_zero(k)) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= k;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.n_, a.d_);
    for (const auto& [e1, c1] : a.t_) {
      const int d1 = degree(e1);
      for (const auto& [e2, c2] : b.t_) {
        if (d1 + degree(e2) > a.d_) continue;
        Exponent e(a.n_);
        for (size_t i = 0; i < a.n_; ++i) e[i] = e1[i] + e2[i];
        r.add_to(e, c1 * c2);
      }
    }
    return r;
  }

  TruncSeries pow(unsigned h) const {
    TruncSeries r = one(n_, d_);
    for (unsigned i = 0; i < h; ++i) r = r * *this;
    return r;
  }

  // Multiplicative inverse modulo degree D+1.
  TruncSeries inverse() const {
    const C c0 = coeff(Exponent(n_, 0));
    const C inv0 = ring_inverse(c0);
    // a = c0 (1 + x), 1/a = inv0 * sum (-x)^k
    TruncSeries x = *this;
    x.set(Exponent(n_, 0), C(Rat(0)));
    x *= inv0;
    TruncSeries acc = one(n_, d_), term = one(n_, d_);
    for (int k = 1; k <= d_; ++k) {
      term = term * x;
      term *= C(Rat(-1));
      acc += term;
    }
    acc *= inv0;
    return acc;
  }

  // Degree-d slice as a map of monomials.
  Terms homogeneous_part(int d) const {
    if (d < 0 || d > d_) throw std::out_of_range("homogeneous_part: degree out of range");
    Terms r;
    for (const auto& [e, c] : t_)
      if (degree(e) == d) r.emplace(e, c);
    return r;
  }

  // Only the degree-d slice of a*b.
  static Terms product_slice(const TruncSeries& a, const TruncSeries& b, int d) {
    Terms r;
    for (const auto& [e1, c1] : a.t_) {
      const int d1 = degree(e1);
      if (d1 > d) continue;
      for (const auto& [e2, c2] : b.t_) {
        if (d1 + degree(e2) != d) continue;
        Exponent e(a.n_);
        for (size_t i = 0; i < a.n_; ++i) e[i] = e1[i] + e2[i];
        C p = c1 * c2;
        auto it = r.find(e);
        if (it == r.end()) {
          if (!is_zero(p)) r.emplace(std::move(e), std::move(p));
        } else {
          it->second += p;
          if (is_zero(it->second)) r.erase(it);
        }
      }
    }
    return r;
  }

  static int degree(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

 private:
  void check(const TruncSeries& o) const {
    if (o.n_ != n_ || o.d_ != d_) throw std::invalid_argument("TruncSeries: incompatible operands");
  }
  size_t n_;
  int d_;
  Terms t_;
};

// Univariate coefficients of t / (1 - e^{-t}) up to t^D.
std::vector<Rat> todd_coefficients(int D);

// Substitutes t = <beta, z> into the univariate series sum a_k t^k.
template <class C>
TruncSeries<C> compose_linear(const std::vector<C>& a, const IntVec& beta, int D) {
  const size_t n = beta.size();
  TruncSeries<C> lin(n, D);
  for (size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    lin.set(e, C(Rat(static_cast<long>(beta[i]))));
  }
  TruncSeries<C> out(n, D), p = TruncSeries<C>::one(n, D);
  for (int k = 0; k <= D && k < static_cast<int>(a.size()); ++k) {
    if (k > 0) p = p * lin;
    TruncSeries<C> term = p;
    term *= a[k];
    out += term;
  }
  return out;
}

// For zeta == 1: [<beta,z>/(1-e^{-<beta,z>})]^h. Otherwise (1 - zeta e^{-<beta,z>})^{-h}.
TruncSeries<CycNumber> expand_factor(const IntVec& beta, const CycNumber& zeta, unsigned h, int D);

// Truncated exp(sum lambda_i z_i) with symbolic lambda.
TruncSeries<SymPoly> exp_symbolic(size_t n, int D);

}  // namespace vpart
