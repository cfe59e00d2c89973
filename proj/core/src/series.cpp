#include "vpart/series.hpp"

namespace vpart {

std::vector<Rat> todd_coefficients(int D) {
  // (1 - e^{-t})/t = sum_k (-1)^k t^k / (k+1)!
  TruncSeries<Rat> s(1, D);
  Rat fact = 1;
  for (int k = 0; k <= D; ++k) {
    fact *= (k + 1);
    s.set({k}, Rat(k % 2 ? -1 : 1) / fact);
  }
  auto inv = s.inverse();
  std::vector<Rat> out(D + 1);
  for (int k = 0; k <= D; ++k) out[k] = inv.coeff({k});
  return out;
}

TruncSeries<CycNumber> expand_factor(const IntVec& beta, const CycNumber& zeta, unsigned h, int D) {
  std::vector<CycNumber> uni(D + 1);
  if (zeta.is_one()) {
    auto t = todd_coefficients(D);
    for (int k = 0; k <= D; ++k) uni[k] = CycNumber(t[k]);
  } else {
    // 1 - zeta e^{-t}
    TruncSeries<CycNumber> s(1, D);
    Rat fact = 1;
    for (int k = 0; k <= D; ++k) {
      if (k) fact *= k;
      CycNumber c = -zeta * CycNumber(Rat(k % 2 ? -1 : 1) / fact);
      if (k == 0) c += CycNumber(1);
      s.set({k}, c);
    }
    auto inv = s.inverse();
    for (int k = 0; k <= D; ++k) uni[k] = inv.coeff({k});
  }
  TruncSeries<CycNumber> u(1, D);
  for (int k = 0; k <= D; ++k) u.set({k}, uni[k]);
  u = u.pow(h);
  std::vector<CycNumber> a(D + 1);
  for (int k = 0; k <= D; ++k) a[k] = u.coeff({k});
  return compose_linear(a, beta, D);
}

TruncSeries<SymPoly> exp_symbolic(size_t n, int D) {
  // product over i of sum_k lambda_i^k z_i^k / k!
  TruncSeries<SymPoly> out = TruncSeries<SymPoly>::one(n, D);
  for (size_t i = 0; i < n; ++i) {
    TruncSeries<SymPoly> f(n, D);
    SymPoly p(1);
    p = p * SymPoly(n, {{Exponent(n, 0), CycNumber(1)}});
    Rat fact = 1;
    for (int k = 0; k <= D; ++k) {
      if (k) {
        fact *= k;
        p *= SymPoly::var(i, n);
      }
      Exponent e(n, 0);
      e[i] = k;
      f.set(e, p * CycNumber(1 / fact));
    }
    out = out * f;
  }
  return out;
}

}  // namespace vpart
