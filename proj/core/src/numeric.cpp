#include "vpart/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace vpart {

Rat make_rat(long long num, long long den) {
  Rat r(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  Rat r;
  try {
    if (slash == std::string::npos) {
      r = Rat(Int(s));
    } else {
      Int n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d == 0) throw std::invalid_argument("zero denominator in " + s);
      r = Rat(n, d);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + s);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

Int lcm_den(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& r) { return r - Rat(floor_rat(r)); }

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(static_cast<long>(a[i])) * b[i];
  return s;
}

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(const IntVec& v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return v;
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec canonical_normal(const RatVec& v) {
  Int l = lcm_den(v);
  std::vector<Int> z(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat t = v[i] * l;
    z[i] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  IntVec r(v.size(), 0);
  if (g == 0) return r;
  int sign = 0;
  for (auto& x : z) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (size_t i = 0; i < z.size(); ++i) r[i] = to_ll(Int(z[i] / g)) * sign;
  return r;
}

Rat binomial(const Rat& x, unsigned k) {
  Rat r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (x - i);
  for (unsigned i = 2; i <= k; ++i) r /= i;
  return r;
}

}  // namespace vpart
