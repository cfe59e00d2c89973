#include "vpart/cyclotomic.hpp"

#include "vpart/linalg.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <numbers>

namespace vpart {

namespace {

std::mutex table_mutex;
std::map<unsigned, std::unique_ptr<const std::vector<long long>>> table;

// exact division of integer polynomials, b monic
std::vector<long long> divide_monic(std::vector<long long> a, const std::vector<long long>& b) {
  const size_t db = b.size() - 1;
  std::vector<long long> q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    long long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

const std::vector<long long>& compute_locked(unsigned m) {
  auto it = table.find(m);
  if (it != table.end()) return *it->second;
  std::vector<long long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, compute_locked(d));
  auto& slot = table[m];
  slot = std::make_unique<const std::vector<long long>>(std::move(p));
  return *slot;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  thread_local std::map<unsigned, const std::vector<long long>*> local;
  auto it = local.find(m);
  if (it != local.end()) return *it->second;
  std::lock_guard<std::mutex> lock(table_mutex);
  const auto& p = compute_locked(m);
  local.emplace(m, &p);
  return p;
}

unsigned euler_phi(unsigned m) { return static_cast<unsigned>(cyclotomic_polynomial(m).size() - 1); }

CycNumber::CycNumber() : order_(1), c_{Rat(0)} {}
CycNumber::CycNumber(long v) : order_(1), c_{Rat(v)} {}
CycNumber::CycNumber(const Rat& v) : order_(1), c_{v} {}

CycNumber::CycNumber(unsigned order, const std::vector<Rat>& coeffs) : order_(order) {
  if (order == 0) throw std::invalid_argument("CycNumber: order must be positive");
  c_.assign(order, Rat(0));
  for (size_t k = 0; k < coeffs.size(); ++k) c_[k % order] += coeffs[k];
  reduce();
}

void CycNumber::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const size_t d = phi.size() - 1;
  for (size_t i = c_.size(); i-- > d;) {
    if (c_[i] == 0) continue;
    Rat c = c_[i];
    for (size_t j = 0; j <= d; ++j)
      if (phi[j] != 0) c_[i - d + j] -= c * Rat(static_cast<long>(phi[j]));
  }
  c_.resize(d, Rat(0));
}

bool CycNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNumber::rational() const {
  if (!is_rational()) throw std::domain_error("CycNumber: value is not rational: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

bool CycNumber::is_one() const { return is_rational() && rational() == 1; }

CycNumber CycNumber::promote(unsigned new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("CycNumber::promote: order must divide target");
  if (new_order == order_) return *this;
  const unsigned f = new_order / order_;
  std::vector<Rat> c(new_order, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) c[k * f] = c_[k];
  return CycNumber(new_order, c);
}

CycNumber CycNumber::conj() const {
  std::vector<Rat> c(order_, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) c[(order_ - k) % order_] += c_[k];
  return CycNumber(order_, c);
}

CycNumber CycNumber::simplified() const {
  if (is_rational()) return CycNumber(rational());
  for (unsigned d = 2; d < order_; ++d) {
    if (order_ % d != 0) continue;
    // columns: images of zeta_d^j in Q(zeta_M)
    const unsigned ed = euler_phi(d);
    RatMat m(c_.size(), RatVec(ed, Rat(0)));
    for (unsigned j = 0; j < ed; ++j) {
      std::vector<Rat> e(order_, Rat(0));
      e[j * (order_ / d)] = 1;
      CycNumber img(order_, e);
      for (size_t i = 0; i < c_.size(); ++i) m[i][j] = img.c_[i];
    }
    RatMat a = m;
    std::vector<Rat> sol;
    {
      // consistent iff the value lies in the subfield
      for (size_t i = 0; i < a.size(); ++i) a[i].push_back(c_[i]);
      size_t r = 0;
      std::vector<size_t> piv;
      for (size_t col = 0; col < ed && r < a.size(); ++col) {
        size_t p = r;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rat iv = 1 / a[r][col];
        for (auto& x : a[r]) x *= iv;
        for (size_t i = 0; i < a.size(); ++i) {
          if (i == r || a[i][col] == 0) continue;
          Rat f = a[i][col];
          for (size_t k = 0; k <= ed; ++k) a[i][k] -= f * a[r][k];
        }
        piv.push_back(col);
        ++r;
      }
      bool ok = true;
      for (size_t i = r; i < a.size(); ++i)
        if (a[i][ed] != 0) ok = false;
      if (!ok) continue;
      sol.assign(ed, Rat(0));
      for (size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = a[i][ed];
    }
    return CycNumber(d, sol);
  }
  return *this;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.order_ == order_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  unsigned m = std::lcm(order_, o.order_);
  CycNumber a = promote(m), b = o.promote(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (o.order_ == 1 && order_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rat s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  unsigned m = std::lcm(order_, o.order_);
  CycNumber a = promote(m), b = o.promote(m);
  std::vector<Rat> p(a.c_.size() + b.c_.size(), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) p[i + j] += a.c_[i] * b.c_[j];
  }
  return *this = CycNumber(m, p);
}

CycNumber CycNumber::inv() const {
  if (is_zero()) throw std::domain_error("CycNumber::inv: division by zero");
  if (is_rational()) return CycNumber(Rat(1) / c_[0]);
  // extended Euclid in Q[x]: s*a + t*phi = 1
  using Poly = std::vector<Rat>;
  auto trim = [](Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  const auto& ph = cyclotomic_polynomial(order_);
  Poly r0, r1 = c_, s0, s1{Rat(1)};
  for (auto x : ph) r0.emplace_back(static_cast<long>(x));
  trim(r1);
  while (!r1.empty()) {
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    Poly r = r0;
    while (r.size() >= r1.size() && !r.empty()) {
      Rat f = r.back() / r1.back();
      size_t sh = r.size() - r1.size();
      q[sh] = f;
      for (size_t i = 0; i < r1.size(); ++i) r[sh + i] -= f * r1[i];
      trim(r);
    }
    Poly s(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since phi is irreducible
  Rat g = r0[0];
  for (auto& x : s0) x /= g;
  return CycNumber(order_, s0);
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNumber r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::complex<double> CycNumber::to_complex() const {
  std::complex<double> s = 0;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double ang = 2 * std::numbers::pi * static_cast<double>(k) / order_;
    s += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  unsigned m = std::lcm(a.order_, b.order_);
  return a.promote(m).c_ == b.promote(m).c_;
}

std::string CycNumber::str() const {
  if (is_rational()) return rational().get_str();
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string term;
    Rat c = c_[k];
    bool negative = c < 0;
    if (negative) c = -c;
    std::string mon = k == 0 ? "" : (k == 1 ? "w" + std::to_string(order_) : "w" + std::to_string(order_) + "^" + std::to_string(k));
    if (k == 0)
      term = c.get_str();
    else if (c == 1)
      term = mon;
    else
      term = c.get_str() + "*" + mon;
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += (negative ? "-" : "+") + term;
  }
  return "(" + s + ")";
}

CycNumber root_of_unity(long num, long den) {
  if (den < 1) throw std::invalid_argument("root_of_unity: denominator must be positive");
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  long n = num / g, d = den / g;
  n %= d;
  if (n < 0) n += d;
  std::vector<Rat> c(static_cast<size_t>(d), Rat(0));
  c[static_cast<size_t>(n)] = 1;
  return CycNumber(static_cast<unsigned>(d), c);
}

CycNumber exp_2pi_i(const Rat& r) {
  Rat f = frac(r);
  return root_of_unity(to_ll(f.get_num()), to_ll(f.get_den()));
}

}  // namespace vpart
