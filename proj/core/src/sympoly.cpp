#include "vpart/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace vpart {

SymPoly::SymPoly(long c) : SymPoly(CycNumber(c)) {}
SymPoly::SymPoly(const Rat& c) : SymPoly(CycNumber(c)) {}
SymPoly::SymPoly(const CycNumber& c) {
  if (!c.is_zero()) t_.emplace(Exponent{}, c);
}

SymPoly::SymPoly(size_t nvars, std::map<Exponent, CycNumber> terms) : n_(nvars) {
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw std::invalid_argument("SymPoly: exponent length mismatch");
    if (!c.is_zero()) t_.emplace(e, std::move(c));
  }
}

SymPoly SymPoly::var(size_t i, size_t nvars) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return SymPoly(nvars, {{e, CycNumber(1)}});
}

void SymPoly::adapt(size_t n) {
  if (n_ == n) return;
  if (n_ != 0) throw std::invalid_argument("SymPoly: arity mismatch");
  std::map<Exponent, CycNumber> t;
  for (auto& [e, c] : t_) t.emplace(Exponent(n, 0), c);
  t_ = std::move(t);
  n_ = n;
}

int SymPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

SymPoly SymPoly::homogeneous(int d) const {
  SymPoly r;
  r.n_ = n_;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.t_.emplace(e, c);
  }
  return r;
}

CycNumber SymPoly::coeff(const Exponent& e) const {
  Exponent k = e;
  if (n_ == 0) {
    for (int x : e)
      if (x != 0) return CycNumber(0);
    k.clear();
  }
  auto it = t_.find(k);
  return it == t_.end() ? CycNumber(0) : it->second;
}

CycNumber SymPoly::eval(const RatVec& x) const {
  if (n_ != 0 && x.size() != n_) throw std::invalid_argument("SymPoly::eval: point has wrong length");
  CycNumber s(0);
  for (const auto& [e, c] : t_) {
    Rat m = 1;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    s += c * CycNumber(m);
  }
  return s;
}

CycNumber SymPoly::eval(const IntVec& x) const { return eval(to_rat(x)); }

SymPoly SymPoly::shift(const IntVec& xi) const {
  if (n_ == 0) return *this;
  SymPoly r;
  r.n_ = n_;
  std::vector<SymPoly> lin(n_);
  for (size_t i = 0; i < n_; ++i) lin[i] = var(i, n_) - SymPoly(static_cast<long>(xi[i]));
  for (const auto& [e, c] : t_) {
    SymPoly m(c);
    m.adapt(n_);
    for (size_t i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= lin[i];
    r += m;
  }
  return r;
}

std::vector<CycNumber> SymPoly::along_ray(const IntVec& lambda0) const {
  std::vector<CycNumber> out(std::max(total_degree(), 0) + 1, CycNumber(0));
  for (const auto& [e, c] : t_) {
    Rat m = 1;
    int deg = 0;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) {
        m *= static_cast<long>(lambda0[i]);
        ++deg;
      }
    out[deg] += c * CycNumber(m);
  }
  return out;
}

SymPoly SymPoly::conj() const {
  SymPoly r;
  r.n_ = n_;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c.conj());
  return r;
}

unsigned SymPoly::order() const {
  unsigned m = 1;
  for (const auto& [e, c] : t_) m = std::lcm(m, c.order());
  return m;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_) {
    if (n_ == 0)
      adapt(o.n_);
    else {
      SymPoly b = o;
      b.adapt(n_);
      return *this += b;
    }
  }
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) { return *this += -o; }

SymPoly& SymPoly::operator*=(const CycNumber& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, x] : t_) x *= c;
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
  size_t n = std::max(n_, o.n_);
  SymPoly a = *this, b = o;
  a.adapt(n);
  b.adapt(n);
  SymPoly r;
  r.n_ = n;
  for (const auto& [e1, c1] : a.t_)
    for (const auto& [e2, c2] : b.t_) {
      Exponent e(n);
      for (size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      CycNumber p = c1 * c2;
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        if (!p.is_zero()) r.t_.emplace(std::move(e), std::move(p));
      } else {
        it->second += p;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return *this = std::move(r);
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  if (a.n_ == b.n_) return a.t_ == b.t_;
  SymPoly x = a, y = b;
  size_t n = std::max(a.n_, b.n_);
  x.adapt(n);
  y.adapt(n);
  return x.t_ == y.t_;
}

std::string SymPoly::str(const std::string& prefix) const {
  if (t_.empty()) return "0";
  std::string s;
  // highest total degree first, then by exponent descending
  std::vector<std::pair<Exponent, CycNumber>> items(t_.begin(), t_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : items) {
    std::string mon;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += prefix + std::to_string(i + 1);
      if (e[i] > 1) mon += "^" + std::to_string(e[i]);
    }
    std::string term;
    bool negative = false;
    if (c.is_rational()) {
      Rat v = c.rational();
      negative = v < 0;
      if (negative) v = -v;
      if (mon.empty())
        term = v.get_str();
      else if (v == 1)
        term = mon;
      else
        term = v.get_str() + "*" + mon;
    } else {
      term = mon.empty() ? c.str() : c.str() + "*" + mon;
    }
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += (negative ? "-" : "+") + term;
  }
  return s;
}

SymPoly parse_sympoly(const std::string& src, size_t nvars, const std::string& prefix) {
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  SymPoly out;
  out += SymPoly(nvars, {});
  size_t i = 0;
  auto fail = [&](const std::string& why) { throw std::invalid_argument("polynomial parse error: " + why + " in '" + src + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    Rat coeff = sign;
    Exponent e(nvars, 0);
    bool any = false;
    for (;;) {
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        coeff *= parse_rat(s.substr(i, j - i));
        i = j;
      } else if (s.compare(i, prefix.size(), prefix) == 0) {
        i += prefix.size();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("missing variable index");
        size_t idx = std::stoul(s.substr(i, j - i));
        if (idx < 1 || idx > nvars) fail("variable index out of range");
        i = j;
        int pw = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) fail("missing exponent");
          pw = std::stoi(s.substr(i, j - i));
          i = j;
        }
        e[idx - 1] += pw;
      } else {
        fail("unexpected character");
      }
      any = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out += SymPoly(nvars, {{e, CycNumber(coeff)}});
  }
  return out;
}

}  // namespace vpart
