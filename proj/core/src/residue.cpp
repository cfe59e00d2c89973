#include "vpart/residue.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vpart/linalg.hpp"

namespace vpart {

std::vector<Pole> poles_of_basis(const Basis& sigma, const RatVec& r) {
  const size_t n = sigma.rows.size();
  if (r.size() != n) throw DimensionError("poles_of_basis: twist must be indexed by the basis");
  auto s = smith_normal_form(to_int_mat(sigma.rows));
  // B q = -r + k  <=>  D w = U(-r + k), q = V w
  RatVec ur(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ur[i] -= Rat(s.U[i][j]) * r[j];
  std::vector<long long> d(n);
  for (size_t i = 0; i < n; ++i) d[i] = to_ll(s.D[i][i]);
  std::set<Pole> out;
  std::vector<long long> k(n, 0);
  for (;;) {
    RatVec w(n);
    for (size_t i = 0; i < n; ++i) w[i] = (ur[i] + static_cast<long>(k[i])) / static_cast<long>(d[i]);
    Pole p;
    p.q.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) p.q[i] += Rat(s.V[i][j]) * w[j];
      p.q[i] = frac(p.q[i]);
    }
    out.insert(std::move(p));
    size_t i = 0;
    while (i < n && ++k[i] == d[i]) k[i++] = 0;
    if (i == n) break;
  }
  return {out.begin(), out.end()};
}

PoleSet reduced_pole_set(const Arrangement& arr, const Chamber& c, const RatVec& r) {
  if (r.size() != arr.system().size()) throw DimensionError("reduced_pole_set: twist must be indexed by direction");
  std::set<Pole> all;
  for (const auto& b : c.bases) {
    RatVec rb;
    for (auto i : b.indices) rb.push_back(r[i]);
    for (auto& p : poles_of_basis(b, rb)) all.insert(p);
  }
  PoleSet ps;
  ps.poles.assign(all.begin(), all.end());
  for (const auto& p : ps.poles) ps.M = std::lcm(ps.M, static_cast<unsigned>(to_ll(p.order_hint())));
  return ps;
}

namespace {

using DenomKey = std::vector<std::pair<IntVec, int>>;  // distinct forms in first-appearance order, with multiplicities

struct RatResult {
  std::map<FormSet, Rat> simple;
  std::vector<DroppedFraction<Rat>> dropped;
};

class Peeler {
 public:
  Peeler(size_t n, bool keep) : n_(n), keep_(keep) {}

  const RatResult& run(const DenomKey& D, const Exponent& m) {
    auto key = std::make_pair(D, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RatResult res = compute(D, m);
    return memo_.emplace(std::move(key), std::move(res)).first->second;
  }

 private:
  RatResult compute(const DenomKey& D, const Exponent& m) {
    RatResult res;
    RatMat forms;
    size_t total = 0;
    for (const auto& [f, k] : D) {
      forms.push_back(to_rat(f));
      total += static_cast<size_t>(k);
    }
    auto idx = independent_rows(forms);
    if (idx.size() < n_) {
      if (keep_) {
        std::vector<IntVec> dens;
        for (const auto& [f, k] : D)
          for (int j = 0; j < k; ++j) dens.push_back(f);
        res.dropped.push_back({Rat(1), m, dens});
      }
      return res;
    }
    if (total == n_) {
      FormSet key;
      for (const auto& [f, k] : D) key.push_back(f);
      std::sort(key.begin(), key.end());
      res.simple.emplace(std::move(key), Rat(1));
      return res;
    }
    size_t k = 0;
    while (k < m.size() && m[k] == 0) ++k;
    if (k == m.size()) throw std::logic_error("simple_fraction_decompose: degree mismatch during peeling");
    // z_k = sum_j c_j tau_j(z)
    RatMat tau;
    for (auto i : idx) tau.push_back(forms[i]);
    RatVec e(n_, 0);
    e[k] = 1;
    auto sol = solve(transpose(tau), e);
    const RatVec& c = std::get<Solution>(sol).x;
    Exponent m2 = m;
    --m2[k];
    for (size_t j = 0; j < idx.size(); ++j) {
      if (c[j] == 0) continue;
      DenomKey D2 = D;
      auto& slot = D2[idx[j]];
      if (--slot.second == 0) D2.erase(D2.begin() + static_cast<long>(idx[j]));
      const RatResult& sub = run(D2, m2);
      for (const auto& [s, v] : sub.simple) {
        auto& acc = res.simple[s];
        acc += c[j] * v;
      }
      for (const auto& d : sub.dropped) res.dropped.push_back({c[j] * d.coeff, d.numerator, d.denominators});
    }
    for (auto it = res.simple.begin(); it != res.simple.end();)
      it = it->second == 0 ? res.simple.erase(it) : std::next(it);
    return res;
  }

  size_t n_;
  bool keep_;
  std::map<std::pair<DenomKey, Exponent>, RatResult> memo_;
};

DenomKey make_key(const std::vector<IntVec>& denoms) {
  // first-appearance order: the greedy basis choice follows the caller's order
  DenomKey out;
  for (const auto& d : denoms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == d; });
    if (it == out.end())
      out.emplace_back(d, 1);
    else
      ++it->second;
  }
  return out;
}

template <class C>
Decomposition<C> decompose_generic(const std::map<Exponent, C>& P, const std::vector<IntVec>& denoms, bool keep) {
  if (denoms.empty()) throw std::invalid_argument("simple_fraction_decompose: no denominators");
  const size_t n = denoms[0].size();
  for (const auto& d : denoms)
    if (d.size() != n) throw DimensionError("simple_fraction_decompose: forms of different lengths");
  if (rank(to_rat_mat(denoms)) < n) throw std::invalid_argument("simple_fraction_decompose: denominators do not span");
  const int want = static_cast<int>(denoms.size()) - static_cast<int>(n);
  for (const auto& [e, c] : P) {
    if (e.size() != n) throw DimensionError("simple_fraction_decompose: monomial length mismatch");
    if (std::accumulate(e.begin(), e.end(), 0) != want)
      throw std::invalid_argument("simple_fraction_decompose: numerator degree must be |denoms| - n");
  }
  Peeler peeler(n, keep);
  DenomKey key = make_key(denoms);
  Decomposition<C> out;
  for (const auto& [e, c] : P) {
    const RatResult& r = peeler.run(key, e);
    for (const auto& [s, v] : r.simple) {
      C term = c;
      term *= C(v);
      auto it = out.simple.find(s);
      if (it == out.simple.end())
        out.simple.emplace(s, term);
      else
        it->second += term;
    }
    if (keep)
      for (const auto& d : r.dropped) {
        C term = c;
        term *= C(d.coeff);
        out.dropped.push_back({term, d.numerator, d.denominators});
      }
  }
  for (auto it = out.simple.begin(); it != out.simple.end();)
    it = is_zero(it->second) ? out.simple.erase(it) : std::next(it);
  return out;
}

}  // namespace

Decomposition<Rat> simple_fraction_decompose(const HomogeneousPoly& P, const std::vector<IntVec>& denoms,
                                             bool keep_dropped) {
  return decompose_generic<Rat>(P, denoms, keep_dropped);
}

Decomposition<SymPoly> simple_fraction_decompose(const std::map<Exponent, SymPoly>& P,
                                                 const std::vector<IntVec>& denoms, bool keep_dropped) {
  return decompose_generic<SymPoly>(P, denoms, keep_dropped);
}

Decomposition<CycNumber> simple_fraction_decompose(const std::map<Exponent, CycNumber>& P,
                                                   const std::vector<IntVec>& denoms, bool keep_dropped) {
  return decompose_generic<CycNumber>(P, denoms, keep_dropped);
}

bool cone_contains_chamber(const FormSet& sigma, const Chamber& c) {
  RatMat m = to_rat_mat(sigma);
  auto inv = inverse(transpose(m));
  if (!inv) return false;
  for (const auto& row : *inv)
    if (dot(row, c.interior_point) <= 0) return false;
  return true;
}

namespace {

template <class C>
C jk_generic(const SimpleFractionVector<C>& v, const Chamber& c) {
  C out(Rat(0));
  for (const auto& [sigma, coeff] : v) {
    if (!cone_contains_chamber(sigma, c)) continue;
    Rat vol = abs(det(to_rat_mat(sigma)));
    C term = coeff;
    term *= C(Rat(1) / vol);
    out += term;
  }
  return out;
}

}  // namespace

SymPoly jk(const SimpleFractionVector<SymPoly>& v, const Chamber& c) { return jk_generic(v, c); }
Rat jk(const SimpleFractionVector<Rat>& v, const Chamber& c) { return jk_generic(v, c); }
CycNumber jk(const SimpleFractionVector<CycNumber>& v, const Chamber& c) { return jk_generic(v, c); }

std::vector<size_t> polar_factors(const std::vector<PoleFactor>& factors, const Pole& q) {
  std::vector<size_t> out;
  for (size_t j = 0; j < factors.size(); ++j) {
    CycNumber z = factors[j].zeta * exp_2pi_i(dot(factors[j].beta, q.q));
    if (z.is_one()) out.push_back(j);
  }
  return out;
}

namespace {

// numerator series without the exponential, degree d, and the denominators
struct PolePrep {
  bool spanning = false;
  int d = 0;
  TruncSeries<CycNumber> series{1, 0};
  std::vector<IntVec> denominators;
};

PolePrep prepare(size_t n, const std::vector<PoleFactor>& factors, const Pole& q) {
  PolePrep prep;
  auto polar = polar_factors(factors, q);
  RatMat forms;
  int hsum = 0;
  for (auto j : polar) {
    forms.push_back(to_rat(factors[j].beta));
    hsum += static_cast<int>(factors[j].h);
  }
  if (forms.empty() || rank(forms) < n) return prep;
  prep.spanning = true;
  prep.d = hsum - static_cast<int>(n);
  TruncSeries<CycNumber> g = TruncSeries<CycNumber>::one(n, prep.d);
  std::vector<bool> is_polar(factors.size(), false);
  for (auto j : polar) is_polar[j] = true;
  for (size_t j = 0; j < factors.size(); ++j) {
    const auto& f = factors[j];
    if (is_polar[j]) {
      g = g * expand_factor(f.beta, CycNumber(1), f.h, prep.d);
      for (unsigned k = 0; k < f.h; ++k) prep.denominators.push_back(f.beta);
    } else {
      CycNumber z = f.zeta * exp_2pi_i(dot(f.beta, q.q));
      g = g * expand_factor(f.beta, z, f.h, prep.d);
    }
  }
  prep.series = std::move(g);
  return prep;
}

}  // namespace

SimpleFractionVector<SymPoly> tres_at_pole(size_t n, const std::vector<PoleFactor>& factors, const Pole& q) {
  for (const auto& f : factors)
    if (f.beta.size() != n) throw DimensionError("tres_at_pole: form length differs from n");
  if (q.q.size() != n) throw DimensionError("tres_at_pole: pole length differs from n");
  PolePrep prep = prepare(n, factors, q);
  if (!prep.spanning) return {};
  TruncSeries<SymPoly> g(n, prep.d);
  for (const auto& [e, c] : prep.series.terms()) g.set(e, SymPoly(c));
  auto slice = TruncSeries<SymPoly>::product_slice(exp_symbolic(n, prep.d), g, prep.d);
  return simple_fraction_decompose(slice, prep.denominators, false).simple;
}

NumericTres tres_at_pole_numeric(size_t n, const std::vector<PoleFactor>& factors, const Pole& q,
                                 const RatVec& lambda) {
  NumericTres out;
  PolePrep prep = prepare(n, factors, q);
  if (!prep.spanning) {
    out.spanning = false;
    return out;
  }
  // exp(<lambda,z>) truncated
  TruncSeries<CycNumber> ex = TruncSeries<CycNumber>::one(n, prep.d);
  for (size_t i = 0; i < n; ++i) {
    std::vector<CycNumber> a(prep.d + 1);
    Rat fact = 1, pw = 1;
    for (int k = 0; k <= prep.d; ++k) {
      if (k) {
        fact *= k;
        pw *= lambda[i];
      }
      a[k] = CycNumber(Rat(pw / fact));
    }
    IntVec e(n, 0);
    e[i] = 1;
    ex = ex * compose_linear(a, e, prep.d);
  }
  out.numerator = TruncSeries<CycNumber>::product_slice(ex, prep.series, prep.d);
  out.denominators = prep.denominators;
  out.decomposition = simple_fraction_decompose(out.numerator, prep.denominators, true);
  return out;
}

}  // namespace vpart
