#include "vpart/formula.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "vpart/linalg.hpp"
#include "vpart/lp.hpp"
#include "vpart/parallel.hpp"

namespace vpart {

CycNumber QuasiPolynomial::value(const IntVec& lambda) const {
  if (lambda.size() != n) throw DimensionError("QuasiPolynomial: point has wrong length");
  CycNumber s(0);
  for (const auto& t : terms) s += exp_2pi_i(-dot(lambda, t.q)) * t.poly.eval(lambda);
  return s;
}

Rat QuasiPolynomial::evaluate(const IntVec& lambda) const {
  CycNumber v = value(lambda);
  if (!v.is_rational()) throw NonRealValue("quasi-polynomial value is not rational at " + to_string(lambda) + ": " + v.str());
  return v.rational();
}

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& t : terms) d = std::max(d, t.poly.total_degree());
  return d;
}

const SymPoly* QuasiPolynomial::term_at(const RatVec& q) const {
  for (const auto& t : terms)
    if (t.q == q) return &t.poly;
  return nullptr;
}

QuasiPolynomial& QuasiPolynomial::add(const QuasiPolynomial& o, const Rat& scale) {
  if (n == 0) n = o.n;
  if (o.n != n) throw DimensionError("QuasiPolynomial::add: dimension mismatch");
  M = std::lcm(M, o.M);
  for (const auto& t : o.terms) {
    SymPoly p = t.poly * CycNumber(scale);
    bool found = false;
    for (auto& mine : terms)
      if (mine.q == t.q) {
        mine.poly += p;
        found = true;
        break;
      }
    if (!found) terms.push_back({t.q, p});
  }
  std::sort(terms.begin(), terms.end(), [](const QPTerm& a, const QPTerm& b) { return a.q < b.q; });
  terms.erase(std::remove_if(terms.begin(), terms.end(), [](const QPTerm& t) { return t.poly.is_zero(); }),
              terms.end());
  for (const auto& v : o.validity)
    if (std::find(validity.begin(), validity.end(), v) == validity.end()) validity.push_back(v);
  return *this;
}

bool in_validity_region(const Arrangement& arr, const QuasiPolynomial& qp, const IntVec& lambda) {
  if (qp.chamber == kNullChamber) return !arr.in_cone(to_rat(lambda));
  const Chamber& c = arr.chamber(qp.chamber);
  for (const auto& s : qp.validity)
    if (!arr.in_validity_region(c, s, lambda)) return false;
  return true;
}

QuasiPolynomial residue_quasipoly(const Arrangement& arr, const Chamber& c, const std::vector<WeightedFactor>& factors) {
  const System& s = arr.system();
  const size_t n = s.n;
  std::vector<PoleFactor> pf;
  std::vector<std::vector<Rat>> twists(s.size());
  std::vector<int> scale(s.size(), 0);
  for (const auto& f : factors) {
    if (f.direction >= s.size()) throw DimensionError("residue_quasipoly: direction index out of range");
    if (f.h == 0) continue;
    pf.push_back({s.vectors[f.direction], exp_2pi_i(f.r), f.h});
    Rat r = frac(f.r);
    if (std::find(twists[f.direction].begin(), twists[f.direction].end(), r) == twists[f.direction].end())
      twists[f.direction].push_back(r);
    scale[f.direction] += static_cast<int>(f.h);
  }
  std::set<Pole> poles;
  for (const auto& b : c.bases) {
    bool ok = true;
    for (auto i : b.indices) ok = ok && !twists[i].empty();
    if (!ok) continue;
    std::vector<size_t> pick(n, 0);
    for (;;) {
      RatVec r;
      for (size_t k = 0; k < n; ++k) r.push_back(twists[b.indices[k]][pick[k]]);
      for (auto& p : poles_of_basis(b, r)) poles.insert(p);
      size_t k = 0;
      while (k < n && ++pick[k] == twists[b.indices[k]].size()) pick[k++] = 0;
      if (k == n) break;
    }
  }
  std::vector<Pole> plist(poles.begin(), poles.end());
  std::vector<SymPoly> polys(plist.size());
  parallel_for(plist.size(), [&](size_t i) { polys[i] = jk(tres_at_pole(n, pf, plist[i]), c); });

  QuasiPolynomial qp;
  qp.n = n;
  qp.chamber = c.id;
  qp.validity.push_back(scale);
  for (size_t i = 0; i < plist.size(); ++i) {
    if (polys[i].is_zero()) continue;
    SymPoly p = polys[i];
    if (p.nvars() == 0) p += SymPoly(n, {});
    qp.M = std::lcm(qp.M, static_cast<unsigned>(to_ll(plist[i].order_hint())));
    qp.M = std::lcm(qp.M, p.order());
    qp.terms.push_back({plist[i].q, std::move(p)});
  }
  return qp;
}

QuasiPolynomial null_quasipoly(size_t n) {
  QuasiPolynomial qp;
  qp.n = n;
  qp.chamber = kNullChamber;
  return qp;
}

QuasiPolynomial partition_quasipoly(const Arrangement& arr, const Chamber& c) {
  std::vector<WeightedFactor> f;
  const auto& s = arr.system();
  for (size_t i = 0; i < s.size(); ++i) f.push_back({i, Rat(0), static_cast<unsigned>(s.multiplicities[i])});
  return residue_quasipoly(arr, c, f);
}

QuasiPolynomial euler_maclaurin_quasipoly(const Arrangement& arr, const Chamber& c, const std::vector<int>& h,
                                          const RatVec& r) {
  const auto& s = arr.system();
  const size_t N = s.N();
  if (h.size() != N || (!r.empty() && r.size() != N))
    throw DimensionError("euler_maclaurin_quasipoly: h and r must be indexed by the flattened sequence");
  auto dir = s.flat_to_direction();
  // merge copies of a direction that share a twist
  std::map<std::pair<size_t, Rat>, unsigned> merged;
  for (size_t j = 0; j < N; ++j) {
    if (h[j] < 0) throw std::invalid_argument("euler_maclaurin_quasipoly: negative exponent");
    Rat rj = r.empty() ? Rat(0) : frac(r[j]);
    merged[{dir[j], rj}] += static_cast<unsigned>(h[j]);
  }
  std::vector<WeightedFactor> f;
  for (const auto& [key, hh] : merged) f.push_back({key.first, key.second, hh});
  return residue_quasipoly(arr, c, f);
}

Rat c_poly(const Rat& x, int h) { return binomial(x + h - 1, static_cast<unsigned>(h - 1)); }

std::vector<Rat> c_basis_coefficients(int d) {
  // rows: x = 0..d, columns: h = 1..d+1
  RatMat m(d + 1, RatVec(d + 1));
  RatVec b(d + 1);
  for (int x = 0; x <= d; ++x) {
    for (int h = 1; h <= d + 1; ++h) m[x][h - 1] = c_poly(Rat(x), h);
    Rat p = 1;
    for (int k = 0; k < d; ++k) p *= x;
    b[x] = p;
  }
  return std::get<Solution>(solve(m, b)).x;
}

QuasiPolynomial weighted_sum_quasipoly(const Arrangement& arr, const Chamber& c, const PolyN& f) {
  const size_t N = arr.system().N();
  std::map<std::vector<int>, Rat> by_h;
  for (const auto& [e, coeff] : f) {
    if (e.size() != N) throw DimensionError("weighted_sum_quasipoly: monomial length differs from N");
    std::map<std::vector<int>, Rat> acc{{std::vector<int>{}, coeff}};
    for (size_t i = 0; i < N; ++i) {
      auto a = c_basis_coefficients(e[i]);
      std::map<std::vector<int>, Rat> next;
      for (const auto& [hv, v] : acc)
        for (size_t h = 0; h < a.size(); ++h) {
          if (a[h] == 0) continue;
          auto hv2 = hv;
          hv2.push_back(static_cast<int>(h + 1));
          next[hv2] += v * a[h];
        }
      acc = std::move(next);
    }
    for (const auto& [hv, v] : acc) by_h[hv] += v;
  }
  QuasiPolynomial out;
  out.n = arr.system().n;
  out.chamber = c.id;
  for (const auto& [hv, v] : by_h) {
    if (v == 0) continue;
    out.add(euler_maclaurin_quasipoly(arr, c, hv, {}), v);
  }
  return out;
}

SymPoly volume_polynomial(const Arrangement& arr, const Chamber& c) {
  const auto& s = arr.system();
  const size_t n = s.n;
  const int d = static_cast<int>(s.N()) - static_cast<int>(n);
  auto ex = exp_symbolic(n, d);
  auto slice = ex.homogeneous_part(d);
  SymPoly v = jk(simple_fraction_decompose(slice, s.flattened(), false).simple, c);
  if (v.nvars() == 0) v += SymPoly(n, {});
  return v;
}

namespace {

// flattened index sets whose directions form a basis of the chamber
std::vector<std::vector<size_t>> flat_bases(const System& s, const Chamber& c) {
  auto dir = s.flat_to_direction();
  std::vector<std::vector<size_t>> copies(s.size());
  for (size_t j = 0; j < dir.size(); ++j) copies[dir[j]].push_back(j);
  std::vector<std::vector<size_t>> out;
  for (const auto& b : c.bases) {
    const size_t n = b.indices.size();
    std::vector<size_t> pick(n, 0);
    for (;;) {
      std::vector<size_t> sel;
      for (size_t k = 0; k < n; ++k) sel.push_back(copies[b.indices[k]][pick[k]]);
      out.push_back(sel);
      size_t k = 0;
      while (k < n && ++pick[k] == copies[b.indices[k]].size()) pick[k++] = 0;
      if (k == n) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe_violation(const std::vector<size_t>& sigma, const std::string& pole, size_t k) {
  std::string s = "genericity violated: basis {";
  for (size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + "}, pole " + pole + ", factor " + std::to_string(k);
}

}  // namespace

QuasiPolynomial exponential_sum_closed_form(const Arrangement& arr, const Chamber& c, const RatVec& r) {
  const auto& s = arr.system();
  auto flat = s.flattened();
  if (r.size() != flat.size()) throw DimensionError("exponential_sum_closed_form: twist must be indexed by the flattened sequence");
  std::map<RatVec, CycNumber> acc;
  for (const auto& sigma : flat_bases(s, c)) {
    Basis b = make_basis(flat, sigma);
    RatVec rs;
    for (auto j : sigma) rs.push_back(r[j]);
    for (const auto& p : poles_of_basis(b, rs)) {
      CycNumber prod(Rat(1, static_cast<unsigned long>(b.volume)));
      for (size_t k = 0; k < flat.size(); ++k) {
        if (std::find(sigma.begin(), sigma.end(), k) != sigma.end()) continue;
        CycNumber z = exp_2pi_i(r[k] + dot(flat[k], p.q));
        if (z.is_one()) throw GenericityViolated(sigma, p.q, k, describe_violation(sigma, to_string(p.q), k));
        prod *= (CycNumber(1) - z).inv();
      }
      auto it = acc.find(p.q);
      if (it == acc.end())
        acc.emplace(p.q, prod);
      else
        it->second += prod;
    }
  }
  QuasiPolynomial qp;
  qp.n = s.n;
  qp.chamber = c.id;
  qp.validity.push_back(s.multiplicities);
  for (const auto& [q, v] : acc) {
    if (v.is_zero()) continue;
    SymPoly p(s.n, {{Exponent(s.n, 0), v}});
    qp.M = std::lcm(qp.M, std::lcm(static_cast<unsigned>(to_ll(lcm_den(q))), v.order()));
    qp.terms.push_back({q, p});
  }
  return qp;
}

std::complex<double> exponential_sum_closed_form(const Arrangement& arr, const Chamber& c,
                                                 const std::vector<std::complex<double>>& y, const IntVec& lambda,
                                                 double tol) {
  using cd = std::complex<double>;
  const auto& s = arr.system();
  auto flat = s.flattened();
  if (y.size() != flat.size()) throw DimensionError("exponential_sum_closed_form: y must be indexed by the flattened sequence");
  const size_t n = s.n;
  const double two_pi = 2 * std::numbers::pi;
  cd total = 0;
  for (const auto& sigma : flat_bases(s, c)) {
    Basis b = make_basis(flat, sigma);
    RatMat binv = *inverse(to_rat_mat(b.rows));
    // p0 = -B^{-1} y_sigma
    std::vector<cd> p0(n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) p0[i] -= binv[i][j].get_d() * y[sigma[j]];
    for (const auto& q : poles_of_basis(b, RatVec(n, 0))) {
      std::vector<cd> p(n);
      for (size_t i = 0; i < n; ++i) p[i] = p0[i] + cd(0, two_pi * q.q[i].get_d());
      cd lp = 0;
      for (size_t i = 0; i < n; ++i) lp += static_cast<double>(lambda[i]) * p[i];
      cd term = std::exp(-lp) / static_cast<double>(b.volume);
      for (size_t k = 0; k < flat.size(); ++k) {
        if (std::find(sigma.begin(), sigma.end(), k) != sigma.end()) continue;
        cd bp = 0;
        for (size_t i = 0; i < n; ++i) bp += static_cast<double>(flat[k][i]) * p[i];
        cd z = std::exp(y[k] + bp);
        if (std::abs(1.0 - z) <= tol) throw GenericityViolated(sigma, q.q, k, describe_violation(sigma, to_string(q.q), k));
        term /= (1.0 - z);
      }
      total += term;
    }
  }
  return total;
}

Rat EhrhartQP::evaluate(long long k) const {
  long long j = ((k % period) + period) % period;
  Rat v = 0, pw = 1;
  for (const auto& c : polys[static_cast<size_t>(j)]) {
    v += c * pw;
    pw *= static_cast<long>(k);
  }
  return v;
}

EhrhartQP ehrhart(const Arrangement& arr, const IntVec& lambda0) {
  Location loc = arr.locate(lambda0);
  if (loc.kind == Location::Kind::Exterior || loc.chamber < 0)
    throw ExteriorPoint("ehrhart: point " + to_string(lambda0) + " lies outside the cone");
  const Chamber& c = arr.chambers()[static_cast<size_t>(loc.chamber)];
  QuasiPolynomial qp = partition_quasipoly(arr, c);
  unsigned period = 1;
  for (const auto& t : qp.terms) period = std::lcm(period, static_cast<unsigned>(to_ll(dot(lambda0, t.q).get_den())));
  EhrhartQP e;
  e.chamber = c.id;
  std::vector<std::vector<Rat>> polys;
  for (unsigned j = 0; j < period; ++j) {
    std::vector<CycNumber> acc;
    for (const auto& t : qp.terms) {
      CycNumber ch = exp_2pi_i(-dot(lambda0, t.q) * static_cast<long>(j));
      auto ray = t.poly.along_ray(lambda0);
      if (acc.size() < ray.size()) acc.resize(ray.size(), CycNumber(0));
      for (size_t i = 0; i < ray.size(); ++i) acc[i] += ch * ray[i];
    }
    std::vector<Rat> p;
    for (const auto& v : acc) {
      if (!v.is_rational()) throw NonRealValue("ehrhart: residue-class polynomial is not rational");
      p.push_back(v.rational());
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    polys.push_back(std::move(p));
  }
  // minimal period
  unsigned best = period;
  for (unsigned d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (unsigned j = 0; j < period && ok; ++j) ok = polys[j] == polys[j % d];
    if (ok) {
      best = d;
      break;
    }
  }
  e.period = best;
  e.polys.assign(polys.begin(), polys.begin() + best);
  return e;
}

System MeroCoefficientFormula::directions_of(const MeroFunction& f, std::vector<size_t>* factor_direction) {
  System s;
  s.n = f.n;
  for (const auto& fac : f.factors) {
    auto it = std::find(s.vectors.begin(), s.vectors.end(), fac.beta);
    size_t d;
    if (it == s.vectors.end()) {
      d = s.vectors.size();
      s.vectors.push_back(fac.beta);
      s.multiplicities.push_back(1);
    } else {
      d = static_cast<size_t>(it - s.vectors.begin());
      ++s.multiplicities[d];
    }
    if (factor_direction) factor_direction->push_back(d);
  }
  return s;
}

MeroCoefficientFormula::MeroCoefficientFormula(const MeroFunction& f, const std::string& chamber_id)
    : f_(f), arr_(directions_of(f)), chamber_(chamber_id) {
  std::vector<size_t> dir;
  directions_of(f, &dir);
  std::map<std::pair<size_t, Rat>, unsigned> merged;
  for (size_t k = 0; k < f.factors.size(); ++k) merged[{dir[k], frac(f.factors[k].r)}] += 1;
  std::vector<WeightedFactor> wf;
  for (const auto& [key, h] : merged) wf.push_back({key.first, key.second, h});
  base_ = residue_quasipoly(arr_, arr_.chamber(chamber_id), wf);
}

bool MeroCoefficientFormula::valid_at(const IntVec& lambda) const {
  const size_t n = f_.n, R = f_.factors.size(), T = f_.terms.size();
  // variables: mu (n, free), then t[xi][k]
  const size_t nv = n + T * R;
  LinearSystem sys(nv);
  for (size_t a = 0; a < T; ++a) {
    for (size_t i = 0; i < n; ++i) {
      RatVec row(nv, 0);
      row[i] = 1;
      for (size_t k = 0; k < R; ++k) row[n + a * R + k] = -Rat(static_cast<long>(f_.factors[k].beta[i]));
      sys.add_eq(row, -Rat(static_cast<long>(f_.terms[a].xi[i])));
    }
    for (size_t k = 0; k < R; ++k) sys.bound(n + a * R + k, 0, 1, true);
  }
  for (const auto& [w, strict] : chamber().inequalities) {
    RatVec row(nv, 0);
    for (size_t i = 0; i < n; ++i) row[i] = Rat(static_cast<long>(w[i]));
    sys.add_ge(row, -Rat(static_cast<long>(dot(w, lambda))), true);
  }
  return feasible(sys).has_value();
}

CycNumber MeroCoefficientFormula::coefficient(const IntVec& lambda) const {
  CycNumber s(0);
  for (const auto& t : f_.terms) {
    IntVec shifted(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] - t.xi[i];
    s += t.coeff * base_.value(shifted);
  }
  return s;
}

}  // namespace vpart
