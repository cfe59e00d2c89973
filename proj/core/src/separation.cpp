#include "vpart/separation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "vpart/linalg.hpp"
#include "vpart/lp.hpp"

namespace vpart {

std::complex<double> MeroFunction::eval(const std::vector<std::complex<double>>& z) const {
  if (z.size() != n) throw DimensionError("MeroFunction::eval: point has wrong length");
  auto pair = [&](const IntVec& v) {
    std::complex<double> s = 0;
    for (size_t i = 0; i < n; ++i) s += static_cast<double>(v[i]) * z[i];
    return s;
  };
  std::complex<double> num = 0;
  for (const auto& t : terms) num += t.coeff.to_complex() * std::exp(pair(t.xi));
  std::complex<double> den = 1;
  for (const auto& f : factors) den *= 1.0 - f.u().to_complex() * std::exp(pair(f.beta));
  return num / den;
}

namespace {

std::optional<RatVec> term_certificate(const IntVec& xi, const std::vector<MeroFactor>& factors, const RatVec& mu,
                                       bool interior) {
  const size_t n = mu.size(), R = factors.size();
  LinearSystem sys(R);
  for (size_t i = 0; i < n; ++i) {
    RatVec row(R);
    for (size_t k = 0; k < R; ++k) row[k] = static_cast<long>(factors[k].beta[i]);
    sys.add_eq(row, mu[i] + static_cast<long>(xi[i]));
  }
  for (size_t k = 0; k < R; ++k) sys.bound(k, 0, 1, interior);
  return feasible(sys);
}

MeroFunction single(size_t n, const CycNumber& c, IntVec xi, std::vector<MeroFactor> f) {
  MeroFunction m;
  m.n = n;
  m.terms.push_back({c, std::move(xi)});
  m.factors = std::move(f);
  return m;
}

IntVec add(IntVec a, const IntVec& b, long long k = 1) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

IntVec direction(const IntVec& beta) { return canonical_normal(to_rat(beta)); }

// beta = k * gamma
long long multiple_of(const IntVec& beta, const IntVec& gamma) {
  for (size_t i = 0; i < beta.size(); ++i)
    if (gamma[i] != 0) return beta[i] / gamma[i];
  return 0;
}

void require_single(const MeroFunction& f, const char* who) {
  if (f.terms.size() != 1) throw std::invalid_argument(std::string(who) + ": expected a single numerator term");
}

}  // namespace

std::optional<std::vector<RatVec>> box_certificate(const MeroFunction& f, const RatVec& mu, bool interior) {
  if (mu.size() != f.n) throw DimensionError("box_certificate: mu has wrong length");
  std::vector<RatVec> out;
  for (const auto& t : f.terms) {
    auto c = term_certificate(t.xi, f.factors, mu, interior);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

bool box_membership(const MeroFunction& f, const RatVec& mu, bool interior) {
  return box_certificate(f, mu, interior).has_value();
}

std::vector<MeroFunction> crucial_split(const MeroFunction& f, const RatVec& mu, std::optional<RatVec> t) {
  require_single(f, "crucial_split");
  const size_t r = f.factors.size(), n = f.n;
  if (!t) {
    auto c = term_certificate(f.terms[0].xi, f.factors, mu, false);
    if (!c) throw std::invalid_argument("crucial_split: mu is not in Box(F)");
    t = std::move(c);
  }
  if (t->size() != r) throw DimensionError("crucial_split: certificate has wrong length");
  IntVec minus_a0(n, 0);
  Rat rsum = 0;
  for (const auto& fac : f.factors) {
    minus_a0 = add(minus_a0, fac.beta);
    rsum += fac.r;
  }
  bool zero = std::all_of(minus_a0.begin(), minus_a0.end(), [](long long x) { return x == 0; });
  if (zero && frac(rsum) == 0) throw DegenerateRelation("crucial_split: the forms sum to zero and the product of u is 1");
  std::vector<size_t> ord(r);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return (*t)[a] < (*t)[b]; });
  std::vector<MeroFunction> out;
  for (size_t i = 0; i < r; ++i) {
    std::vector<MeroFactor> fs{{rsum, minus_a0}};
    for (size_t j = 0; j < i; ++j) {
      const auto& a = f.factors[ord[j]];
      IntVec nb = a.beta;
      for (auto& x : nb) x = -x;
      fs.push_back({-a.r, nb});
    }
    for (size_t j = i + 1; j < r; ++j) fs.push_back(f.factors[ord[j]]);
    CycNumber c = f.terms[0].coeff;
    if (i % 2 == 1) c = -c;
    out.push_back(single(n, c, f.terms[0].xi, std::move(fs)));
  }
  return out;
}

MeroFunction flip_factor(const MeroFunction& f, size_t k) {
  MeroFunction g = f;
  const auto fac = f.factors.at(k);
  CycNumber m = -exp_2pi_i(-fac.r);
  for (auto& t : g.terms) {
    t.coeff *= m;
    t.xi = add(t.xi, fac.beta, -1);
  }
  IntVec nb = fac.beta;
  for (auto& x : nb) x = -x;
  g.factors[k] = {-fac.r, nb};
  return g;
}

MeroFunction scale_factor(const MeroFunction& f, size_t k, unsigned s) {
  if (s == 0) throw std::invalid_argument("scale_factor: s must be positive");
  const auto fac = f.factors.at(k);
  MeroFunction g;
  g.n = f.n;
  g.factors = f.factors;
  IntVec sb = fac.beta;
  for (auto& x : sb) x *= s;
  g.factors[k] = {fac.r * static_cast<long>(s), sb};
  for (const auto& t : f.terms)
    for (unsigned j = 0; j < s; ++j)
      g.terms.push_back({t.coeff * exp_2pi_i(fac.r * static_cast<long>(j)), add(t.xi, fac.beta, j)});
  return g;
}

MeroFunction root_split_factor(const MeroFunction& f, size_t k, unsigned s) {
  if (s == 0) throw std::invalid_argument("root_split_factor: s must be positive");
  const auto fac = f.factors.at(k);
  IntVec b = fac.beta;
  for (auto& x : b) {
    if (x % static_cast<long long>(s) != 0) throw std::invalid_argument("root_split_factor: s does not divide beta");
    x /= static_cast<long long>(s);
  }
  MeroFunction g = f;
  g.factors.erase(g.factors.begin() + static_cast<long>(k));
  for (unsigned j = 0; j < s; ++j) g.factors.push_back({(fac.r + static_cast<long>(j)) / static_cast<long>(s), b});
  return g;
}

MeroFunction SimpleTerm::as_function(size_t n) const {
  MeroFunction m;
  m.n = n;
  m.terms.push_back({coeff, xi});
  for (size_t i = 0; i < alpha.size(); ++i)
    for (unsigned j = 0; j < h[i]; ++j) m.factors.push_back({r[i], alpha[i]});
  return m;
}

namespace {

using Term = MeroFunction;  // always a single numerator term here

std::vector<IntVec> hyperplanes(const Term& t) {
  std::vector<IntVec> hs;
  for (const auto& f : t.factors) {
    IntVec d = direction(f.beta);
    if (std::find(hs.begin(), hs.end(), d) == hs.end()) hs.push_back(d);
  }
  return hs;
}

bool independent(const std::vector<IntVec>& vs) { return rank(to_rat_mat(vs)) == vs.size(); }

// Rewrites factor k so that its form becomes s * beta_k.
std::vector<Term> rescale(const Term& t, size_t k, long long s) {
  Term g = t;
  if (s < 0) {
    g = flip_factor(g, k);
    s = -s;
  }
  if (s == 1) return {g};
  MeroFunction h = scale_factor(g, k, static_cast<unsigned>(s));
  std::vector<Term> out;
  for (const auto& nt : h.terms) out.push_back(single(h.n, nt.coeff, nt.xi, h.factors));
  return out;
}

struct Circuit {
  IntVec gamma0;
  std::vector<IntVec> gammas;
  IntVec m;  // m0 gamma0 + sum m_i gamma_i = 0; m[0] = m0
};

// Minimal circuit through hs[j] among the others.
Circuit find_circuit(const std::vector<IntVec>& hs, size_t j) {
  std::vector<IntVec> rest;
  for (size_t i = 0; i < hs.size(); ++i)
    if (i != j) rest.push_back(hs[i]);
  auto in_span = [&](const std::vector<IntVec>& s) {
    auto with = s;
    with.push_back(hs[j]);
    return rank(to_rat_mat(with)) == rank(to_rat_mat(s));
  };
  for (size_t i = rest.size(); i-- > 0;) {
    auto trial = rest;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (!trial.empty() && in_span(trial)) rest = std::move(trial);
  }
  const size_t n = hs[j].size();
  RatMat a(n, RatVec(rest.size()));
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < rest.size(); ++c) a[i][c] = static_cast<long>(rest[c][i]);
  RatVec c = std::get<Solution>(solve(a, to_rat(hs[j]))).x;
  Int d = lcm_den(c);
  Circuit out;
  out.gamma0 = hs[j];
  out.gammas = rest;
  out.m.push_back(to_ll(d));
  for (const auto& ci : c) out.m.push_back(-to_ll(Int(ci * d)));
  return out;
}

std::vector<Term> exchange(const Term& start, const Circuit& circ, const RatVec& mu) {
  std::vector<Term> done, work{start};
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    // first factor on each circuit hyperplane
    std::vector<size_t> pick;
    for (const auto& g : circ.gammas) {
      size_t k = t.factors.size();
      for (size_t i = 0; i < t.factors.size(); ++i)
        if (direction(t.factors[i].beta) == g) {
          k = i;
          break;
        }
      if (k == t.factors.size()) break;
      pick.push_back(k);
    }
    if (pick.size() < circ.gammas.size()) {
      done.push_back(std::move(t));
      continue;
    }
    // alpha_i = L m_i gamma_i = s_i beta_i
    std::vector<long long> kk;
    long long L = 1;
    for (size_t i = 0; i < pick.size(); ++i) {
      long long k = multiple_of(t.factors[pick[i]].beta, circ.gammas[i]);
      long long m = circ.m[i + 1];
      long long need = std::llabs(k) / std::gcd(std::llabs(k), std::llabs(m));
      L = std::lcm(L, need);
      kk.push_back(k);
    }
    std::vector<Term> rewritten{t};
    for (size_t i = 0; i < pick.size(); ++i) {
      long long s = L * circ.m[i + 1] / kk[i];
      std::vector<Term> next;
      for (const auto& rt : rewritten)
        for (auto& x : rescale(rt, pick[i], s)) next.push_back(std::move(x));
      rewritten = std::move(next);
    }
    for (const auto& rt : rewritten) {
      auto cert = term_certificate(rt.terms[0].xi, rt.factors, mu, false);
      if (!cert) throw std::logic_error("exchange: admissibility lost during rewriting");
      // split the circuit factors, carrying the rest along
      std::vector<MeroFactor> circ_f, rest_f;
      RatVec tc;
      for (size_t i = 0; i < rt.factors.size(); ++i) {
        if (std::find(pick.begin(), pick.end(), i) != pick.end()) {
          circ_f.push_back(rt.factors[i]);
          tc.push_back((*cert)[i]);
        } else {
          rest_f.push_back(rt.factors[i]);
        }
      }
      // keep pick order for ties
      std::vector<MeroFactor> ordered;
      RatVec tord;
      for (auto p : pick) {
        size_t pos = static_cast<size_t>(std::count_if(pick.begin(), pick.end(), [&](size_t q) { return q < p; }));
        ordered.push_back(circ_f[pos]);
        tord.push_back(tc[pos]);
      }
      Term d = single(rt.n, rt.terms[0].coeff, rt.terms[0].xi, ordered);
      for (auto& piece : crucial_split(d, mu, tord)) {
        for (const auto& rf : rest_f) piece.factors.push_back(rf);
        work.push_back(std::move(piece));
      }
    }
  }
  return done;
}

// Same-direction merging on an independent arrangement.
void merge(const Term& start, const RatVec& mu, std::vector<SimpleTerm>& out) {
  // common form L * gamma per hyperplane; rescaling keeps factor positions
  std::vector<Term> work{start};
  for (const auto& g : hyperplanes(start)) {
    long long L = 1;
    for (const auto& f : start.factors)
      if (direction(f.beta) == g) L = std::lcm(L, std::llabs(multiple_of(f.beta, g)));
    for (size_t k = 0; k < start.factors.size(); ++k) {
      if (direction(start.factors[k].beta) != g) continue;
      long long s = L / multiple_of(start.factors[k].beta, g);
      std::vector<Term> next;
      for (const auto& c : work)
        for (auto& x : rescale(c, k, s)) next.push_back(std::move(x));
      work = std::move(next);
    }
  }
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    // two factors with equal form and distinct u
    size_t a = 0, b = 0;
    bool found = false;
    for (size_t i = 0; i < t.factors.size() && !found; ++i)
      for (size_t j = i + 1; j < t.factors.size() && !found; ++j)
        if (t.factors[i].beta == t.factors[j].beta && frac(t.factors[i].r) != frac(t.factors[j].r)) {
          a = i;
          b = j;
          found = true;
        }
    if (!found) {
      SimpleTerm st;
      st.coeff = t.terms[0].coeff;
      st.xi = t.terms[0].xi;
      for (const auto& f : t.factors) {
        size_t i = 0;
        while (i < st.alpha.size() && !(st.alpha[i] == f.beta && frac(st.r[i]) == frac(f.r))) ++i;
        if (i == st.alpha.size()) {
          st.alpha.push_back(f.beta);
          st.r.push_back(frac(f.r));
          st.h.push_back(0);
        }
        ++st.h[i];
      }
      out.push_back(std::move(st));
      continue;
    }
    auto cert = term_certificate(t.terms[0].xi, t.factors, mu, false);
    if (!cert) throw std::logic_error("merge: admissibility lost");
    Rat tt = (*cert)[a] + (*cert)[b];
    const auto fa = t.factors[a], fb = t.factors[b];
    CycNumber u1 = fa.u(), u2 = fb.u();
    CycNumber c1 = (CycNumber(1) - u2 * u1.inv()).inv();
    CycNumber c2 = (CycNumber(1) - u1 * u2.inv()).inv();
    auto without = [&](size_t k) {
      std::vector<MeroFactor> fs;
      for (size_t i = 0; i < t.factors.size(); ++i)
        if (i != k) fs.push_back(t.factors[i]);
      return fs;
    };
    const CycNumber& c = t.terms[0].coeff;
    const IntVec& xi = t.terms[0].xi;
    if (tt <= 1) {
      work.push_back(single(t.n, c * c1, xi, without(b)));
      work.push_back(single(t.n, c * c2, xi, without(a)));
    } else {
      work.push_back(single(t.n, -c * c1 * u1.inv(), add(xi, fa.beta, -1), without(a)));
      work.push_back(single(t.n, -c * c2 * u2.inv(), add(xi, fa.beta, -1), without(b)));
    }
  }
}

void decompose(const Term& t, const RatVec& mu, std::vector<SimpleTerm>& out) {
  auto hs = hyperplanes(t);
  if (independent(hs)) {
    merge(t, mu, out);
    return;
  }
  size_t j = hs.size();
  while (j-- > 0) {
    auto others = hs;
    others.erase(others.begin() + static_cast<long>(j));
    if (rank(to_rat_mat(others)) == rank(to_rat_mat(hs))) break;
  }
  Circuit circ = find_circuit(hs, j);
  for (const auto& piece : exchange(t, circ, mu)) decompose(piece, mu, out);
}

std::vector<SimpleTerm> combine(std::vector<SimpleTerm> terms) {
  std::vector<SimpleTerm> out;
  for (auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SimpleTerm& o) {
      return o.xi == t.xi && o.alpha == t.alpha && o.r == t.r && o.h == t.h;
    });
    if (it == out.end())
      out.push_back(std::move(t));
    else
      it->coeff += t.coeff;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const SimpleTerm& t) { return t.coeff.is_zero(); }), out.end());
  return out;
}

bool admissible(const std::vector<SimpleTerm>& terms, const RatVec& mu, size_t n) {
  for (const auto& t : terms) {
    if (t.alpha.size() != n) return false;
    if (!box_membership(t.as_function(n), mu, true)) return false;
  }
  return true;
}

std::vector<SimpleTerm> run(const MeroFunction& f, const RatVec& mu) {
  std::vector<SimpleTerm> out;
  for (const auto& nt : f.terms) decompose(single(f.n, nt.coeff, nt.xi, f.factors), mu, out);
  return combine(std::move(out));
}

// A point of the interior of Box(F): mu with 0 < t < 1 for all terms.
std::optional<RatVec> box_interior_point(const MeroFunction& f) {
  const size_t n = f.n, R = f.factors.size(), T = f.terms.size();
  LinearSystem sys(n + T * R);
  for (size_t a = 0; a < T; ++a) {
    for (size_t i = 0; i < n; ++i) {
      RatVec row(n + T * R, 0);
      row[i] = 1;
      for (size_t k = 0; k < R; ++k) row[n + a * R + k] = -Rat(static_cast<long>(f.factors[k].beta[i]));
      sys.add_eq(row, -Rat(static_cast<long>(f.terms[a].xi[i])));
    }
    for (size_t k = 0; k < R; ++k) sys.bound(n + a * R + k, 0, 1, true);
  }
  auto x = feasible(sys);
  if (!x) return std::nullopt;
  return RatVec(x->begin(), x->begin() + static_cast<long>(n));
}

}  // namespace

AdmissibleDecomposition admissible_decompose(const MeroFunction& f, const RatVec& mu) {
  if (mu.size() != f.n) throw DimensionError("admissible_decompose: mu has wrong length");
  std::vector<IntVec> forms;
  for (const auto& fac : f.factors) {
    if (std::all_of(fac.beta.begin(), fac.beta.end(), [](long long x) { return x == 0; }))
      throw std::invalid_argument("admissible_decompose: zero form in denominator");
    forms.push_back(fac.beta);
  }
  if (forms.empty() || rank(to_rat_mat(forms)) < f.n)
    throw EssentialityViolated("admissible_decompose: denominator forms do not span");
  if (!box_membership(f, mu)) throw std::invalid_argument("admissible_decompose: mu is not in Box(F)");

  AdmissibleDecomposition d;
  d.mu_used = mu;
  d.terms = run(f, mu);
  if (admissible(d.terms, mu, f.n)) return d;

  auto p = box_interior_point(f);
  if (!p) throw EssentialityViolated("admissible_decompose: Box(F) has empty interior");
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> jitter(-50, 50);
  for (int attempt = 1; attempt <= 64; ++attempt) {
    // move towards the interior point, then jitter off special sets
    Rat eps(1, attempt + 3);
    RatVec m(f.n);
    for (size_t i = 0; i < f.n; ++i)
      m[i] = mu[i] + eps * ((*p)[i] - mu[i]) + make_rat(jitter(rng), 1000LL * (attempt + 3));
    if (!box_membership(f, m, true)) continue;
    auto terms = run(f, m);
    if (admissible(terms, m, f.n)) {
      d.terms = std::move(terms);
      d.mu_used = m;
      d.perturbed = true;
      return d;
    }
  }
  throw std::runtime_error("admissible_decompose: no admissible point found near mu");
}

}  // namespace vpart
