#include "vpart/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vpart/linalg.hpp"
#include "vpart/lp.hpp"

namespace vpart {

namespace {

std::optional<IntVec> halfspace_witness(const std::vector<IntVec>& vectors, size_t n) {
  LinearSystem sys(n);
  for (const auto& v : vectors) sys.add_ge(to_rat(v), 1);
  auto w = feasible(sys);
  if (!w) return std::nullopt;
  Int d = lcm_den(*w);
  IntVec out(n);
  for (size_t i = 0; i < n; ++i) out[i] = to_ll(Int((*w)[i] * d));
  return out;
}

struct Enumerator {
  size_t n = 0, m = 0;
  std::vector<IntVec> vecs;  // sorted by decreasing <beta,v>
  std::vector<size_t> order;  // sorted position -> original index
  std::vector<long long> weight;
  IntVec v;
  std::vector<size_t> free_pos, basis_pos;
  std::vector<std::vector<long long>> adj;  // adjugate of the basis matrix (columns are basis vectors)
  long long det = 0;
  const std::function<void(const IntVec&)>* visit = nullptr;
  IntVec x;

  Enumerator(const std::vector<IntVec>& vectors, size_t dim) : n(dim), m(vectors.size()) {
    auto w = halfspace_witness(vectors, n);
    if (!w) throw std::invalid_argument("enumerate_solutions: vectors do not lie in an open halfspace");
    v = *w;
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return dot(vectors[a], v) > dot(vectors[b], v); });
    for (auto i : order) {
      vecs.push_back(vectors[i]);
      weight.push_back(dot(vectors[i], v));
    }
    // basis: last independent set
    RatMat rows;
    std::vector<bool> in_basis(m, false);
    for (size_t k = m; k-- > 0;) {
      auto trial = rows;
      trial.push_back(to_rat(vecs[k]));
      if (rank(trial) == trial.size()) {
        rows = std::move(trial);
        in_basis[k] = true;
      }
    }
    for (size_t k = 0; k < m; ++k) (in_basis[k] ? basis_pos : free_pos).push_back(k);
    if (basis_pos.size() == n) {
      // B has the basis vectors as columns; adj(B) = det(B) B^{-1}
      RatMat b(n, RatVec(n));
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) b[i][j] = static_cast<long>(vecs[basis_pos[j]][i]);
      Rat d = vpart::det(b);
      det = to_ll(d.get_num());
      RatMat inv = *inverse(b);
      adj.assign(n, std::vector<long long>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) adj[i][j] = to_ll(Rat(inv[i][j] * d).get_num());
    }
    x.assign(m, 0);
  }

  void run(const IntVec& target, const std::function<void(const IntVec&)>& f) {
    visit = &f;
    long long budget = dot(target, v);
    if (budget < 0) return;
    IntVec rem = target;
    std::fill(x.begin(), x.end(), 0);
    dfs(0, rem, budget);
  }

  void finish(const IntVec& rem) {
    if (basis_pos.size() == n) {
      for (size_t i = 0; i < n; ++i) {
        long long s = 0;
        for (size_t j = 0; j < n; ++j) s += adj[i][j] * rem[j];
        if (s % det != 0) return;
        long long xi = s / det;
        if (xi < 0) return;
        x[basis_pos[i]] = xi;
      }
    } else {
      // rank deficient: the basis coordinates must still be enumerated
      return finish_deficient(0, rem);
    }
    emit();
  }

  void finish_deficient(size_t i, const IntVec& rem) {
    if (i == basis_pos.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](long long t) { return t == 0; })) emit();
      return;
    }
    size_t k = basis_pos[i];
    long long budget = dot(rem, v);
    IntVec r = rem;
    for (long long c = 0; c * weight[k] <= budget; ++c) {
      x[k] = c;
      finish_deficient(i + 1, r);
      for (size_t t = 0; t < n; ++t) r[t] -= vecs[k][t];
    }
    x[k] = 0;
  }

  void emit() {
    IntVec orig(m);
    for (size_t k = 0; k < m; ++k) orig[order[k]] = x[k];
    (*visit)(orig);
  }

  void dfs(size_t i, IntVec& rem, long long budget) {
    if (i == free_pos.size()) {
      finish(rem);
      return;
    }
    size_t k = free_pos[i];
    long long c = 0;
    for (; c * weight[k] <= budget; ++c) {
      x[k] = c;
      dfs(i + 1, rem, budget - c * weight[k]);
      for (size_t t = 0; t < n; ++t) rem[t] -= vecs[k][t];
    }
    for (size_t t = 0; t < n; ++t) rem[t] += c * vecs[k][t];
    x[k] = 0;
  }
};

}  // namespace

void enumerate_solutions(const std::vector<IntVec>& vectors, const IntVec& target,
                         const std::function<void(const IntVec&)>& visit) {
  if (vectors.empty()) {
    if (std::all_of(target.begin(), target.end(), [](long long t) { return t == 0; })) visit(IntVec{});
    return;
  }
  Enumerator e(vectors, target.size());
  e.run(target, visit);
}

Int count_points(const System& s, const IntVec& lambda) {
  Int c = 0;
  long long small = 0;
  enumerate_solutions(s.flattened(), lambda, [&](const IntVec&) { ++small; });
  c = static_cast<long>(small);
  return c;
}

Rat sum_weight(const System& s, const IntVec& lambda, const PolyN& f) {
  const size_t N = s.N();
  for (const auto& [e, c] : f)
    if (e.size() != N) throw DimensionError("sum_weight: monomial length differs from N");
  Rat total = 0;
  enumerate_solutions(s.flattened(), lambda, [&](const IntVec& x) {
    for (const auto& [e, c] : f) {
      Int m = 1;
      for (size_t i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) m *= static_cast<long>(x[i]);
      total += c * m;
    }
  });
  return total;
}

CycNumber sum_weight_twisted(const System& s, const IntVec& lambda, const RatVec& r) {
  if (r.size() != s.N()) throw DimensionError("sum_weight_twisted: twist must be indexed by the flattened sequence");
  std::map<Rat, long long> by_class;
  enumerate_solutions(s.flattened(), lambda, [&](const IntVec& x) { ++by_class[frac(dot(x, r))]; });
  CycNumber total(0);
  for (const auto& [cls, cnt] : by_class) total += exp_2pi_i(cls) * CycNumber(static_cast<long>(cnt));
  return total;
}

std::complex<double> sum_weight_exp(const System& s, const IntVec& lambda,
                                    const std::vector<std::complex<double>>& y) {
  if (y.size() != s.N()) throw DimensionError("sum_weight_exp: y must be indexed by the flattened sequence");
  std::complex<double> total = 0;
  enumerate_solutions(s.flattened(), lambda, [&](const IntVec& x) {
    std::complex<double> e = 0;
    for (size_t i = 0; i < x.size(); ++i) e += static_cast<double>(x[i]) * y[i];
    total += std::exp(e);
  });
  return total;
}

CycNumber coeff_expansion(const MeroFunction& f, const IntVec& lambda) {
  std::vector<IntVec> betas;
  RatVec r;
  for (const auto& fac : f.factors) {
    betas.push_back(fac.beta);
    r.push_back(fac.r);
  }
  std::map<Rat, CycNumber> by_class;
  for (const auto& t : f.terms) {
    IntVec target(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) target[i] = lambda[i] - t.xi[i];
    std::map<Rat, long long> cnt;
    enumerate_solutions(betas, target, [&](const IntVec& x) { ++cnt[frac(dot(x, r))]; });
    for (const auto& [cls, c] : cnt) {
      auto it = by_class.try_emplace(cls, CycNumber(0)).first;
      it->second += t.coeff * CycNumber(static_cast<long>(c));
    }
  }
  CycNumber total(0);
  for (const auto& [cls, c] : by_class) total += exp_2pi_i(cls) * c;
  return total;
}

bool InequalityPolytope::contains(const IntVec& v) const {
  for (size_t k = 0; k < normals.size(); ++k)
    if (dot(normals[k], v) + offsets[k] < 0) return false;
  return true;
}

IntVec Embedding::section(const IntVec& v) const {
  IntVec l;
  for (auto k : flat_to_normal) l.push_back(dot(normals[k], v) + offsets[k]);
  return l;
}

namespace {

LinearSystem polytope_system(const std::vector<IntVec>& normals, const IntVec& offsets, size_t r) {
  LinearSystem sys(r);
  for (size_t k = 0; k < normals.size(); ++k) sys.add_ge(to_rat(normals[k]), -Rat(static_cast<long>(offsets[k])));
  return sys;
}

bool saturated(const std::vector<IntVec>& normals, size_t r) {
  auto snf = smith_normal_form(to_int_mat(normals));
  for (size_t i = 0; i < r; ++i)
    if (i >= snf.D.size() || i >= snf.D[i].size() || snf.D[i][i] != 1) return false;
  return true;
}

// -floor(min v_i) over the polytope, found by doubling and bisection
long long lower_offset(const LinearSystem& base, size_t i, size_t r) {
  auto below = [&](long long t) {  // exists v in P with v_i <= t
    LinearSystem s = base;
    RatVec e(r, 0);
    e[i] = 1;
    s.add_le(e, Rat(static_cast<long>(t)));
    return feasible(s).has_value();
  };
  long long hi = 1;
  while (!below(hi)) hi *= 2;
  long long lo = -1;
  while (below(lo)) lo *= 2;
  // below(lo) false, below(hi) true
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    (below(mid) ? hi : lo) = mid;
  }
  // min v_i lies in (hi-1, hi]; floor(min) is hi when min == hi else hi-1
  return -(hi - 1);
}

}  // namespace

Embedding embed_polytope(const InequalityPolytope& p) {
  const size_t r = p.r;
  if (p.offsets.size() != p.normals.size()) throw DimensionError("embed_polytope: normals and offsets differ in length");
  for (const auto& u : p.normals)
    if (u.size() != r) throw DimensionError("embed_polytope: normal has wrong length");
  if (p.normals.empty() || rank(to_rat_mat(p.normals)) < r) throw NonSpanning("embed_polytope: normals do not span");
  {
    LinearSystem rec(r);
    RatVec sum(r, 0);
    for (const auto& u : p.normals) {
      rec.add_ge(to_rat(u), 0);
      for (size_t i = 0; i < r; ++i) sum[i] += static_cast<long>(u[i]);
    }
    rec.add_ge(sum, 1);
    if (feasible(rec)) throw Unbounded("embed_polytope: polytope is unbounded");
  }
  Embedding e;
  e.normals = p.normals;
  e.offsets = p.offsets;
  LinearSystem base = polytope_system(p.normals, p.offsets, r);
  bool nonempty = feasible(base).has_value();
  for (size_t i = 0; i < r && !saturated(e.normals, r); ++i) {
    IntVec ei(r, 0);
    ei[i] = 1;
    e.normals.push_back(ei);
    e.offsets.push_back(nonempty ? lower_offset(base, i, r) : 0);
  }
  const size_t N = e.normals.size();
  // U^T x = 0 for x in Z^N
  std::vector<IntVec> ut(r, IntVec(N));
  for (size_t k = 0; k < N; ++k)
    for (size_t i = 0; i < r; ++i) ut[i][k] = e.normals[k][i];
  auto ker = integer_kernel(ut, N);
  const size_t n = ker.size();
  std::vector<IntVec> beta(N, IntVec(n));
  for (size_t k = 0; k < N; ++k)
    for (size_t j = 0; j < n; ++j) beta[k][j] = ker[j][k];
  // group equal directions, keeping first-appearance order
  System s;
  s.n = n;
  std::vector<std::vector<size_t>> members;
  for (size_t k = 0; k < N; ++k) {
    auto it = std::find(s.vectors.begin(), s.vectors.end(), beta[k]);
    if (it == s.vectors.end()) {
      s.vectors.push_back(beta[k]);
      s.multiplicities.push_back(1);
      members.push_back({k});
    } else {
      size_t d = static_cast<size_t>(it - s.vectors.begin());
      ++s.multiplicities[d];
      members[d].push_back(k);
    }
  }
  for (const auto& m : members)
    for (auto k : m) e.flat_to_normal.push_back(k);
  e.a.assign(n, 0);
  for (size_t k = 0; k < N; ++k)
    for (size_t j = 0; j < n; ++j) e.a[j] += e.offsets[k] * beta[k][j];
  e.system = std::move(s);
  return e;
}

bool minkowski_sum_law_check(const System& s, const IntVec& a, const IntVec& b) {
  auto flat = s.flattened();
  const size_t N = flat.size(), n = s.n;
  IntVec ab(n);
  for (size_t i = 0; i < n; ++i) ab[i] = a[i] + b[i];
  std::set<RatVec> vertices;
  std::vector<size_t> idx(n);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == n) {
      RatMat m(n, RatVec(n));
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = static_cast<long>(flat[idx[j]][i]);
      auto inv = inverse(m);
      if (!inv) return;
      RatVec x = mul(*inv, to_rat(ab));
      for (const auto& xi : x)
        if (xi < 0) return;
      RatVec w(N, 0);
      for (size_t j = 0; j < n; ++j) w[idx[j]] = x[j];
      vertices.insert(w);
      return;
    }
    for (size_t k = start; k < N; ++k) {
      idx[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  for (const auto& w : vertices) {
    // exists p in Pi(a) with w - p >= 0
    LinearSystem sys(N);
    sys.nonneg.assign(N, true);
    for (size_t i = 0; i < n; ++i) {
      RatVec row(N);
      for (size_t k = 0; k < N; ++k) row[k] = static_cast<long>(flat[k][i]);
      sys.add_eq(row, Rat(static_cast<long>(a[i])));
    }
    for (size_t k = 0; k < N; ++k) {
      RatVec row(N, 0);
      row[k] = 1;
      sys.add_le(row, w[k]);
    }
    if (!feasible(sys)) return false;
  }
  return true;
}

}  // namespace vpart
