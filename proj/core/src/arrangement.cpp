#include "vpart/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "vpart/linalg.hpp"
#include "vpart/lp.hpp"

namespace vpart {

namespace {

// all k-subsets of {0..m-1} in lexicographic order
std::vector<std::vector<size_t>> subsets(size_t m, size_t k) {
  std::vector<std::vector<size_t>> out;
  if (k > m) return out;
  std::vector<size_t> cur(k);
  for (size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Rat dot_iv(const IntVec& w, const RatVec& p) { return dot(w, p); }

RatVec integer_scaled(const RatVec& p) {
  Int l = lcm_den(p);
  RatVec q(p.size());
  Int g = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    q[i] = p[i] * l;
    Int num = q[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g != 0)
    for (auto& x : q) x /= g;
  return q;
}

std::optional<RatVec> strict_cone_point(const std::vector<IntVec>& normals, size_t n) {
  LinearSystem sys(n);
  for (const auto& w : normals) sys.add_ge(to_rat(w), 0, true);
  return feasible(sys);
}

}  // namespace

System::System(size_t dim, std::vector<IntVec> vecs, std::vector<int> mult)
    : n(dim), vectors(std::move(vecs)), multiplicities(std::move(mult)) {
  if (multiplicities.empty()) multiplicities.assign(vectors.size(), 1);
}

size_t System::N() const {
  size_t s = 0;
  for (int m : multiplicities) s += static_cast<size_t>(m);
  return s;
}

std::vector<IntVec> System::flattened() const {
  std::vector<IntVec> out;
  for (size_t i = 0; i < vectors.size(); ++i)
    for (int k = 0; k < multiplicities[i]; ++k) out.push_back(vectors[i]);
  return out;
}

std::vector<size_t> System::flat_to_direction() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < vectors.size(); ++i)
    for (int k = 0; k < multiplicities[i]; ++k) out.push_back(i);
  return out;
}

System System::scaled(int k) const {
  System r = *this;
  for (auto& m : r.multiplicities) m *= k;
  return r;
}

bool Basis::contains_strictly(const RatVec& p) const {
  for (const auto& row : coords)
    if (dot(row, p) <= 0) return false;
  return true;
}

bool Basis::contains(const RatVec& p) const {
  for (const auto& row : coords)
    if (dot(row, p) < 0) return false;
  return true;
}

bool Chamber::contains_strictly(const RatVec& p) const {
  for (const auto& [w, strict] : inequalities) {
    Rat v = dot_iv(w, p);
    if (strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

bool Chamber::closure_contains(const RatVec& p) const {
  for (const auto& [w, strict] : inequalities)
    if (dot_iv(w, p) < 0) return false;
  return true;
}

IntVec validate_system(const System& s) {
  using K = SystemError::Kind;
  if (s.n == 0) throw SystemError(K::Malformed, "dimension must be positive");
  if (s.vectors.empty()) throw SystemError(K::Malformed, "system has no vectors");
  if (s.multiplicities.size() != s.vectors.size())
    throw SystemError(K::Malformed, "multiplicities and vectors differ in length");
  std::set<IntVec> seen;
  for (size_t i = 0; i < s.vectors.size(); ++i) {
    const auto& v = s.vectors[i];
    if (v.size() != s.n) throw SystemError(K::Malformed, "vector " + std::to_string(i) + " has wrong length");
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
      throw SystemError(K::Malformed, "zero vector at index " + std::to_string(i));
    if (!seen.insert(v).second) throw SystemError(K::Malformed, "repeated direction " + to_string(v));
    if (s.multiplicities[i] < 1) throw SystemError(K::Malformed, "multiplicities must be positive");
  }
  if (rank(to_rat_mat(s.vectors)) < s.n) throw SystemError(K::NotSpanning, "vectors do not span");
  LinearSystem sys(s.n);
  for (const auto& v : s.vectors) sys.add_ge(to_rat(v), 1);
  auto v = feasible(sys);
  if (!v) throw SystemError(K::NoHalfspace, "vectors do not lie in an open halfspace");
  RatVec w = integer_scaled(*v);
  IntVec out(s.n);
  for (size_t i = 0; i < s.n; ++i) out[i] = to_ll(w[i].get_num());
  return out;
}

Basis make_basis(const std::vector<IntVec>& forms, std::vector<size_t> indices) {
  Basis b;
  b.indices = std::move(indices);
  for (auto i : b.indices) b.rows.push_back(forms[i]);
  RatMat m = to_rat_mat(b.rows);
  Rat d = det(m);
  if (d == 0) throw std::invalid_argument("make_basis: dependent forms");
  b.volume = to_ll(Rat(abs(d)).get_num());
  // p = B^T x  =>  x = (B^T)^{-1} p
  b.coords = *inverse(transpose(m));
  return b;
}

std::vector<Basis> enumerate_bases(const System& s) {
  std::vector<Basis> out;
  for (auto& sub : subsets(s.vectors.size(), s.n)) {
    std::vector<IntVec> rows;
    for (auto i : sub) rows.push_back(s.vectors[i]);
    if (det(to_rat_mat(rows)) != 0) out.push_back(make_basis(s.vectors, sub));
  }
  return out;
}

std::vector<IntVec> prune_cone_inequalities(std::vector<IntVec> normals) {
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  if (normals.empty()) return normals;
  const size_t n = normals[0].size();
  for (size_t i = 0; i < normals.size();) {
    LinearSystem sys(n);
    for (size_t j = 0; j < normals.size(); ++j)
      if (j != i) sys.add_ge(to_rat(normals[j]), 0);
    sys.add_le(to_rat(normals[i]), -1);
    if (!feasible(sys))
      normals.erase(normals.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return normals;
}

Arrangement::Arrangement(System s) : s_(std::move(s)) {
  witness_ = validate_system(s_);
  bases_ = enumerate_bases(s_);
  const size_t n = s_.n;

  if (n == 1) {
    facets_.push_back({witness_[0] > 0 ? 1 : -1});
  } else {
    std::set<IntVec> walls;
    for (auto& sub : subsets(s_.vectors.size(), n - 1)) {
      RatMat m;
      for (auto i : sub) m.push_back(to_rat(s_.vectors[i]));
      if (rank(m) < n - 1) continue;
      auto ker = kernel(m, n);
      walls.insert(canonical_normal(ker.at(0)));
    }
    walls_.assign(walls.begin(), walls.end());
    for (const auto& w : walls_) {
      bool pos = true, neg = true;
      for (const auto& v : s_.vectors) {
        long long d = dot(w, v);
        if (d < 0) pos = false;
        if (d > 0) neg = false;
      }
      if (pos) facets_.push_back(w);
      if (neg) {
        IntVec m = w;
        for (auto& x : m) x = -x;
        facets_.push_back(m);
      }
    }
  }

  // split the cone by every interior wall hyperplane
  struct Cell {
    std::vector<IntVec> ineq;
    RatVec point;
  };
  std::vector<Cell> cells;
  {
    auto p = strict_cone_point(facets_, n);
    if (!p) throw std::logic_error("cone of a valid system has empty interior");
    cells.push_back({facets_, *p});
  }
  for (const auto& w : walls_) {
    bool is_facet = false;
    for (const auto& f : facets_) {
      IntVec m = w;
      for (auto& x : m) x = -x;
      if (f == w || f == m) is_facet = true;
    }
    if (is_facet) continue;
    IntVec mw = w;
    for (auto& x : mw) x = -x;
    std::vector<Cell> next;
    for (auto& c : cells) {
      Rat side = dot(w, c.point);
      for (const IntVec* o : std::array<const IntVec*, 2>{&w, &mw}) {
        bool known = (o == &w) ? side > 0 : side < 0;
        Cell child{c.ineq, c.point};
        child.ineq.push_back(*o);
        if (!known) {
          auto p = strict_cone_point(child.ineq, n);
          if (!p) continue;
          child.point = *p;
        }
        next.push_back(std::move(child));
      }
    }
    cells = std::move(next);
  }

  std::map<std::vector<std::vector<size_t>>, RatVec> by_bases;
  for (const auto& c : cells) {
    std::vector<std::vector<size_t>> key;
    for (const auto& b : bases_)
      if (b.contains_strictly(c.point)) key.push_back(b.indices);
    by_bases.emplace(key, integer_scaled(c.point));
  }
  int id = 0;
  for (const auto& [key, point] : by_bases) {
    Chamber ch;
    ch.id = "c" + std::to_string(++id);
    ch.interior_point = point;
    std::vector<IntVec> normals;
    for (const auto& b : bases_) {
      if (!std::binary_search(key.begin(), key.end(), b.indices)) continue;
      ch.bases.push_back(b);
      for (const auto& row : b.coords) {
        IntVec w = canonical_normal(row);
        // canonical_normal fixes the sign; restore the orientation of row
        if (dot(w, point) < 0)
          for (auto& x : w) x = -x;
        normals.push_back(w);
      }
    }
    for (auto& w : prune_cone_inequalities(normals)) ch.inequalities.emplace_back(w, true);
    chambers_.push_back(std::move(ch));
  }
}

const Chamber& Arrangement::chamber(const std::string& id) const {
  int i = chamber_index(id);
  if (i < 0) throw std::out_of_range("unknown chamber " + id);
  return chambers_[static_cast<size_t>(i)];
}

int Arrangement::chamber_index(const std::string& id) const {
  for (size_t i = 0; i < chambers_.size(); ++i)
    if (chambers_[i].id == id) return static_cast<int>(i);
  return -1;
}

bool Arrangement::in_cone(const RatVec& p) const {
  for (const auto& f : facets_)
    if (dot(f, p) < 0) return false;
  return true;
}

Location Arrangement::locate(const RatVec& p) const {
  Location loc;
  if (p.size() != s_.n) throw DimensionError("locate: point has wrong length");
  if (!in_cone(p)) return loc;
  for (size_t i = 0; i < chambers_.size(); ++i)
    if (chambers_[i].contains_strictly(p)) {
      loc.kind = Location::Kind::Interior;
      loc.chamber = static_cast<int>(i);
      return loc;
    }
  loc.kind = Location::Kind::OnWall;
  for (size_t i = 0; i < chambers_.size(); ++i)
    if (chambers_[i].closure_contains(p)) {
      loc.chamber = static_cast<int>(i);
      break;
    }
  return loc;
}

bool Arrangement::in_validity_region(const Chamber& c, const std::vector<int>& scale, const IntVec& lambda) const {
  const RatVec lam = to_rat(lambda);
  if (c.contains_strictly(lam)) return true;
  const size_t d = s_.vectors.size();
  if (scale.size() != d) throw DimensionError("in_validity_region: scale must be indexed by direction");
  // quick necessary condition per inequality
  for (const auto& [w, strict] : c.inequalities) {
    Rat best = dot(w, lam);
    for (size_t j = 0; j < d; ++j) {
      long long v = dot(w, s_.vectors[j]) * scale[j];
      if (v > 0) best += static_cast<long>(v);
    }
    if (best <= 0) return false;
  }
  LinearSystem sys(d);
  sys.nonneg.assign(d, true);
  for (size_t j = 0; j < d; ++j) {
    RatVec e(d, 0);
    e[j] = 1;
    sys.add_le(e, 1);
  }
  for (const auto& [w, strict] : c.inequalities) {
    RatVec a(d);
    for (size_t j = 0; j < d; ++j) a[j] = Rat(static_cast<long>(dot(w, s_.vectors[j]) * scale[j]));
    sys.add_ge(a, -dot(w, lam), true);
  }
  return feasible(sys).has_value();
}

std::vector<Chamber> enumerate_chambers(const System& s) { return Arrangement(s).chambers(); }

Location chamber_of(const System& s, const RatVec& point) { return Arrangement(s).locate(point); }

bool in_validity_region(const System& s, const Chamber& c, const std::vector<int>& h, const IntVec& lambda) {
  return Arrangement(s).in_validity_region(c, h, lambda);
}

}  // namespace vpart
