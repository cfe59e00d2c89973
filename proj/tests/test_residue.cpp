#include <random>

#include "doctest.h"
#include "support.hpp"
#include "vpart/linalg.hpp"
#include "vpart/residue.hpp"

using namespace vtest;

namespace {

std::vector<RatVec> qs(const std::vector<Pole>& ps) {
  std::vector<RatVec> out;
  for (const auto& p : ps) out.push_back(p.q);
  std::sort(out.begin(), out.end());
  return out;
}

Rat eval_forms(const Exponent& num, const std::vector<IntVec>& dens, const RatVec& z) {
  Rat v = 1;
  for (size_t i = 0; i < num.size(); ++i)
    for (int k = 0; k < num[i]; ++k) v *= z[i];
  for (const auto& d : dens) v /= dot(d, z);
  return v;
}

}  // namespace

TEST_CASE("poles of a basis") {
  Basis e = make_basis({{1, 0}, {0, 1}}, {0, 1});
  CHECK(qs(poles_of_basis(e, {0, 0})) == std::vector<RatVec>{{0, 0}});
  Basis b = make_basis({{1, 0}, {1, 2}}, {0, 1});
  CHECK(qs(poles_of_basis(b, {0, 0})) == std::vector<RatVec>{{0, 0}, {0, Rat(1, 2)}});
  Basis one = make_basis({{2}}, {0});
  CHECK(qs(poles_of_basis(one, {0})) == std::vector<RatVec>{{0}, {Rat(1, 2)}});
  // twisted: B q = -r mod Z^n
  auto tw = poles_of_basis(b, {Rat(1, 3), Rat(1, 5)});
  CHECK(tw.size() == 2);
  for (const auto& p : tw) {
    CHECK(frac(p.q[0] + Rat(1, 3)) == 0);
    CHECK(frac(p.q[0] + 2 * p.q[1] + Rat(1, 5)) == 0);
  }
}

TEST_CASE("pole counts equal volumes") {
  std::mt19937 rng(13);
  for (int it = 0; it < 30; ++it) {
    System s = random_system(rng);
    for (const auto& b : enumerate_bases(s)) {
      RatVec r(s.n);
      for (auto& x : r) x = make_rat(static_cast<long>(rng() % 7), 7);
      auto ps = poles_of_basis(b, r);
      CHECK(static_cast<long long>(ps.size()) == b.volume);
      std::set<RatVec> distinct;
      for (const auto& p : ps) distinct.insert(p.q);
      CHECK(distinct.size() == ps.size());
    }
  }
}

TEST_CASE("reduced pole sets") {
  Arrangement a(a2());
  for (const auto& c : a.chambers()) {
    auto ps = reduced_pole_set(a, c, zero(3));
    CHECK(qs(ps.poles) == std::vector<RatVec>{{0, 0}});
    CHECK(ps.M == 1);
  }
  Arrangement b(nonuni());
  auto p1 = reduced_pole_set(b, b.chamber("c1"), zero(3));
  CHECK(qs(p1.poles) == std::vector<RatVec>{{0, 0}, {0, Rat(1, 2)}});
  CHECK(p1.M == 2);
  auto p2 = reduced_pole_set(b, b.chamber("c2"), zero(3));
  CHECK(qs(p2.poles) == std::vector<RatVec>{{0, 0}});
  CHECK(p2.M == 1);
}

TEST_CASE("simple fraction decomposition examples") {
  HomogeneousPoly p = {{{2, 0}, Rat(3)}, {{1, 1}, Rat(-13, 12)}};
  auto d = simple_fraction_decompose(p, {{1, 0}, {0, 1}, {1, -1}, {1, -1}});
  CHECK(d.simple == SimpleFractionVector<Rat>{{{{0, 1}, {1, -1}}, Rat(3)}});
  REQUIRE(d.dropped.size() >= 1);
  Rat dropped_total = 0;
  for (const auto& x : d.dropped) {
    CHECK(x.denominators == std::vector<IntVec>{{1, -1}, {1, -1}});
    CHECK(x.numerator == Exponent{0, 0});
    dropped_total += x.coeff;
  }
  CHECK(dropped_total == Rat(23, 12));

  auto e = simple_fraction_decompose(HomogeneousPoly{{{0, 0}, Rat(1)}}, {{1, 0}, {0, 1}});
  CHECK(e.simple == SimpleFractionVector<Rat>{{{{0, 1}, {1, 0}}, Rat(1)}});

  // (l1 z1 + l2 z2)/(z1 z2 (z1+z2)) paired with c1 gives l2
  std::map<Exponent, SymPoly> v = {{{1, 0}, a(1)}, {{0, 1}, a(2)}};
  auto f = simple_fraction_decompose(v, {{1, 0}, {0, 1}, {1, 1}});
  Arrangement arr(a2());
  CHECK(jk(f.simple, arr.chamber("c1")) == a(2));
  CHECK(jk(f.simple, arr.chamber("c2")) == a(1));

  CHECK_THROWS_AS(simple_fraction_decompose(HomogeneousPoly{{{1, 0}, Rat(1)}}, {{1, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simple_fraction_decompose(HomogeneousPoly{{{0, 0}, Rat(1)}}, {{1, 0}, {2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("decomposition is exact on random instances") {
  std::mt19937 rng(17);
  int done = 0;
  while (done < 50) {
    size_t n = 1 + rng() % 3;
    size_t R = n + rng() % (7 - n);
    std::vector<IntVec> dens;
    for (size_t k = 0; k < R; ++k) {
      IntVec d(n);
      for (auto& x : d) x = static_cast<long long>(rng() % 5) - 2;
      if (std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; })) d[0] = 1;
      dens.push_back(d);
    }
    if (rank(to_rat_mat(dens)) < n) continue;
    const int deg = static_cast<int>(R - n);
    HomogeneousPoly P;
    for (int t = 0; t < 3; ++t) {
      Exponent e(n, 0);
      for (int j = 0; j < deg; ++j) ++e[rng() % n];
      P[e] += make_rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    }
    auto d = simple_fraction_decompose(P, dens);
    for (const auto& x : d.dropped) CHECK(rank(to_rat_mat(x.denominators)) < n);
    for (const auto& [sigma, c] : d.simple) CHECK(rank(to_rat_mat(sigma)) == n);
    int pts = 0;
    while (pts < 10) {
      RatVec z(n);
      for (auto& x : z) x = make_rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
      bool ok = true;
      for (const auto& den : dens) ok = ok && dot(den, z) != 0;
      if (!ok) continue;
      ++pts;
      Rat lhs = 0;
      for (const auto& [e, c] : P) lhs += c * eval_forms(e, dens, z);
      Rat rhs = 0;
      for (const auto& [sigma, c] : d.simple) rhs += c * eval_forms(Exponent(n, 0), sigma, z);
      for (const auto& x : d.dropped) rhs += x.coeff * eval_forms(x.numerator, x.denominators, z);
      CHECK(lhs == rhs);
    }
    ++done;
  }
}

TEST_CASE("simple fractions are fixed points") {
  auto d = simple_fraction_decompose(HomogeneousPoly{{{0, 0, 0}, Rat(1)}}, {{1, 1, 0}, {0, 1, 0}, {1, 0, 2}});
  REQUIRE(d.simple.size() == 1);
  CHECK(d.simple.begin()->second == 1);
  CHECK(d.dropped.empty());
}

TEST_CASE("jk pairing") {
  Arrangement a(a2());
  CHECK(jk(SimpleFractionVector<Rat>{{{{0, 1}, {1, 0}}, Rat(1)}}, a.chamber("c1")) == 1);
  CHECK(jk(SimpleFractionVector<Rat>{{{{0, 1}, {1, 1}}, Rat(1)}}, a.chamber("c1")) == 0);
  Arrangement b(nonuni());
  CHECK(jk(SimpleFractionVector<Rat>{{{{1, 0}, {1, 2}}, Rat(1)}}, b.chamber("c1")) == Rat(1, 2));
}

TEST_CASE("total residue of a one-dimensional power") {
  for (unsigned R = 1; R <= 4; ++R)
    for (long k = 0; k <= 6; ++k) {
      auto t = tres_at_pole_numeric(1, {{{1}, CycNumber(1), R}}, Pole{{0}}, {Rat(k)});
      REQUIRE(t.decomposition.simple.size() == 1);
      CHECK(t.decomposition.simple.begin()->second == CycNumber(binomial(Rat(k + static_cast<long>(R) - 1), R - 1)));
    }
}

TEST_CASE("tres example with a squared non-halfspace factor") {
  std::vector<PoleFactor> f = {{{1, 0}, CycNumber(1), 1}, {{0, 1}, CycNumber(1), 1}, {{1, -1}, CycNumber(1), 2}};
  auto t = tres_at_pole_numeric(2, f, Pole{{0, 0}}, {1, 0});
  CHECK(t.decomposition.simple == SimpleFractionVector<CycNumber>{{{{0, 1}, {1, -1}}, CycNumber(3)}});
}

TEST_CASE("non-spanning polar factors give zero") {
  // at q = (0,1/2) only e1 has zeta' = 1 for the non-unimodular system
  std::vector<PoleFactor> f = {{{1, 0}, CycNumber(1), 1}, {{0, 1}, CycNumber(1), 1}, {{1, 2}, CycNumber(1), 1}};
  CHECK(polar_factors(f, Pole{{Rat(1, 2), 0}}) == std::vector<size_t>{1});
  CHECK(tres_at_pole(2, f, Pole{{Rat(1, 2), 0}}).empty());
}

TEST_CASE("polar basis gives the product of the other factors") {
  std::mt19937 rng(19);
  for (int it = 0; it < 20; ++it) {
    // e1, e2 polar; two more factors with generic roots of unity
    std::vector<PoleFactor> f = {{{1, 0}, CycNumber(1), 1}, {{0, 1}, CycNumber(1), 1}};
    CycNumber want(1);
    for (int k = 0; k < 2; ++k) {
      long m = 2 + static_cast<long>(rng() % 6);
      CycNumber z = root_of_unity(1 + static_cast<long>(rng() % static_cast<unsigned>(m - 1)), m);
      IntVec beta = {1 + static_cast<long long>(rng() % 2), static_cast<long long>(rng() % 3)};
      f.push_back({beta, z, 1});
      want *= (CycNumber(1) - z).inv();
    }
    auto v = tres_at_pole(2, f, Pole{{0, 0}});
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first == FormSet{{0, 1}, {1, 0}});
    CHECK(v.begin()->second == SymPoly(want));
  }
}
