#include <random>

#include "doctest.h"
#include "vpart/series.hpp"

using namespace vpart;

namespace {

using RS = TruncSeries<Rat>;

RS univariate(const std::vector<Rat>& c, int D) {
  RS s(1, D);
  for (size_t k = 0; k < c.size(); ++k) s.set({static_cast<int>(k)}, c[k]);
  return s;
}

RS random_series(std::mt19937& rng, size_t n, int D) {
  RS s(n, D);
  for (int k = 0; k < 6; ++k) {
    Exponent e(n, 0);
    for (auto& x : e) x = static_cast<int>(rng() % 3);
    s.add_to(e, make_rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
  }
  return s;
}

}  // namespace

TEST_CASE("inverse of 1 - t") {
  RS inv = univariate({1, -1}, 3).inverse();
  CHECK(inv.terms() == univariate({1, 1, 1, 1}, 3).terms());
  CHECK_THROWS_AS(univariate({0, 1}, 3).inverse(), std::domain_error);
}

TEST_CASE("Todd series") {
  // (1 - e^{-t})/t = sum (-1)^k t^k / (k+1)!
  std::vector<Rat> c;
  Rat f = 1;
  for (int k = 0; k <= 4; ++k) {
    f *= k + 1;
    c.push_back(Rat(k % 2 ? -1 : 1) / f);
  }
  RS todd = univariate(c, 4).inverse();
  CHECK(todd.terms() == univariate({1, Rat(1, 2), Rat(1, 12), 0, Rat(-1, 720)}, 4).terms());
  CHECK(todd_coefficients(4) == std::vector<Rat>{1, Rat(1, 2), Rat(1, 12), 0, Rat(-1, 720)});
}

TEST_CASE("ring axioms and inverses") {
  std::mt19937 rng(11);
  for (int it = 0; it < 100; ++it) {
    size_t n = 1 + rng() % 3;
    int D = static_cast<int>(rng() % 5);
    RS a = random_series(rng, n, D), b = random_series(rng, n, D), c = random_series(rng, n, D);
    CHECK(((a * b) * c).terms() == (a * (b * c)).terms());
    CHECK((a * (b + c)).terms() == (a * b + a * c).terms());
    CHECK((a * b).terms() == (b * a).terms());
    a.set(Exponent(n, 0), Rat(1 + static_cast<long>(rng() % 3)));
    CHECK((a * a.inverse()).terms() == RS::one(n, D).terms());
  }
}

TEST_CASE("expand_factor") {
  auto f = expand_factor({1, 0}, CycNumber(1), 1, 2);
  CHECK(f.coeff({0, 0}) == CycNumber(1));
  CHECK(f.coeff({1, 0}) == CycNumber(Rat(1, 2)));
  CHECK(f.coeff({2, 0}) == CycNumber(Rat(1, 12)));
  CHECK(f.terms().size() == 3);
  auto g = expand_factor({1, 0}, CycNumber(-1), 1, 0);
  CHECK(g.terms().size() == 1);
  CHECK(g.coeff({0, 0}) == CycNumber(Rat(1, 2)));
  auto h = expand_factor({1, 1}, CycNumber(1), 1, 1);
  CHECK(h.coeff({1, 0}) == CycNumber(Rat(1, 2)));
  CHECK(h.coeff({0, 1}) == CycNumber(Rat(1, 2)));
}

TEST_CASE("expand_factor inverts the Todd denominator") {
  const int D = 5;
  for (unsigned hh = 1; hh <= 3; ++hh) {
    IntVec beta = {1, -2};
    auto t = expand_factor(beta, CycNumber(1), hh, D);
    // (1 - e^{-b})/b = sum (-1)^k b^k/(k+1)!
    std::vector<CycNumber> c;
    Rat f = 1;
    for (int k = 0; k <= D; ++k) {
      f *= k + 1;
      c.push_back(CycNumber(Rat(k % 2 ? -1 : 1) / f));
    }
    auto den = compose_linear(c, beta, D).pow(hh);
    CHECK((t * den).terms() == TruncSeries<CycNumber>::one(2, D).terms());
  }
  // (1 - zeta e^{-z})^{-2} times its square base is 1
  CycNumber z = root_of_unity(1, 3);
  auto g = expand_factor({1}, z, 2, 4);
  std::vector<CycNumber> e;
  Rat f = 1;
  for (int k = 0; k <= 4; ++k) {
    if (k) f *= k;
    e.push_back(CycNumber(Rat(k % 2 ? -1 : 1) / f) * z * CycNumber(-1) + (k == 0 ? CycNumber(1) : CycNumber(0L)));
  }
  auto base = compose_linear(e, {1}, 4);
  CHECK((g * base * base).terms() == TruncSeries<CycNumber>::one(1, 4).terms());
}

TEST_CASE("symbolic exponential") {
  auto e0 = exp_symbolic(2, 0);
  CHECK(e0.terms().size() == 1);
  auto e1 = exp_symbolic(2, 1);
  CHECK(e1.coeff({1, 0}) == SymPoly::var(0, 2));
  CHECK(e1.coeff({0, 1}) == SymPoly::var(1, 2));
  auto e2 = exp_symbolic(2, 2);
  CHECK(e2.coeff({1, 1}) == SymPoly::var(0, 2) * SymPoly::var(1, 2));
  CHECK(e2.coeff({2, 0}) == SymPoly::var(0, 2) * SymPoly::var(0, 2) * CycNumber(Rat(1, 2)));
  // numeric lambda reproduces exp(3 z1 - z2) termwise
  auto e4 = exp_symbolic(2, 4);
  std::vector<Rat> ex;
  Rat f = 1;
  for (int k = 0; k <= 4; ++k) {
    if (k) f *= k;
    ex.push_back(Rat(1) / f);
  }
  auto num = compose_linear(ex, {3, -1}, 4);
  for (const auto& [e, c] : num.terms()) CHECK(e4.coeff(e).eval(IntVec{3, -1}) == CycNumber(c));
}

TEST_CASE("homogeneous parts") {
  RS s = univariate({1, 1, 1}, 2);
  CHECK(s.homogeneous_part(1) == RS::Terms{{{1}, Rat(1)}});
  CHECK(s.homogeneous_part(0) == RS::Terms{{{0}, Rat(1)}});
  CHECK_THROWS_AS(s.homogeneous_part(3), std::out_of_range);
  // e^{z1} and the Todd factors of z1, z2, (z1 - z2)^2
  const int D = 2;
  TruncSeries<CycNumber> p = TruncSeries<CycNumber>::one(2, D);
  std::vector<CycNumber> ex = {CycNumber(1), CycNumber(1), CycNumber(Rat(1, 2))};
  p = p * compose_linear(ex, {1, 0}, D);
  p = p * expand_factor({1, 0}, CycNumber(1), 1, D);
  p = p * expand_factor({0, 1}, CycNumber(1), 1, D);
  p = p * expand_factor({1, -1}, CycNumber(1), 2, D);
  std::map<Exponent, CycNumber> want = {{{2, 0}, CycNumber(3)}, {{1, 1}, CycNumber(Rat(-13, 12))}};
  CHECK(p.homogeneous_part(2) == want);
}
