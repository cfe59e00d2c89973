// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "vpart/linalg.hpp"
#include "vpart/oracle.hpp"
#include "vpart/parallel.hpp"
#include "vpart/residue.hpp"
#include "vpart/separation.hpp"

using namespace vpart;
using namespace vtest;

std::string system_summary(const System& s);

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const SymPoly& only_pole_zero(const QuasiPolynomial& qp, const std::string& what) {
  expect(qp.terms.size() == 1 && qp.terms[0].q == zero(qp.n), what + ": expected the single pole 0");
  return qp.terms[0].poly;
}

std::string show(const SymPoly& p) { return p.str(); }

// ---------------------------------------------------------------- 1
void goldens_a2() {
  SymPoly a1 = a(1), a2v = a(2);
  struct G {
    int h;
    std::string chamber;
    SymPoly expected;
  };
  std::vector<G> gs = {
      {1, "c1", a2v + SymPoly(1)},
      {1, "c2", a1 + SymPoly(1)},
      {2, "c1", binom(a2v, 3, 3) * P("2*a1-a2+2") * CycNumber(Rat(1, 2))},
      {2, "c2", binom(a1, 3, 3) * P("2*a2-a1+2") * CycNumber(Rat(1, 2))},
      {3, "c1", binom(a2v, 5, 5) * P("7*a1^2-7*a1*a2+2*a2^2+21*a1-9*a2+14") * CycNumber(Rat(1, 14))},
      // mirror image of c1 under a1 <-> a2
      {3, "c2", binom(a1, 5, 5) * P("2*a1^2-7*a1*a2+7*a2^2-9*a1+21*a2+14") * CycNumber(Rat(1, 14))},
  };
  for (const auto& g : gs) {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement arr(a2(g.h));
    QuasiPolynomial qp = partition_quasipoly(arr, arr.chamber(g.chamber));
    double dt = seconds_since(t0);
    std::string tag = "A2 h=" + std::to_string(g.h) + " " + g.chamber;
    const SymPoly& got = only_pole_zero(qp, tag);
    expect(got == g.expected, tag + ": got " + show(got) + ", expected " + show(g.expected));
    expect(dt < 10.0, tag + ": took " + std::to_string(dt) + " s");
  }
}

// ---------------------------------------------------------------- 2
struct NonuniGolden {
  SymPoly even, odd, c2;
};

NonuniGolden nonuni_golden(int h) {
  SymPoly a1 = a(1), a2v = a(2);
  auto lin = [](const std::string& s) { return P(s); };
  if (h == 1) return {P("1/2*a2+1"), P("1/2*a2+1/2"), P("a1+1")};
  if (h == 2)
    return {lin("a2+2") * lin("a2+4") * P("4*a1*a2-a2^2+12*a1+2*a2+12") * CycNumber(Rat(1, 96)),
            lin("a2+1") * lin("a2+3") * lin("a2+5") * P("4*a1-a2+5") * CycNumber(Rat(1, 96)),
            lin("a1+1") * lin("a1+2") * lin("a1+3") * P("a1-a2-1") * CycNumber(Rat(-1, 6))};
  return {lin("a2+2") * lin("a2+4") * lin("a2+6") * lin("a2+8") *
              P("28*a1^2*a2-14*a1*a2^2+2*a2^3+70*a1^2+70*a1*a2-19*a2^2+210*a1+44*a2+140") * CycNumber(Rat(1, 53760)),
          lin("a2+1") * lin("a2+3") * lin("a2+5") * lin("a2+7") *
              P("28*a1^2*a2-14*a1*a2^2+2*a2^3+182*a1^2+14*a1*a2-11*a2^2+630*a1-52*a2+481") * CycNumber(Rat(1, 53760)),
          binom(a1, 5, 5) * P("8*a1^2-14*a1*a2+7*a2^2-15*a1+21*a2+14") * CycNumber(Rat(1, 14))};
}

void goldens_nonuni() {
  for (int h = 1; h <= 3; ++h) {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement arr(nonuni(h));
    QuasiPolynomial q1 = partition_quasipoly(arr, arr.chamber("c1"));
    QuasiPolynomial q2 = partition_quasipoly(arr, arr.chamber("c2"));
    double dt = seconds_since(t0);
    std::string tag = "non-unimodular h=" + std::to_string(h);
    expect(q1.terms.size() == 2 && q1.terms[0].q == qv({0, 0}) && q1.terms[1].q == qv({0, Rat(1, 2)}),
           tag + " c1: pole set is not {(0,0),(0,1/2)}");
    const SymPoly& p = q1.terms[0].poly;
    const SymPoly& q = q1.terms[1].poly;
    NonuniGolden g = nonuni_golden(h);
    expect(p + q == g.even, tag + " c1 even: got " + show(p + q));
    expect(p - q == g.odd, tag + " c1 odd: got " + show(p - q));
    expect(only_pole_zero(q2, tag + " c2") == g.c2, tag + " c2: got " + show(q2.terms[0].poly));
    if (h == 1) {
      expect(p == P("1/2*a2+3/4") && q == P("1/4"), tag + ": expected a2/2 + 3/4 + e^{i pi a2}/4");
    }
    if (h == 3) {
      expect(p.total_degree() == 7 && q.total_degree() < 7, tag + ": expected a degree-7 principal term");
    }
    expect(dt < 10.0, tag + ": took " + std::to_string(dt) + " s");
  }
}

// ---------------------------------------------------------------- 3
// 20 lattice points on {x : <w,x> = s}
std::vector<IntVec> line_points(const IntVec& w, long long s) {
  std::vector<IntVec> out;
  if (w[1] == 0) {
    for (long long t = -10; t < 10; ++t) out.push_back({s / w[0], t});
  } else if (w[0] == 0) {
    for (long long t = -10; t < 10; ++t) out.push_back({t, s / w[1]});
  } else {
    // w = (c, -1): a2 = c a1 - s
    for (long long t = -10; t < 10; ++t) out.push_back({t, w[0] * t - s});
  }
  return out;
}

void vanish_on(const std::function<CycNumber(const IntVec&)>& f, const IntVec& w, long long s,
               const std::string& tag) {
  for (const auto& p : line_points(w, s)) {
    CycNumber v = f(p);
    expect(v.is_zero(), tag + ": nonzero value " + v.str() + " at " + to_string(p));
  }
}

void vanishing() {
  for (int h = 1; h <= 3; ++h) {
    Arrangement arr(a2(h));
    auto q1 = partition_quasipoly(arr, arr.chamber("c1"));
    auto q2 = partition_quasipoly(arr, arr.chamber("c2"));
    std::string tag = "A2 h=" + std::to_string(h);
    for (int j = 1; j <= 2 * h - 1; ++j) {
      vanish_on([&](const IntVec& l) { return q1.value(l); }, {0, 1}, -j, tag + " c1 on a2=" + std::to_string(-j));
      vanish_on([&](const IntVec& l) { return q2.value(l); }, {1, 0}, -j, tag + " c2 on a1=" + std::to_string(-j));
    }
    for (int k = -(h - 1); k <= h - 1; ++k)
      vanish_on([&](const IntVec& l) { return q1.value(l) - q2.value(l); }, {1, -1}, k,
                tag + " c1-c2 on a1-a2=" + std::to_string(k));
  }
  {
    SymPoly d2 = binom(a(1) - a(2), 1, 3) * P("a1+a2+4") * CycNumber(Rat(1, 2));
    Arrangement arr(a2(2));
    SymPoly got = partition_quasipoly(arr, arr.chamber("c1")).terms[0].poly -
                  partition_quasipoly(arr, arr.chamber("c2")).terms[0].poly;
    expect(got == d2, "A2 h=2 difference formula");
    SymPoly d3 = binom(a(1) - a(2), 2, 5) * P("2*a1^2+3*a1*a2+2*a2^2+21*a1+21*a2+59") * CycNumber(Rat(-1, 14));
    Arrangement arr3(a2(3));
    got = partition_quasipoly(arr3, arr3.chamber("c1")).terms[0].poly -
          partition_quasipoly(arr3, arr3.chamber("c2")).terms[0].poly;
    expect(got == d3, "A2 h=3 difference formula");
  }
  for (int h = 1; h <= 3; ++h) {
    Arrangement arr(nonuni(h));
    auto q1 = partition_quasipoly(arr, arr.chamber("c1"));
    auto q2 = partition_quasipoly(arr, arr.chamber("c2"));
    std::string tag = "non-unimodular h=" + std::to_string(h);
    for (int j = 1; j <= 3 * h - 1; ++j)
      vanish_on([&](const IntVec& l) { return q1.value(l); }, {0, 1}, -j, tag + " c1 on a2=" + std::to_string(-j));
    for (int j = 1; j <= 2 * h - 1; ++j)
      vanish_on([&](const IntVec& l) { return q2.value(l); }, {1, 0}, -j, tag + " c2 on a1=" + std::to_string(-j));
    // 2 a1 - a2 + k = 0 for -(h-1) <= k <= 2h-1
    for (int k = -(h - 1); k <= 2 * h - 1; ++k)
      vanish_on([&](const IntVec& l) { return q1.value(l) - q2.value(l); }, {2, -1}, -k,
                tag + " c1-c2 on 2a1-a2=" + std::to_string(-k));
  }
  // even/odd parts minus the other chamber
  std::vector<std::pair<SymPoly, SymPoly>> diffs = {
      {P("1/2*a2-a1"), P("-a1+1/2*a2-1/2")},
      {P("2*a1-a2") * P("2*a1-a2+2") * P("4*a1^2-a2^2+16*a1-6*a2+4") * CycNumber(Rat(1, 96)),
       P("2*a1-a2-1") * P("2*a1-a2+1") * P("2*a1-a2+3") * P("2*a1+a2+7") * CycNumber(Rat(1, 96))},
      {P("2*a1-a2-2") * P("2*a1-a2") * P("2*a1-a2+2") * P("2*a1-a2+4") *
           P("16*a1^3+4*a1^2*a2-2*a1*a2^2-2*a2^3+178*a1^2+18*a1*a2-29*a2^2+598*a1-68*a2+484") *
           CycNumber(Rat(-1, 53760)),
       P("2*a1-a2-1") * P("2*a1-a2+1") * P("2*a1-a2+3") * P("2*a1-a2+5") *
           P("16*a1^3+4*a1^2*a2-2*a1*a2^2-2*a2^3+146*a1^2-6*a1*a2-37*a2^2+298*a1-212*a2-217") *
           CycNumber(Rat(-1, 53760))}};
  for (int h = 1; h <= 3; ++h) {
    NonuniGolden g = nonuni_golden(h);
    expect(g.even - g.c2 == diffs[h - 1].first, "non-unimodular h=" + std::to_string(h) + " even difference");
    expect(g.odd - g.c2 == diffs[h - 1].second, "non-unimodular h=" + std::to_string(h) + " odd difference");
  }
}

// ---------------------------------------------------------------- 4
void oracle_sweep() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<System> systems;
  for (int h = 1; h <= 3; ++h) {
    systems.push_back(a2(h));
    systems.push_back(nonuni(h));
  }
  std::mt19937 rng(20240601);
  for (int i = 0; i < 5; ++i) systems.push_back(random_system(rng));
  size_t checked = 0;
  for (const auto& s : systems) {
    Arrangement arr(s);
    auto grid = box(s.n, -8, 8);
    std::vector<Int> counts(grid.size());
    std::vector<char> needed(grid.size(), 0);
    std::vector<QuasiPolynomial> qps;
    for (const auto& c : arr.chambers()) qps.push_back(partition_quasipoly(arr, c));
    std::vector<std::string> errors(grid.size());
    std::vector<size_t> used(grid.size(), 0);
    parallel_for(grid.size(), [&](size_t k) {
      bool counted = false;
      Int want;
      for (size_t ci = 0; ci < qps.size(); ++ci) {
        if (!arr.in_validity_region(arr.chambers()[ci], grid[k])) continue;
        if (!counted) {
          want = count_points(s, grid[k]);
          counted = true;
        }
        ++used[k];
        Rat got = qps[ci].evaluate(grid[k]);
        if (got != Rat(want) && errors[k].empty())
          errors[k] = "system " + system_summary(s) + " chamber " + qps[ci].chamber + " lambda " + to_string(grid[k]) +
                      ": formula " + to_string(got) + ", count " + want.get_str();
      }
    });
    for (size_t k = 0; k < grid.size(); ++k) {
      expect(errors[k].empty(), errors[k]);
      checked += used[k];
    }
  }
  double dt = seconds_since(t0);
  expect(checked > 0, "no points checked");
  expect(dt < 300.0, "sweep took " + std::to_string(dt) + " s");
  std::cout << "  (" << checked << " chamber/point pairs on " << systems.size() << " systems, " << dt << " s)\n";
}

// ---------------------------------------------------------------- 5
void one_dim_residues() {
  for (int R = 1; R <= 4; ++R) {
    Arrangement arr(System(1, {{1}}, {R}));
    auto qp = partition_quasipoly(arr, arr.chambers()[0]);
    auto em = euler_maclaurin_quasipoly(arr, arr.chambers()[0], std::vector<int>(static_cast<size_t>(R), 1), {});
    for (long long k = 0; k <= 6; ++k) {
      Rat want = binomial(Rat(static_cast<long>(k + R - 1)), static_cast<unsigned>(R - 1));
      expect(qp.evaluate({k}) == want && em.evaluate({k}) == want,
             "c(" + std::to_string(k) + "," + std::to_string(R) + ") = " + to_string(want));
      // single factor with exponent R through the residue of e^{kz}/(1-e^{-z})^R
      auto v = tres_at_pole_numeric(1, {{{1}, CycNumber(1), static_cast<unsigned>(R)}}, Pole{{0}}, {Rat(static_cast<long>(k))});
      Rat via_jk = 0;
      for (const auto& [sigma, c] : v.decomposition.simple) via_jk += c.rational() / static_cast<long>(std::llabs(sigma[0][0]));
      expect(via_jk == want, "residue of e^{kz}/(1-e^{-z})^R at k=" + std::to_string(k));
    }
  }
}

// ---------------------------------------------------------------- 6
void tres_example() {
  std::vector<PoleFactor> f = {{{1, 0}, CycNumber(1), 1}, {{0, 1}, CycNumber(1), 1}, {{1, -1}, CycNumber(1), 2}};
  NumericTres t = tres_at_pole_numeric(2, f, Pole{{0, 0}}, {1, 0});
  std::map<Exponent, CycNumber> expected_num = {{{2, 0}, CycNumber(3)}, {{1, 1}, CycNumber(Rat(-13, 12))}};
  expect(t.numerator == expected_num, "numerator slice is not 3 z1^2 - 13/12 z1 z2");
  if (t.decomposition.simple.size() != 1) {
    std::string got;
    for (const auto& [sg, cc] : t.decomposition.simple) got += " " + to_string(sg[0]) + to_string(sg[1]) + ":" + cc.str();
    throw Failure("expected exactly one simple fraction, got" + got);
  }
  const auto& [sigma, c] = *t.decomposition.simple.begin();
  expect(sigma == FormSet{{0, 1}, {1, -1}} && c == CycNumber(3), "Tres is not 3/(z2 (z1 - z2))");
  bool dropped_square = false;
  for (const auto& d : t.decomposition.dropped) {
    expect(rank(to_rat_mat(d.denominators)) < 2, "a dropped fraction has spanning denominators");
    if (d.denominators == std::vector<IntVec>{{1, -1}, {1, -1}}) dropped_square = true;
  }
  expect(dropped_square, "the (z1 - z2)^-2 term was not dropped");
  // exactness of the rewriting at a rational point
  RatVec z = {Rat(3, 7), Rat(-5, 11)};
  auto ev = [&](const IntVec& form) { return dot(form, z); };
  Rat lhs = 3 * z[0] * z[0] - Rat(13, 12) * z[0] * z[1];
  lhs /= ev({1, 0}) * ev({0, 1}) * ev({1, -1}) * ev({1, -1});
  Rat rhs = c.rational() / (ev(sigma[0]) * ev(sigma[1]));
  for (const auto& d : t.decomposition.dropped) {
    Rat term = d.coeff.rational();
    for (size_t i = 0; i < 2; ++i)
      for (int k = 0; k < d.numerator[i]; ++k) term *= z[i];
    for (const auto& den : d.denominators) term /= ev(den);
    rhs += term;
  }
  expect(lhs == rhs, "simple plus dropped fractions do not sum to the input");
}

// ---------------------------------------------------------------- 7
MeroFunction random_mero(std::mt19937& rng, size_t n) {
  static const std::vector<IntVec> forms2 = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}};
  static const std::vector<IntVec> forms1 = {{1}, {2}, {3}};
  const auto& forms = n == 1 ? forms1 : forms2;
  for (;;) {
    MeroFunction f;
    f.n = n;
    size_t R = 2 + rng() % 3;
    for (size_t k = 0; k < R; ++k) {
      long m = 1 + static_cast<long>(rng() % 6);
      f.factors.push_back({make_rat(static_cast<long>(rng() % static_cast<unsigned>(m)), m), forms[rng() % forms.size()]});
    }
    std::vector<IntVec> fs;
    for (const auto& x : f.factors) fs.push_back(x.beta);
    if (rank(to_rat_mat(fs)) < n) continue;
    size_t T = 1 + rng() % 2;
    for (size_t t = 0; t < T; ++t) {
      IntVec xi(n);
      for (auto& x : xi) x = static_cast<long long>(rng() % 4) - 1;
      long m = 1 + static_cast<long>(rng() % 6);
      CycNumber c = root_of_unity(static_cast<long>(rng() % static_cast<unsigned>(m)), static_cast<unsigned>(m)) *
                    CycNumber(Rat(1 + static_cast<long>(rng() % 3)));
      f.terms.push_back({c, xi});
    }
    return f;
  }
}

std::string describe(const MeroFunction& f) {
  std::string out;
  for (const auto& t : f.terms) out += "+" + t.coeff.str() + "e" + to_string(t.xi);
  out += " /";
  for (const auto& x : f.factors) out += " (1-e(" + to_string(x.r) + ")e" + to_string(x.beta) + ")";
  return out;
}

void general_coefficients() {
  std::mt19937 rng(777);
  int redrawn = 0;
  for (int i = 0; i < 10; ++i) {
    size_t n = i % 5 == 4 ? 1 : 2;
    MeroFunction f = random_mero(rng, n);
    Arrangement dirs(MeroCoefficientFormula::directions_of(f));
    std::vector<std::pair<MeroCoefficientFormula, IntVec>> sample;
    for (const auto& c : dirs.chambers()) {
      MeroCoefficientFormula formula(f, c.id);
      for (const auto& l : box(n, n == 1 ? -6 : -4, n == 1 ? 30 : 8))
        if (formula.valid_at(l)) sample.emplace_back(formula, l);
    }
    // a presentation whose Box has empty interior has no validity region at all
    if (sample.size() < 20) {
      expect(++redrawn < 100, "too many functions without a validity region");
      --i;
      continue;
    }
    for (const auto& [formula, l] : sample) {
      CycNumber want = coeff_expansion(f, l);
      CycNumber got = formula.coefficient(l);
      expect(got == want, "function " + std::to_string(i) + " " + describe(f) + " chamber " + formula.chamber().id +
                              " lambda " + to_string(l) + ": formula " + got.str() + ", expansion " + want.str());
    }
  }
  std::cout << "  (" << redrawn << " draws without a validity region skipped)\n";
}

// ---------------------------------------------------------------- 8
void exponential_sums() {
  struct Exact {
    System s;
    std::string chamber;
    RatVec r;
    IntVec lambda;
  };
  std::vector<Exact> cfg = {
      {a2(), "c1", {Rat(1, 5), Rat(1, 7), Rat(1, 11)}, {3, 2}},
      {a2(), "c2", {Rat(1, 3), Rat(1, 4), Rat(2, 5)}, {2, 5}},
      {nonuni(), "c1", {Rat(1, 3), Rat(1, 5), Rat(1, 7)}, {4, 2}},
      {nonuni(), "c2", {Rat(1, 2), Rat(1, 3), Rat(1, 5)}, {1, 4}},
      {System(1, {{2}, {3}}), "c1", {Rat(1, 5), Rat(1, 7)}, {7}},
  };
  for (const auto& e : cfg) {
    Arrangement arr(e.s);
    QuasiPolynomial qp = exponential_sum_closed_form(arr, arr.chamber(e.chamber), e.r);
    CycNumber got = qp.value(e.lambda), want = sum_weight_twisted(e.s, e.lambda, e.r);
    expect(got == want, "exact mode at " + to_string(e.lambda) + ": " + got.str() + " vs " + want.str());
  }
  struct Float {
    System s;
    std::string chamber;
    std::vector<std::complex<double>> y;
    IntVec lambda;
  };
  std::vector<Float> fl = {
      {a2(), "c1", {{0.3, 0}, {0, 0.7}, {1.1, 0}}, {4, 2}},
      {a2(), "c2", {{-0.2, 0.4}, {0.5, -1.3}, {0.1, 0.9}}, {3, 6}},
      {nonuni(), "c1", {{0.25, 0.1}, {-0.4, 0.3}, {0.6, -0.2}}, {5, 3}},
      {nonuni(), "c2", {{0.15, -0.5}, {0.35, 0.2}, {-0.3, 0.45}}, {2, 7}},
      {a2(2), "c1", {{0.1, 0.2}, {0.3, -0.1}, {-0.2, 0.4}, {0.45, 0.05}, {0.2, -0.3}, {-0.1, -0.2}}, {5, 3}},
  };
  for (const auto& e : fl) {
    Arrangement arr(e.s);
    auto got = exponential_sum_closed_form(arr, arr.chamber(e.chamber), e.y, e.lambda);
    auto want = sum_weight_exp(e.s, e.lambda, e.y);
    double rel = std::abs(got - want) / std::max(1.0, std::abs(want));
    std::ostringstream os;
    os << "float mode at " << to_string(e.lambda) << ": " << got << " vs " << want;
    expect(rel <= 1e-8, os.str());
  }
  Arrangement arr(a2());
  bool raised_exact = false, raised_float = false;
  try {
    exponential_sum_closed_form(arr, arr.chamber("c1"), RatVec(3, 0));
  } catch (const GenericityViolated&) {
    raised_exact = true;
  }
  try {
    exponential_sum_closed_form(arr, arr.chamber("c1"), std::vector<std::complex<double>>(3, 0.0), IntVec{2, 1});
  } catch (const GenericityViolated&) {
    raised_float = true;
  }
  expect(raised_exact && raised_float, "y = 0 did not raise GenericityViolated");
}

// ---------------------------------------------------------------- 9
void euler_maclaurin() {
  System s = a2();
  Arrangement arr(s);
  std::vector<std::pair<std::string, PolyN>> fs = {
      {"1", {{{0, 0, 0}, 1}}},
      {"x1", {{{1, 0, 0}, 1}}},
      {"x1*x2", {{{1, 1, 0}, 1}}},
      {"x3^2", {{{0, 0, 2}, 1}}},
  };
  size_t checked = 0;
  for (const auto& [name, f] : fs)
    for (const auto& c : arr.chambers()) {
      QuasiPolynomial qp = weighted_sum_quasipoly(arr, c, f);
      for (const auto& l : box(2, -6, 6)) {
        if (!in_validity_region(arr, qp, l)) continue;
        ++checked;
        Rat got = qp.evaluate(l), want = sum_weight(s, l, f);
        expect(got == want, "f=" + name + " chamber " + c.id + " lambda " + to_string(l) + ": " + to_string(got) +
                                " vs " + to_string(want));
      }
    }
  expect(checked > 0, "no validity-region points");
}

// ---------------------------------------------------------------- 10
bool integral_vertices(const System& s, const IntVec& l) {
  auto flat = s.flattened();
  const size_t n = s.n, N = flat.size();
  std::vector<size_t> idx(n);
  bool ok = true;
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == n) {
      RatMat m(n, RatVec(n));
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = static_cast<long>(flat[idx[j]][i]);
      auto inv = inverse(m);
      if (!inv) return;
      RatVec x = mul(*inv, to_rat(l));
      if (std::any_of(x.begin(), x.end(), [](const Rat& v) { return v < 0; })) return;
      for (const auto& v : x) ok = ok && v.get_den() == 1;
      return;
    }
    for (size_t k = start; k < N; ++k) {
      idx[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  return ok;
}

void ehrhart_checks() {
  System s(1, {{2}, {3}});
  Arrangement arr(s);
  EhrhartQP e = ehrhart(arr, {1});
  expect(e.period == 6, "period is " + std::to_string(e.period) + ", expected 6");
  for (long long k = 0; k <= 30; ++k)
    expect(e.evaluate(k) == Rat(count_points(s, {k})), "k=" + std::to_string(k));
  size_t integral = 0;
  for (const auto& sys : {a2(1), a2(2), nonuni(1), nonuni(2), nonuni(3)}) {
    Arrangement ar(sys);
    for (const auto& l : box(2, 1, 4)) {
      if (!integral_vertices(sys, l)) continue;
      ++integral;
      EhrhartQP q = ehrhart(ar, l);
      expect(q.period == 1, "integral-vertex lambda " + to_string(l) + " has period " + std::to_string(q.period));
      for (long long k = 0; k <= 6; ++k) {
        IntVec kl = {k * l[0], k * l[1]};
        expect(q.evaluate(k) == Rat(count_points(sys, kl)), "ehrhart at " + to_string(kl));
      }
    }
  }
  expect(integral > 0, "no integral-vertex instances");
}

// ---------------------------------------------------------------- 11
std::complex<double> random_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-0.9, 0.9);
  return {d(rng), d(rng)};
}

bool away_from_poles(const MeroFunction& f, const std::vector<std::complex<double>>& z) {
  for (const auto& fac : f.factors) {
    std::complex<double> e = 0;
    for (size_t i = 0; i < f.n; ++i) e += static_cast<double>(fac.beta[i]) * z[i];
    if (std::abs(1.0 - fac.u().to_complex() * std::exp(e)) < 1e-3) return false;
  }
  return true;
}

MeroFunction random_sep(std::mt19937& rng) {
  static const std::vector<Rat> us = {Rat(0), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4)};
  for (;;) {
    MeroFunction f;
    f.n = 1 + rng() % 2;
    size_t R = 1 + rng() % 4;
    for (size_t k = 0; k < R; ++k) {
      IntVec b(f.n);
      for (auto& x : b) x = static_cast<long long>(rng() % 4) - 1;
      if (std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; })) {
        --k;
        continue;
      }
      f.factors.push_back({us[rng() % us.size()], b});
    }
    std::vector<IntVec> fs;
    for (const auto& x : f.factors) fs.push_back(x.beta);
    if (rank(to_rat_mat(fs)) < f.n) continue;
    // u = 1 on a zero relation would make F undefined; avoid repeated trivial factors summing to zero
    IntVec xi(f.n);
    for (auto& x : xi) x = static_cast<long long>(rng() % 3) - 1;
    f.terms.push_back({CycNumber(1), xi});
    if (rng() % 2) {
      IntVec xi2(f.n);
      for (auto& x : xi2) x = static_cast<long long>(rng() % 3) - 1;
      if (xi2 != xi) f.terms.push_back({CycNumber(Rat(-2)), xi2});
    }
    return f;
  }
}

RatVec random_mu(std::mt19937& rng, const MeroFunction& f) {
  // mu = sum t beta - xi_0 with t in (0,1), then kept only if inside Box(F)
  RatVec mu(f.n, 0);
  for (const auto& fac : f.factors) {
    Rat t = make_rat(1 + static_cast<long>(rng() % 9), 10);
    for (size_t i = 0; i < f.n; ++i) mu[i] += t * static_cast<long>(fac.beta[i]);
  }
  for (size_t i = 0; i < f.n; ++i) mu[i] -= static_cast<long>(f.terms[0].xi[i]);
  return mu;
}

void separation_suite() {
  std::mt19937 rng(4242);
  int done = 0, attempts = 0;
  while (done < 30) {
    expect(++attempts < 2000, "could not generate 30 instances");
    MeroFunction f = random_sep(rng);
    RatVec mu = random_mu(rng, f);
    if (!box_membership(f, mu)) continue;
    AdmissibleDecomposition d = admissible_decompose(f, mu);
    for (const auto& t : d.terms) {
      expect(t.alpha.size() == f.n && rank(to_rat_mat(t.alpha)) == f.n, "a term has dependent denominators");
      expect(box_membership(t.as_function(f.n), d.mu_used, true), "mu is not interior to a term's Box");
    }
    int evals = 0;
    while (evals < 20) {
      std::vector<std::complex<double>> z;
      for (size_t i = 0; i < f.n; ++i) z.push_back(random_point(rng));
      bool ok = away_from_poles(f, z);
      for (const auto& t : d.terms) ok = ok && away_from_poles(t.as_function(f.n), z);
      if (!ok) continue;
      ++evals;
      std::complex<double> sum = 0;
      for (const auto& t : d.terms) sum += t.as_function(f.n).eval(z);
      std::complex<double> want = f.eval(z);
      expect(std::abs(sum - want) <= 1e-9 * std::max(1.0, std::abs(want)),
             "instance " + std::to_string(done) + ": decomposition does not sum to F");
    }
    ++done;
  }
  // F1 = F2 - F3 at mu = (1/4, 3/4)
  MeroFunction f1{2, {{CycNumber(1), {0, 0}}}, {{Rat(0), {1, 0}}, {Rat(0), {0, 1}}}};
  RatVec mu = {Rat(1, 4), Rat(3, 4)};
  auto parts = crucial_split(f1, mu);
  expect(parts.size() == 2, "crucial split of F1 has " + std::to_string(parts.size()) + " terms");
  auto same = [](const MeroFunction& g, const CycNumber& c, std::vector<IntVec> forms) {
    std::vector<IntVec> have;
    for (const auto& x : g.factors) {
      if (frac(x.r) != 0) return false;
      have.push_back(x.beta);
    }
    std::sort(have.begin(), have.end());
    std::sort(forms.begin(), forms.end());
    return g.terms.size() == 1 && g.terms[0].coeff == c && g.terms[0].xi == IntVec{0, 0} && have == forms;
  };
  expect(same(parts[0], CycNumber(1), {{1, 1}, {0, 1}}), "first term is not F2 = 1/((1-e^{z1+z2})(1-e^{z2}))");
  expect(same(parts[1], CycNumber(-1), {{1, 1}, {-1, 0}}), "second term is not -F3 = -1/((1-e^{z1+z2})(1-e^{-z1}))");
  for (const auto& p : parts) expect(box_membership(p, mu), "mu not in Box of a split term");
  auto ident = admissible_decompose(f1, mu);
  expect(ident.terms.size() == 1 && !ident.perturbed, "F1 is already independent and must come back unchanged");
  // F2 - F3 over the common denominator decomposes back to F1
  MeroFunction common{2, {{CycNumber(1), {0, 1}}, {CycNumber(-1), {-1, 0}}}, {{Rat(0), {1, 1}}, {Rat(0), {0, 1}}, {Rat(0), {-1, 0}}}};
  auto back = admissible_decompose(common, mu);
  std::vector<std::complex<double>> z = {{0.31, 0.2}, {-0.45, 0.7}};
  std::complex<double> s = 0;
  for (const auto& t : back.terms) s += t.as_function(2).eval(z);
  expect(std::abs(s - f1.eval(z)) < 1e-9, "common-denominator form does not decompose back to F1");
}

// ---------------------------------------------------------------- 12
void volume_checks() {
  Arrangement arr(a2());
  expect(volume_polynomial(arr, arr.chamber("c1")) == a(2), "volume on c1 is not a2");
  expect(volume_polynomial(arr, arr.chamber("c2")) == a(1), "volume on c2 is not a1");
  for (int h = 1; h <= 3; ++h)
    for (const auto& s : {a2(h), nonuni(h)}) {
      Arrangement ar(s);
      for (const auto& c : ar.chambers()) {
        SymPoly v = volume_polynomial(ar, c);
        auto qp = partition_quasipoly(ar, c);
        const SymPoly* p0 = qp.term_at(zero(2));
        expect(p0 != nullptr, "no principal pole");
        int d = static_cast<int>(s.N() - s.n);
        expect(p0->homogeneous(d) == v, "leading term of the partition formula differs from the volume on " + c.id +
                                            ": " + p0->homogeneous(d).str() + " vs " + v.str());
        for (const auto& t : qp.terms)
          if (!(t.q == zero(2))) expect(t.poly.total_degree() < d, "a nonzero pole reaches the top degree");
      }
    }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
  };
  std::vector<Criterion> cs = {
      {1, "golden formulas for A2, multiplicities 1-3", goldens_a2},
      {2, "non-unimodular golden formulas and pole set", goldens_nonuni},
      {3, "vanishing lines and chamber differences", vanishing},
      {4, "oracle equivalence sweep on [-8,8]^n", oracle_sweep},
      {5, "one-dimensional residues c(k,R)", one_dim_residues},
      {6, "total residue example 3/(z2(z1-z2))", tres_example},
      {7, "coefficients of general meromorphic functions", general_coefficients},
      {8, "exponential sums, exact and floating-point modes", exponential_sums},
      {9, "weighted Euler-MacLaurin sums on A2", euler_maclaurin},
      {10, "Ehrhart quasi-polynomials", ehrhart_checks},
      {11, "admissible decompositions", separation_suite},
      {12, "volume polynomials", volume_checks},
  };
  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os.precision(3);
    os << (err.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << dt << " s)";
    if (!err.empty()) {
      os << ": " << err;
      ++failed;
    }
    std::cout << os.str() << std::endl;
  }
  std::cout << (cs.size() - static_cast<size_t>(failed)) << "/" << cs.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

std::string system_summary(const System& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + to_string(s.vectors[i]) + "x" + std::to_string(s.multiplicities[i]);
  return out + "}";
}
