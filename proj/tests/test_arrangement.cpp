#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace vtest;

namespace {

SystemError::Kind kind_of(const System& s) {
  try {
    validate_system(s);
  } catch (const SystemError& e) {
    return e.kind;
  }
  FAIL("expected a SystemError");
  return SystemError::Kind::Malformed;
}

}  // namespace

TEST_CASE("validate_system") {
  IntVec w = validate_system(a2());
  for (const auto& b : a2().vectors) CHECK(dot(b, w) >= 1);
  CHECK(kind_of(System(1, {{1}, {-1}})) == SystemError::Kind::NoHalfspace);
  CHECK(kind_of(System(2, {{1, 0}})) == SystemError::Kind::NotSpanning);
  CHECK(kind_of(System(2, {{1, 0}, {0, 0}})) == SystemError::Kind::Malformed);
  CHECK(kind_of(System(2, {{1, 0}, {0, 1, 1}})) == SystemError::Kind::Malformed);
  CHECK(kind_of(System(2, {{1, 0}, {0, 1}}, {1, 0})) == SystemError::Kind::Malformed);
  CHECK(kind_of(System(2, {{1, 0}, {1, 0}})) == SystemError::Kind::Malformed);
}

TEST_CASE("bases and volumes") {
  auto b = enumerate_bases(a2());
  CHECK(b.size() == 3);
  for (const auto& x : b) CHECK(x.volume == 1);
  std::map<std::vector<size_t>, long long> vols;
  for (const auto& x : enumerate_bases(nonuni())) vols[x.indices] = x.volume;
  CHECK(vols == std::map<std::vector<size_t>, long long>{{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 1}});
  auto one = enumerate_bases(System(1, {{2}, {3}}));
  REQUIRE(one.size() == 2);
  CHECK(one[0].volume == 2);
  CHECK(one[1].volume == 3);
}

TEST_CASE("chambers of the example systems") {
  Arrangement a(a2());
  REQUIRE(a.chambers().size() == 2);
  CHECK(a.chamber("c1").contains_strictly({2, 1}));
  CHECK(a.chamber("c2").contains_strictly({1, 2}));
  CHECK(a.chamber("c1").bases.size() == 2);
  CHECK_THROWS_AS(a.chamber("c9"), std::out_of_range);
  CHECK(a.chamber_index("c9") == -1);
  CHECK(a.chamber_index("c2") == 1);

  Arrangement b(nonuni());
  REQUIRE(b.chambers().size() == 2);
  CHECK(b.chamber("c1").contains_strictly({3, 1}));
  CHECK(b.chamber("c2").contains_strictly({1, 3}));
  CHECK_FALSE(b.chamber("c1").contains_strictly({1, 2}));

  Arrangement c(System(1, {{2}, {3}}));
  CHECK(c.chambers().size() == 1);
}

TEST_CASE("point location") {
  Arrangement a(a2());
  auto l = a.locate(IntVec{2, 1});
  CHECK(l.kind == Location::Kind::Interior);
  CHECK(a.chambers()[static_cast<size_t>(l.chamber)].id == "c1");
  CHECK(a.locate(IntVec{1, 1}).kind == Location::Kind::OnWall);
  CHECK(a.locate(IntVec{-1, 0}).kind == Location::Kind::Exterior);
  CHECK(chamber_of(a2(), {Rat(1), Rat(3)}).kind == Location::Kind::Interior);
}

TEST_CASE("validity regions") {
  Arrangement a3(a2(3));
  CHECK(a3.in_validity_region(a3.chamber("c1"), {-2, -4}));
  Arrangement a(a2());
  CHECK(a.in_validity_region(a.chamber("c1"), {5, 1}));
  CHECK_FALSE(a.in_validity_region(a.chamber("c1"), {0, -3}));
  // c1 - Box is {a2 >= -2, a1 >= -2, a1 - a2 >= -1} on the lattice
  for (const auto& l : box(2, -5, 5)) {
    bool got = a.in_validity_region(a.chamber("c1"), l);
    if (got) CHECK((l[1] >= -2 && l[0] >= -2 && l[0] - l[1] >= -1));
    if (l[1] >= -1 && l[0] >= -1 && l[0] - l[1] >= 0) CHECK(got);
  }
}

TEST_CASE("closures of chambers lie in their validity regions") {
  for (const auto& s : {a2(), nonuni(), a2(2), nonuni(2)}) {
    Arrangement arr(s);
    for (const auto& c : arr.chambers())
      for (const auto& l : box(2, 0, 6))
        if (c.closure_contains(to_rat(l))) CHECK(arr.in_validity_region(c, l));
  }
}

TEST_CASE("chambers partition the cone") {
  std::mt19937 rng(9);
  for (int k = 0; k < 4; ++k) {
    System s = random_system(rng);
    Arrangement arr(s);
    for (const auto& c : arr.chambers()) {
      CHECK(c.contains_strictly(c.interior_point));
      for (const auto& b : c.bases) CHECK(b.contains_strictly(c.interior_point));
      for (const auto& b : arr.bases()) {
        bool listed = std::any_of(c.bases.begin(), c.bases.end(), [&](const Basis& x) { return x.indices == b.indices; });
        if (!listed) CHECK_FALSE(b.contains_strictly(c.interior_point));
      }
    }
    int sampled = 0;
    while (sampled < 125) {
      // positive combinations of the directions land in C(Phi)
      RatVec p(s.n, 0);
      for (const auto& v : s.vectors) {
        Rat t = make_rat(static_cast<long>(rng() % 1000), 97);
        for (size_t i = 0; i < s.n; ++i) p[i] += t * static_cast<long>(v[i]);
      }
      Location loc = arr.locate(p);
      if (loc.kind == Location::Kind::OnWall) continue;
      ++sampled;
      REQUIRE(loc.kind == Location::Kind::Interior);
      int inside = 0;
      for (const auto& c : arr.chambers()) inside += c.contains_strictly(p) ? 1 : 0;
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("chamber closure is the intersection of its basis cones") {
  Arrangement arr(nonuni());
  for (const auto& c : arr.chambers())
    for (const auto& l : box(2, -3, 8)) {
      RatVec p = to_rat(l);
      bool all = std::all_of(c.bases.begin(), c.bases.end(), [&](const Basis& b) { return b.contains(p); });
      CHECK(all == c.closure_contains(p));
    }
}

TEST_CASE("systems with multiplicities") {
  System s = a2(3);
  CHECK(s.N() == 9);
  CHECK(s.flattened().size() == 9);
  CHECK(s.flat_to_direction()[4] == 1);
  CHECK(a2().scaled(2).multiplicities == std::vector<int>{2, 2, 2});
}
