#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "vpart/numeric.hpp"

namespace vpart {

struct SystemError : std::invalid_argument {
  enum class Kind { Malformed, NotSpanning, NoHalfspace };
  Kind kind;
  SystemError(Kind k, const std::string& what) : std::invalid_argument(what), kind(k) {}
};

// Distinct integer directions with multiplicities; the flattened sequence
// repeats each direction multiplicity times, in order.
struct System {
  size_t n = 0;
  std::vector<IntVec> vectors;
  std::vector<int> multiplicities;

  System() = default;
  System(size_t dim, std::vector<IntVec> vecs, std::vector<int> mult = {});

  size_t size() const { return vectors.size(); }
  size_t N() const;
  std::vector<IntVec> flattened() const;
  std::vector<size_t> flat_to_direction() const;
  // Same directions with every multiplicity multiplied by k.
  System scaled(int k) const;
};

struct Basis {
  std::vector<size_t> indices;  // sorted direction indices
  std::vector<IntVec> rows;     // B_sigma, one form per row
  long long volume = 0;         // |det B_sigma|
  RatMat coords;                // coords * p = coefficients of p in sigma

  // p = sum x_i beta_i with all x_i > 0
  bool contains_strictly(const RatVec& p) const;
  bool contains(const RatVec& p) const;
};

struct Chamber {
  std::string id;
  std::vector<std::pair<IntVec, bool>> inequalities;  // <normal, x> > 0 (strict) or >= 0
  RatVec interior_point;
  std::vector<Basis> bases;

  bool contains_strictly(const RatVec& p) const;
  bool closure_contains(const RatVec& p) const;
};

struct Location {
  enum class Kind { Interior, OnWall, Exterior };
  Kind kind = Kind::Exterior;
  int chamber = -1;  // Interior: its index; OnWall: lowest adjacent index
};

IntVec validate_system(const System& s);
std::vector<Basis> enumerate_bases(const System& s);
Basis make_basis(const std::vector<IntVec>& forms, std::vector<size_t> indices);

// Caches witness, bases, walls and chambers of a validated system.
class Arrangement {
 public:
  explicit Arrangement(System s);

  const System& system() const { return s_; }
  const IntVec& witness() const { return witness_; }
  const std::vector<Basis>& bases() const { return bases_; }
  const std::vector<IntVec>& walls() const { return walls_; }
  const std::vector<IntVec>& cone_facets() const { return facets_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const Chamber& chamber(const std::string& id) const;  // throws std::out_of_range
  int chamber_index(const std::string& id) const;        // -1 when unknown

  bool in_cone(const RatVec& p) const;  // closed C(Phi)
  Location locate(const RatVec& p) const;
  Location locate(const IntVec& p) const { return locate(to_rat(p)); }

  // exists t in [0,1]^dirs with lambda + sum t_d * scale_d * beta_d strictly in c;
  // scale is indexed by direction
  bool in_validity_region(const Chamber& c, const std::vector<int>& scale, const IntVec& lambda) const;
  bool in_validity_region(const Chamber& c, const IntVec& lambda) const {
    return in_validity_region(c, s_.multiplicities, lambda);
  }

 private:
  System s_;
  IntVec witness_;
  std::vector<Basis> bases_;
  std::vector<IntVec> walls_;
  std::vector<IntVec> facets_;
  std::vector<Chamber> chambers_;
};

std::vector<Chamber> enumerate_chambers(const System& s);
Location chamber_of(const System& s, const RatVec& point);
bool in_validity_region(const System& s, const Chamber& c, const std::vector<int>& h, const IntVec& lambda);

// Irredundant subset of homogeneous strict inequalities <w,x> > 0 describing
// the same open cone.
std::vector<IntVec> prune_cone_inequalities(std::vector<IntVec> normals);

}  // namespace vpart
