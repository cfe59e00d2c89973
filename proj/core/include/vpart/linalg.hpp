#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "vpart/numeric.hpp"

namespace vpart {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SmithForm {
  IntMat U, D, V;  // U * m * V == D
};

SmithForm smith_normal_form(const IntMat& m);

IntMat to_int_mat(const std::vector<IntVec>& rows);
RatMat to_rat_mat(const std::vector<IntVec>& rows);
IntMat int_mul(const IntMat& a, const IntMat& b);
Int int_det(const IntMat& m);

Rat det(const RatMat& m);
size_t rank(const RatMat& m);
RatMat transpose(const RatMat& m);
RatMat mul(const RatMat& a, const RatMat& b);
RatVec mul(const RatMat& a, const RatVec& x);
std::optional<RatMat> inverse(const RatMat& m);

// Basis of the right kernel {x : m x = 0}.
std::vector<RatVec> kernel(const RatMat& m, size_t cols);

struct Solution {
  RatVec x;
};
struct NoSolution {};
struct Underdetermined {
  RatVec particular;
  std::vector<RatVec> kernel;
};
using SolveResult = std::variant<Solution, NoSolution, Underdetermined>;

SolveResult solve(const RatMat& m, const RatVec& b);

// Lattice basis of {x in Z^cols : m x = 0}; rows of the result.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& m, size_t cols);

// Indices of a maximal independent subset of rows, chosen greedily by index.
std::vector<size_t> independent_rows(const RatMat& rows);

}  // namespace vpart
