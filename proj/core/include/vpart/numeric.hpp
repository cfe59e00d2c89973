#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace vpart {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntMat = std::vector<std::vector<Int>>;

Rat make_rat(long long num, long long den = 1);
Rat parse_rat(const std::string& s);  // "p", "p/q", "-p/q"
std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

RatVec to_rat(const IntVec& v);
Int lcm_den(const RatVec& v);
long long to_ll(const Int& z);

// floor and fractional part in [0,1)
Int floor_rat(const Rat& r);
Rat frac(const Rat& r);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
long long dot(const IntVec& a, const IntVec& b);

// primitive integer vector, first nonzero entry positive
IntVec canonical_normal(const RatVec& v);
IntVec primitive(const IntVec& v);

Rat binomial(const Rat& x, unsigned k);  // x(x-1)...(x-k+1)/k!

}  // namespace vpart
