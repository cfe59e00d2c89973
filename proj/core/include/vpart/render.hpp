#pragma once

#include <string>

#include "vpart/arrangement.hpp"
#include "vpart/formula.hpp"

namespace vpart {

// {"n": int, "vectors": [[int,...],...], "multiplicities": [int,...]}
// Throws SchemaError on malformed documents.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

System system_from_json(const std::string& text);
std::string system_to_json(const System& s);

std::string chambers_to_json(const Arrangement& arr);
std::string chambers_to_text(const Arrangement& arr);

std::string cyc_to_latex(const CycNumber& c);
std::string sympoly_to_latex(const SymPoly& p);

std::string quasipoly_to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasipoly_from_json(const std::string& text);
std::string quasipoly_to_text(const QuasiPolynomial& qp);
// Conjugate poles are grouped into cos/sin form, self-conjugate ones into signs.
std::string quasipoly_to_latex(const QuasiPolynomial& qp);

std::string ehrhart_to_json(const EhrhartQP& e);
std::string ehrhart_to_text(const EhrhartQP& e);

}  // namespace vpart
