#include "vpart/render.hpp"

#include <json.hpp>
#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace vpart {

using nlohmann::json;

namespace {

json rat_vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json cyc_json(const CycNumber& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_string(x));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Rat json_rat(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw SchemaError("expected a rational as \"p/q\" or an integer");
}

CycNumber json_cyc(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) throw SchemaError("malformed cyclotomic number");
  std::vector<Rat> c;
  for (const auto& x : j.at("coeffs")) c.push_back(json_rat(x));
  return CycNumber(j.at("order").get<unsigned>(), c);
}

std::string latex_rat(const Rat& r, bool leading) {
  std::string s;
  Rat a = abs(r);
  if (r < 0)
    s = "-";
  else if (!leading)
    s = "+";
  if (a.get_den() == 1) return s + a.get_num().get_str();
  return s + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_monomial(const Exponent& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    s += "a_{" + std::to_string(i + 1) + "}";
    if (e[i] > 1) s += "^{" + std::to_string(e[i]) + "}";
  }
  return s;
}

// sum of <lambda, q> as a LaTeX linear form in a_i with rational coefficients
std::string latex_linear(const RatVec& q) {
  std::string s;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    std::string c;
    if (q[i] == 1)
      c = s.empty() ? "" : "+";
    else if (q[i] == -1)
      c = "-";
    else
      c = latex_rat(q[i], s.empty());
    s += c + "a_{" + std::to_string(i + 1) + "}";
  }
  return s.empty() ? "0" : s;
}

RatVec negate_mod1(const RatVec& q) {
  RatVec r;
  for (const auto& x : q) r.push_back(frac(-x));
  return r;
}

bool all_rational(const SymPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_rational()) return false;
  return true;
}

}  // namespace

System system_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("system must be a JSON object");
  for (const char* k : {"n", "vectors"})
    if (!j.contains(k)) throw SchemaError(std::string("missing field \"") + k + "\"");
  if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) throw SchemaError("\"n\" must be a positive integer");
  if (!j.at("vectors").is_array()) throw SchemaError("\"vectors\" must be an array");
  System s;
  s.n = j.at("n").get<size_t>();
  for (const auto& v : j.at("vectors")) {
    if (!v.is_array()) throw SchemaError("each vector must be an array of integers");
    IntVec iv;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw SchemaError("vector entries must be integers");
      iv.push_back(x.get<long long>());
    }
    if (iv.size() != s.n) throw SchemaError("vector length differs from n");
    s.vectors.push_back(iv);
  }
  if (j.contains("multiplicities")) {
    if (!j.at("multiplicities").is_array()) throw SchemaError("\"multiplicities\" must be an array");
    for (const auto& x : j.at("multiplicities")) {
      if (!x.is_number_integer()) throw SchemaError("multiplicities must be integers");
      s.multiplicities.push_back(x.get<int>());
    }
    if (s.multiplicities.size() != s.vectors.size()) throw SchemaError("multiplicities and vectors differ in length");
  } else {
    s.multiplicities.assign(s.vectors.size(), 1);
  }
  return s;
}

std::string system_to_json(const System& s) {
  return json{{"n", s.n}, {"vectors", s.vectors}, {"multiplicities", s.multiplicities}}.dump();
}

std::string chambers_to_json(const Arrangement& arr) {
  json out = json::array();
  for (const auto& c : arr.chambers()) {
    json ineq = json::array();
    for (const auto& [w, strict] : c.inequalities) ineq.push_back(json{{"normal", w}, {"strict", strict}});
    json bases = json::array();
    for (const auto& b : c.bases) bases.push_back(b.indices);
    out.push_back(json{{"id", c.id},
                       {"inequalities", ineq},
                       {"interior_point", rat_vec_json(c.interior_point)},
                       {"bases", bases}});
  }
  return json{{"chambers", out}}.dump(2);
}

std::string chambers_to_text(const Arrangement& arr) {
  std::ostringstream os;
  for (const auto& c : arr.chambers()) {
    os << c.id << ":";
    for (const auto& [w, strict] : c.inequalities) os << " <" << to_string(w) << ",x>" << (strict ? ">0" : ">=0");
    os << "  point " << to_string(c.interior_point) << "  bases";
    for (const auto& b : c.bases) {
      os << " {";
      for (size_t i = 0; i < b.indices.size(); ++i) os << (i ? "," : "") << b.indices[i];
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

std::string cyc_to_latex(const CycNumber& c) {
  if (c.is_rational()) return latex_rat(c.rational(), true);
  std::string s;
  const auto& co = c.coeffs();
  for (size_t k = 0; k < co.size(); ++k) {
    if (co[k] == 0) continue;
    std::string coef = latex_rat(co[k], s.empty());
    if (k == 0) {
      s += coef;
      continue;
    }
    if (abs(co[k]) == 1) coef = co[k] < 0 ? "-" : (s.empty() ? "" : "+");
    s += coef + "\\zeta_{" + std::to_string(c.order()) + "}";
    if (k > 1) s += "^{" + std::to_string(k) + "}";
  }
  return "(" + s + ")";
}

std::string sympoly_to_latex(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // highest degree first
  std::vector<std::pair<Exponent, CycNumber>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0), db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : ts) {
    std::string m = latex_monomial(e);
    if (c.is_rational()) {
      Rat r = c.rational();
      if (!m.empty() && abs(r) == 1)
        s += r < 0 ? "-" : (s.empty() ? "" : "+");
      else
        s += latex_rat(r, s.empty());
    } else {
      s += (s.empty() ? "" : "+") + cyc_to_latex(c);
    }
    s += m;
  }
  return s;
}

std::string quasipoly_to_json(const QuasiPolynomial& qp) {
  json terms = json::array();
  for (const auto& t : qp.terms) {
    json monos = json::array();
    for (const auto& [e, c] : t.poly.terms()) monos.push_back(json{{"exponent", e}, {"coeff", cyc_json(c)}});
    json term{{"pole", rat_vec_json(t.q)}, {"monomials", monos}};
    if (all_rational(t.poly)) term["poly"] = t.poly.str();
    terms.push_back(term);
  }
  return json{{"n", qp.n}, {"chamber", qp.chamber}, {"M", qp.M}, {"validity", qp.validity}, {"terms", terms}}.dump(2);
}

QuasiPolynomial quasipoly_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  try {
    QuasiPolynomial qp;
    qp.n = j.at("n").get<size_t>();
    qp.chamber = j.value("chamber", std::string());
    qp.M = j.value("M", 1u);
    if (j.contains("validity")) qp.validity = j.at("validity").get<std::vector<std::vector<int>>>();
    for (const auto& t : j.at("terms")) {
      QPTerm term;
      for (const auto& x : t.at("pole")) term.q.push_back(json_rat(x));
      if (term.q.size() != qp.n) throw SchemaError("pole has wrong length");
      if (t.contains("monomials")) {
        std::map<Exponent, CycNumber> m;
        for (const auto& mono : t.at("monomials")) {
          Exponent e = mono.at("exponent").get<Exponent>();
          if (e.size() != qp.n) throw SchemaError("exponent has wrong length");
          m.emplace(e, json_cyc(mono.at("coeff")));
        }
        term.poly = SymPoly(qp.n, m);
      } else {
        term.poly = parse_sympoly(t.at("poly").get<std::string>(), qp.n);
      }
      qp.terms.push_back(std::move(term));
    }
    return qp;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed quasi-polynomial: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("malformed quasi-polynomial: ") + e.what());
  }
}

std::string quasipoly_to_text(const QuasiPolynomial& qp) {
  std::ostringstream os;
  os << "chamber " << qp.chamber << ", period " << qp.M << "\n";
  for (const auto& t : qp.terms) os << "  pole " << to_string(t.q) << ": " << t.poly.str() << "\n";
  return os.str();
}

std::string quasipoly_to_latex(const QuasiPolynomial& qp) {
  const CycNumber i = root_of_unity(1, 4);
  std::set<RatVec> used;
  std::vector<std::string> parts;
  for (const auto& t : qp.terms) {
    if (used.count(t.q)) continue;
    used.insert(t.q);
    RatVec nq = negate_mod1(t.q);
    std::string body = "\\left(" + sympoly_to_latex(t.poly) + "\\right)";
    if (std::all_of(t.q.begin(), t.q.end(), [](const Rat& x) { return x == 0; })) {
      parts.push_back(body);
      continue;
    }
    if (nq == t.q) {
      RatVec two;
      for (const auto& x : t.q) two.push_back(2 * x);
      parts.push_back("(-1)^{" + latex_linear(two) + "}" + body);
      continue;
    }
    const SymPoly* partner = qp.term_at(nq);
    if (partner && *partner == t.poly.conj()) {
      used.insert(nq);
      // e^{-i theta} P + e^{i theta} conj(P) = 2 Re P cos theta + 2 Im P sin theta
      SymPoly re = (t.poly + t.poly.conj()) * CycNumber(Rat(1, 2));
      SymPoly im = (t.poly - t.poly.conj()) * (i * CycNumber(Rat(-1, 2)));
      std::string theta = "2\\pi(" + latex_linear(t.q) + ")";
      std::string s;
      if (!re.is_zero()) s += "2\\left(" + sympoly_to_latex(re) + "\\right)\\cos " + theta;
      if (!im.is_zero()) s += std::string(s.empty() ? "" : "+") + "2\\left(" + sympoly_to_latex(im) + "\\right)\\sin " + theta;
      if (!s.empty()) parts.push_back(s);
      continue;
    }
    parts.push_back("e^{-2\\pi i(" + latex_linear(t.q) + ")}" + body);
  }
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) out += (k ? "+" : "") + parts[k];
  return out.empty() ? "0" : out;
}

std::string ehrhart_to_json(const EhrhartQP& e) {
  json polys = json::array();
  for (const auto& p : e.polys) {
    json a = json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    polys.push_back(a);
  }
  return json{{"chamber", e.chamber}, {"period", e.period}, {"polys", polys}}.dump(2);
}

std::string ehrhart_to_text(const EhrhartQP& e) {
  std::ostringstream os;
  os << "chamber " << e.chamber << ", period " << e.period << "\n";
  for (size_t j = 0; j < e.polys.size(); ++j) {
    os << "  k = " << j << " mod " << e.period << ":";
    for (size_t d = 0; d < e.polys[j].size(); ++d) os << " " << to_string(e.polys[j][d]) << "*k^" << d;
    os << "\n";
  }
  return os.str();
}

}  // namespace vpart
