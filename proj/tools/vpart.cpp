// vpart: chambers, quasi-polynomial formulas and brute-force checks for
// vector partition functions.

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>

#include "vpart/formula.hpp"
#include "vpart/oracle.hpp"
#include "vpart/parallel.hpp"
#include "vpart/render.hpp"

using namespace vpart;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kSchema = 2;

struct Options {
  std::string system_path, system_inline, format = "json", chamber, lambda, poly, twist, y, box = "-6..6",
              formula_path, polytope_path;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

System load_system(const Options& o) {
  if (!o.system_inline.empty()) return system_from_json(o.system_inline);
  if (o.system_path.empty()) throw SchemaError("a system is required (--system FILE or --json TEXT)");
  return system_from_json(slurp(o.system_path));
}

template <class T, class F>
std::vector<T> parse_list(const std::string& s, F conv, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(conv(item));
    } catch (const std::exception&) {
      throw SchemaError(std::string("bad ") + what + " entry \"" + item + "\"");
    }
  }
  return out;
}

IntVec parse_intvec(const std::string& s, size_t n, const char* what) {
  auto v = parse_list<long long>(s, [](const std::string& x) { return std::stoll(x); }, what);
  if (v.size() != n) throw SchemaError(std::string(what) + " must have " + std::to_string(n) + " entries");
  return v;
}

RatVec parse_ratvec(const std::string& s, size_t n, const char* what) {
  auto v = parse_list<Rat>(s, [](const std::string& x) { return parse_rat(x); }, what);
  if (v.size() != n) throw SchemaError(std::string(what) + " must have " + std::to_string(n) + " entries");
  return v;
}

std::pair<long long, long long> parse_box(const std::string& s) {
  auto p = s.find("..");
  if (p == std::string::npos) throw SchemaError("box must look like LO..HI");
  try {
    return {std::stoll(s.substr(0, p)), std::stoll(s.substr(p + 2))};
  } catch (const std::exception&) {
    throw SchemaError("box must look like LO..HI");
  }
}

const Chamber& pick_chamber(const Arrangement& arr, const std::string& id) {
  if (id.empty()) throw SchemaError("--chamber is required");
  if (arr.chamber_index(id) < 0) throw SchemaError("unknown chamber " + id);
  return arr.chamber(id);
}

void emit_qp(const QuasiPolynomial& qp, const std::string& fmt) {
  if (fmt == "json")
    std::cout << quasipoly_to_json(qp) << "\n";
  else if (fmt == "latex")
    std::cout << quasipoly_to_latex(qp) << "\n";
  else
    std::cout << quasipoly_to_text(qp);
}

void for_box(size_t n, long long lo, long long hi, const std::function<void(const IntVec&)>& f) {
  IntVec p(n, lo);
  for (;;) {
    f(p);
    size_t i = 0;
    while (i < n && ++p[i] > hi) p[i++] = lo;
    if (i == n) break;
  }
}

int cmd_validate(const Options& o) {
  Arrangement arr(load_system(o));
  const auto& s = arr.system();
  auto [lo, hi] = parse_box(o.box);
  std::vector<IntVec> grid;
  for_box(s.n, lo, hi, [&](const IntVec& p) { grid.push_back(p); });
  size_t checked = 0;
  for (const auto& c : arr.chambers()) {
    if (!o.chamber.empty() && c.id != o.chamber) continue;
    QuasiPolynomial qp = partition_quasipoly(arr, c);
    std::vector<char> bad(grid.size(), 0);
    std::vector<char> used(grid.size(), 0);
    std::vector<std::string> expected(grid.size()), got(grid.size());
    parallel_for(grid.size(), [&](size_t k) {
      if (!arr.in_validity_region(c, grid[k])) return;
      used[k] = 1;
      Int want = count_points(s, grid[k]);
      Rat have = qp.evaluate(grid[k]);
      if (have != Rat(want)) {
        bad[k] = 1;
        expected[k] = want.get_str();
        got[k] = to_string(have);
      }
    });
    for (size_t k = 0; k < grid.size(); ++k) {
      checked += used[k];
      if (bad[k]) {
        std::cout << "mismatch: system " << system_to_json(s) << " chamber " << c.id << " lambda "
                  << to_string(grid[k]) << " expected " << expected[k] << " got " << got[k] << "\n";
        return kMismatch;
      }
    }
  }
  std::cout << "ok: " << checked << " points checked\n";
  return kOk;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "validate") return cmd_validate(o);
  if (cmd == "eval") {
    if (o.formula_path.empty()) throw SchemaError("--formula is required");
    QuasiPolynomial qp = quasipoly_from_json(slurp(o.formula_path));
    IntVec l = parse_intvec(o.lambda, qp.n, "--lambda");
    CycNumber v = qp.value(l);
    std::cout << (v.is_rational() ? to_string(v.rational()) : v.str()) << "\n";
    return kOk;
  }
  if (cmd == "embed") {
    if (o.polytope_path.empty()) throw SchemaError("--polytope is required");
    json j;
    try {
      j = json::parse(slurp(o.polytope_path));
    } catch (const json::exception& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    InequalityPolytope p;
    try {
      p.r = j.at("r").get<size_t>();
      p.normals = j.at("normals").get<std::vector<IntVec>>();
      p.offsets = j.at("offsets").get<IntVec>();
    } catch (const json::exception& e) {
      throw SchemaError(std::string("malformed polytope: ") + e.what());
    }
    Embedding e = embed_polytope(p);
    Int count = count_points(e.system, e.a);
    json out{{"system", json::parse(system_to_json(e.system))}, {"a", e.a}, {"count", count.get_str()}};
    std::cout << (o.format == "json" ? out.dump(2) : out.dump()) << "\n";
    return kOk;
  }

  Arrangement arr(load_system(o));
  const auto& s = arr.system();
  if (cmd == "chambers") {
    std::cout << (o.format == "json" ? chambers_to_json(arr) + "\n" : chambers_to_text(arr));
    return kOk;
  }
  if (cmd == "formula") {
    if (o.chamber == kNullChamber)
      emit_qp(null_quasipoly(s.n), o.format);
    else
      emit_qp(partition_quasipoly(arr, pick_chamber(arr, o.chamber)), o.format);
    return kOk;
  }
  if (cmd == "count") {
    std::cout << count_points(s, parse_intvec(o.lambda, s.n, "--lambda")).get_str() << "\n";
    return kOk;
  }
  if (cmd == "sum") {
    IntVec l = parse_intvec(o.lambda, s.n, "--lambda");
    if (!o.twist.empty()) {
      CycNumber v = sum_weight_twisted(s, l, parse_ratvec(o.twist, s.N(), "--twist"));
      std::cout << v.str() << "\n";
      return kOk;
    }
    if (o.poly.empty()) throw SchemaError("sum needs --poly or --twist");
    SymPoly f;
    try {
      f = parse_sympoly(o.poly, s.N(), "x");
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("bad --poly: ") + e.what());
    }
    PolyN pn;
    for (const auto& [e, c] : f.terms()) pn[e.empty() ? Exponent(s.N(), 0) : e] = c.rational();
    std::cout << to_string(sum_weight(s, l, pn)) << "\n";
    return kOk;
  }
  if (cmd == "volume") {
    SymPoly v = volume_polynomial(arr, pick_chamber(arr, o.chamber));
    if (o.format == "latex")
      std::cout << sympoly_to_latex(v) << "\n";
    else if (o.format == "json")
      std::cout << json{{"chamber", o.chamber}, {"poly", v.str()}}.dump(2) << "\n";
    else
      std::cout << v.str() << "\n";
    return kOk;
  }
  if (cmd == "ehrhart") {
    EhrhartQP e = ehrhart(arr, parse_intvec(o.lambda, s.n, "--lambda"));
    std::cout << (o.format == "json" ? ehrhart_to_json(e) + "\n" : ehrhart_to_text(e));
    return kOk;
  }
  if (cmd == "exp-sum") {
    const Chamber& c = pick_chamber(arr, o.chamber);
    if (!o.y.empty()) {
      std::vector<std::complex<double>> y;
      for (const auto& part : parse_list<std::string>(o.y, [](const std::string& x) { return x; }, "--y")) {
        auto colon = part.find(':');
        double re = std::stod(part.substr(0, colon));
        double im = colon == std::string::npos ? 0.0 : std::stod(part.substr(colon + 1));
        y.emplace_back(re, im);
      }
      if (y.size() != s.N()) throw SchemaError("--y must have N entries");
      auto v = exponential_sum_closed_form(arr, c, y, parse_intvec(o.lambda, s.n, "--lambda"));
      std::cout.precision(17);
      std::cout << v.real() << " " << v.imag() << "\n";
      return kOk;
    }
    QuasiPolynomial qp = exponential_sum_closed_form(arr, c, parse_ratvec(o.twist, s.N(), "--twist"));
    if (!o.lambda.empty()) {
      std::cout << qp.value(parse_intvec(o.lambda, s.n, "--lambda")).str() << "\n";
      return kOk;
    }
    emit_qp(qp, o.format);
    return kOk;
  }
  throw SchemaError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vector partition functions: chambers, quasi-polynomials, brute-force checks"};
  app.require_subcommand(1);
  Options o;
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", o.system_path, "system JSON file ('-' for stdin)");
    sub->add_option("--json", o.system_inline, "inline system JSON");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json | text | latex")->check(CLI::IsMember({"json", "text", "latex"}));
  };
  auto* chambers = app.add_subcommand("chambers", "list the chambers");
  add_system(chambers);
  add_format(chambers);
  auto* formula = app.add_subcommand("formula", "quasi-polynomial of the partition function on a chamber");
  add_system(formula);
  add_format(formula);
  formula->add_option("--chamber", o.chamber)->required();
  auto* count = app.add_subcommand("count", "brute-force lattice point count");
  add_system(count);
  count->add_option("--lambda", o.lambda, "comma-separated integers")->required();
  auto* sum = app.add_subcommand("sum", "brute-force weighted sum");
  add_system(sum);
  sum->add_option("--lambda", o.lambda)->required();
  sum->add_option("--poly", o.poly, "polynomial in x1..xN, e.g. 1/2*x1^2*x2+1");
  sum->add_option("--twist", o.twist, "r1,...,rN for the weight e^{2 pi i <r,x>}");
  auto* volume = app.add_subcommand("volume", "volume polynomial on a chamber");
  add_system(volume);
  add_format(volume);
  volume->add_option("--chamber", o.chamber)->required();
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of k -> count(k lambda)");
  add_system(ehr);
  add_format(ehr);
  ehr->add_option("--lambda", o.lambda)->required();
  auto* exps = app.add_subcommand("exp-sum", "closed form of the exponential sum");
  add_system(exps);
  add_format(exps);
  exps->add_option("--chamber", o.chamber)->required();
  exps->add_option("--twist", o.twist, "exact mode: r1,...,rN with y = 2 pi i r");
  exps->add_option("--y", o.y, "float mode: re:im,... per flattened vector");
  exps->add_option("--lambda", o.lambda);
  auto* embed = app.add_subcommand("embed", "embed an inequality polytope as a partition polytope");
  embed->add_option("--polytope", o.polytope_path, "{\"r\":..,\"normals\":[[..]],\"offsets\":[..]}")->required();
  add_format(embed);
  auto* eval = app.add_subcommand("eval", "evaluate a formula produced by 'formula'");
  eval->add_option("--formula", o.formula_path)->required();
  eval->add_option("--lambda", o.lambda)->required();
  auto* validate = app.add_subcommand("validate", "compare formulas with brute force on a box");
  add_system(validate);
  validate->add_option("--box", o.box, "LO..HI per coordinate");
  validate->add_option("--chamber", o.chamber, "restrict to one chamber");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kSchema;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const SchemaError& e) {
    std::cerr << "vpart: " << e.what() << "\n";
    return kSchema;
  } catch (const SystemError& e) {
    std::cerr << "vpart: invalid system: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "vpart: " << e.what() << "\n";
    return kMismatch;
  }
}
