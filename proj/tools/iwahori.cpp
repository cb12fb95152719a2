// Command-line front end: batch verification, expression evaluation and
// table dumps for the Springer and theta modules and the orbit labels.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "iwahori/expr.hpp"
#include "iwahori/orbits.hpp"
#include "iwahori/springer.hpp"
#include "iwahori/theta.hpp"
#include "iwahori/verify.hpp"

using namespace iwahori;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string frac_string(const Frac& f) {
  if (const auto q = exact_divide(f.num, f.den)) return q->to_string();
  return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void print_matrix(const PolyMatrix& a) {
  const auto cells = a.to_strings();
  std::vector<std::size_t> width(static_cast<std::size_t>(a.cols()), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    std::cout << "  [";
    for (std::size_t c = 0; c < row.size(); ++c)
      std::cout << (c ? "  " : " ") << row[c] << std::string(width[c] - row[c].size(), ' ');
    std::cout << " ]\n";
  }
}

// Generator names T_sm, T_s<i>, T_w<k>, or any Hecke-valued eval expression.
std::pair<std::string, HeckeElt> resolve_generator(const std::string& name, int m) {
  std::string literal = name;
  if (name == "T_sm")
    literal = "T[" + std::to_string(m) + "]";
  else if (name.rfind("T_s", 0) == 0)
    literal = "T[" + name.substr(3) + "]";
  else if (name.rfind("T_w", 0) == 0)
    literal = "Tw[" + name.substr(3) + "]";
  const ExprValue v = evaluate(literal, m);
  if (const auto* h = std::get_if<HeckeElt>(&v)) return {name, *h};
  throw UsageError("generator '" + name + "' is not a Hecke element");
}

int cmd_verify(const std::string& suite, const SuiteOptions& base, const std::string& json_path, bool timings) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names();
  else
    suites = {suite};
  std::vector<VerificationReport> reports;
  for (const auto& name : suites) reports.push_back(run_suite(name, base));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.to_text(timings);
    ok = ok && r.ok();
  }
  if (!json_path.empty()) {
    if (reports.size() == 1) {
      write_json(json_path, reports.front().to_json(timings));
    } else {
      json all = {{"schema", 1}, {"suites", json::array()}};
      for (const auto& r : reports) all["suites"].push_back(r.to_json(timings));
      write_json(json_path, all);
    }
  }
  return ok ? 0 : 1;
}

int cmd_springer(int m, const std::string& show, const std::string& generator, const std::string& json_path) {
  const SpringerModule mod(m);
  if (show == "flags") {
    const FixedFlagTable t = mod.flags();
    json rows = json::array();
    for (int k = 0; k < m; ++k) {
      std::vector<std::string> w;
      for (const auto& mono : t.weights[static_cast<std::size_t>(k)]) w.push_back(LaurentPoly(Profile::gs(), mono).to_string());
      rows.push_back(w);
      if (json_path.empty()) std::cout << "p_" << k + 1 << ": " << join(w, ", ") << '\n';
    }
    if (!json_path.empty()) write_json(json_path, {{"m", m}, {"fixed_points", rows}});
    return 0;
  }
  if (show == "bases") {
    const DeclaredBases d = declared_bases(m);
    json theorem = json::array(), lusztig = json::array();
    for (const auto& t : d.theorem) {
      std::vector<std::string> cells;
      for (const auto& p : t) cells.push_back(p.to_string());
      theorem.push_back(cells);
    }
    for (const auto& t : d.lusztig) {
      std::vector<std::string> cells;
      for (const auto& f : t) cells.push_back(frac_string(f));
      lusztig.push_back(cells);
    }
    if (!json_path.empty()) {
      write_json(json_path, {{"m", m},
                             {"theorem", theorem},
                             {"lusztig", lusztig},
                             {"basis_determinant", mod.basis_determinant().to_string()},
                             {"system_determinant", d.system_determinant.to_string()}});
      return 0;
    }
    std::cout << "theorem basis (values at p_1..p_" << m << "), determinant " << mod.basis_determinant() << '\n';
    for (std::size_t j = 0; j < theorem.size(); ++j)
      std::cout << "  " << (j == 0 ? std::string("O") : "B_" + std::to_string(j)) << ": "
                << join(theorem[j].get<std::vector<std::string>>(), ", ") << '\n';
    std::cout << "Lusztig basis, change-of-basis determinant " << d.system_determinant << '\n';
    for (std::size_t j = 0; j < lusztig.size(); ++j)
      std::cout << "  " << (j == 0 ? std::string("O_{p_1}") : "O_{V_" + std::to_string(j) + "}(-1)") << ": "
                << join(lusztig[j].get<std::vector<std::string>>(), ", ") << '\n';
    return 0;
  }
  if (show == "matrix") {
    const auto [name, h] = resolve_generator(generator, m);
    const PolyMatrix a = mod.action_matrix(h);
    if (!json_path.empty()) {
      write_json(json_path, {{"m", m}, {"basis", "theorem"}, {"generator", name}, {"matrix", a.to_strings()}});
      return 0;
    }
    std::cout << name << " in the theorem basis (columns are images of O, B_1, .., B_" << m - 1 << "):\n";
    print_matrix(a);
    return 0;
  }
  throw UsageError("--show must be flags, bases or matrix");
}

int cmd_theta(int m, const std::string& json_path) {
  const ThetaModule th(m);
  std::vector<std::pair<std::string, PolyMatrix>> mats;
  for (int i = 1; i <= m && m >= 2; ++i) mats.emplace_back(i == m ? "T_sm" : "T_s" + std::to_string(i), th.t_simple(i));
  mats.emplace_back("T_w1", th.t_w1());
  mats.emplace_back("T_w1^-1", th.t_w1_inverse());
  if (!json_path.empty()) {
    json arr = json::array();
    for (const auto& [name, a] : mats) arr.push_back({{"m", m}, {"basis", "IC"}, {"generator", name}, {"matrix", a.to_strings()}});
    write_json(json_path, arr);
    return 0;
  }
  for (const auto& [name, a] : mats) {
    std::cout << name << " on IC^0..IC^" << m - 1 << ":\n";
    print_matrix(a);
  }
  return 0;
}

int cmd_orbits(int n, int m, const std::pair<int, int>& bounds, bool count_only, const std::string& json_path) {
  if (n < 1 || n > m) throw UsageError("orbits need 1 <= n <= m");
  const auto [N, r] = bounds;
  if (N + r <= 0) throw UsageError("bounds need N + r > 0");
  const auto labels = enumerate_orbits(n, m, N, r);
  if (!json_path.empty()) {
    json j = {{"n", n}, {"m", m}, {"bounds", {N, r}}, {"count", labels.size()}};
    if (!count_only) {
      j["labels"] = json::array();
      for (const auto& l : labels)
        j["labels"].push_back({{"lambda", l.lambda},
                               {"subset", l.inj.subset},
                               {"image", l.inj.image},
                               {"representative", orbit_representative(l, m)}});
    }
    write_json(json_path, j);
    return 0;
  }
  std::cout << labels.size() << '\n';
  if (count_only) return 0;
  for (const auto& l : labels) {
    std::cout << to_string(l) << '\n';
    for (const auto& row : orbit_representative(l, m)) std::cout << "  " << join(row, " ") << '\n';
  }
  return 0;
}

std::pair<int, int> parse_bounds(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--bounds expects N,r");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--bounds expects N,r");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebra of GL_m, its polynomial representation and the subregular Springer fiber"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, m_range = "1..4", json_path, bounds_text;
  std::uint64_t seed = 0;
  int samples = -1, orbit_n = 0;
  bool timings = false;
  std::vector<std::string> only;
  verify->add_option("suite", suite, "weyl, hecke, polyrep, springer, theta, main-theorem, orbits, dictionary or all")->required();
  verify->add_option("--m", m_range, "rank range A..B")->capture_default_str();
  verify->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  verify->add_option("--samples", samples, "override the number of random samples");
  verify->add_option("--n", orbit_n, "orbit suite: rank n of the small group");
  verify->add_option("--bounds", bounds_text, "orbit suite: N,r");
  verify->add_option("--check", only, "run only these check ids");
  verify->add_flag("--timings", timings, "include elapsed microseconds");

  auto* eval = app.add_subcommand("eval", "evaluate a Hecke/polynomial expression");
  int m = 2;
  std::string expression;
  eval->add_option("--m", m, "rank")->required();
  eval->add_option("expression", expression, "e.g. \"T[2]*1\" or \"Tw[1]*x1\"")->required();

  auto* springer = app.add_subcommand("springer", "fixed points, bases and action matrices of the Springer module");
  std::string show = "matrix", generator = "T_sm";
  springer->add_option("--m", m, "rank")->required();
  springer->add_option("--show", show, "flags, bases or matrix")->check(CLI::IsMember({"flags", "bases", "matrix"}))->capture_default_str();
  springer->add_option("--generator", generator, "T_sm, T_s<i>, T_w<k> or a Hecke expression")->capture_default_str();
  springer->add_option("--json", json_path, "write JSON here ('-' for stdout)");

  auto* theta = app.add_subcommand("theta", "generator matrices on IC^0..IC^{m-1}");
  bool matrices = false;
  theta->add_option("--m", m, "rank")->required();
  theta->add_flag("--matrices", matrices, "print the generator matrices")->required();
  theta->add_option("--json", json_path, "write JSON here ('-' for stdout)");

  auto* orbits = app.add_subcommand("orbits", "orbit labels for (GL_n, GL_m)");
  bool count_only = false;
  orbits->add_option("--n", orbit_n, "rank n <= m")->required();
  orbits->add_option("--m", m, "rank m")->required();
  orbits->add_option("--bounds", bounds_text, "N,r")->required();
  orbits->add_flag("--count-only", count_only, "print the number of labels only");
  orbits->add_option("--json", json_path, "write JSON here ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      SuiteOptions opts;
      std::tie(opts.m_lo, opts.m_hi) = parse_range(m_range);
      opts.seed = seed;
      if (samples >= 0) opts.samples = samples;
      if (verify->count("--n")) opts.n = orbit_n;
      if (!bounds_text.empty()) opts.bounds = parse_bounds(bounds_text);
      opts.only = only;
      return cmd_verify(suite, opts, json_path, timings);
    }
    if (*eval) {
      std::cout << to_string(evaluate(expression, m)) << '\n';
      return 0;
    }
    if (m < 1) throw UsageError("--m must be positive");
    if (*springer) return cmd_springer(m, show, generator, json_path);
    if (*theta) return cmd_theta(m, json_path);
    if (*orbits) return cmd_orbits(orbit_n, m, parse_bounds(bounds_text), count_only, json_path);
  } catch (const TermLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
