// One PASS/FAIL line per acceptance criterion, each backed by verification
// suite checks and a wall-clock budget. Exit status is nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "iwahori/verify.hpp"

#ifndef IWAHORI_GOLDEN_DIR
#error "IWAHORI_GOLDEN_DIR must point at tests/golden"
#endif

using namespace iwahori;

namespace {

struct Part {
  std::string suite;
  int m_lo;
  int m_hi;
  std::vector<std::string> checks;
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::vector<Part> parts;
  // Optional extra test on the collected reports; returns a failure reason.
  std::function<std::string(const std::vector<VerificationReport>&)> extra;
};

std::string first_failure(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (c.status == Status::Fail) return c.id + " m=" + std::to_string(c.m) + ": " + c.counterexample;
  return {};
}

std::uint64_t instances(const std::vector<VerificationReport>& reports) {
  std::uint64_t n = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) n += c.instances;
  return n;
}

std::string dictionary_extra(const std::vector<VerificationReport>& reports) {
  const VerificationReport& rep = reports.front();
  for (const auto& c : rep.checks)
    if (c.status != Status::ConventionA && c.status != Status::ConventionB)
      return "m=" + std::to_string(c.m) + ": " + c.counterexample;
  // Determinism: a second run serializes identically.
  const std::string once = rep.to_json().dump(2);
  SuiteOptions opts{2, 5, 0, {}, {}, {}, {}};
  if (run_suite("dictionary", opts).to_json().dump(2) != once) return "report differs between runs";
  const std::string path = std::string(IWAHORI_GOLDEN_DIR) + "/dictionary_m2-5.json";
  std::ifstream in(path);
  if (!in) return "missing golden file " + path;
  std::stringstream golden;
  golden << in.rdbuf();
  if (golden.str() != once + "\n") return "report differs from " + path;
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "affine generator on 1 equals (s^2-1) + s^{2(m-1)} x^{(1,0,..,0,-1)}, m = 2..8", 5, {{"polyrep", 2, 8, {"polyrep.tsm"}}}, {}},
      {2, "generators on O and relations for the transported theta matrices, m = 1..6", 60, {{"main-theorem", 1, 6, {}}}, {}},
      {3, "freeness of {T_w1^k IC^0}, m = 1..6", 10, {{"theta", 1, 6, {"theta.freeness"}}}, {}},
      {4, "orbit sums act by res(e_k) on every theorem-basis class, m = 2..6", 30, {{"springer", 2, 6, {"springer.center"}}}, {}},
      {5,
       "Hecke relations on generators and random elements, associativity, m = 2..4",
       60,
       {{"hecke",
         2,
         4,
         {"hecke.quadratic", "hecke.braid", "hecke.commute", "hecke.bernstein-relations", "hecke.bernstein-formula",
          "hecke.relations-random", "hecke.associativity"}}},
       {}},
      {6,
       "change-of-basis system, O_{V_i}(-1) identities and the line table (diagonal with s^{(k-1)(m-k)}), m = 2..8",
       10,
       {{"springer",
         2,
         8,
         {"springer.basis-system", "springer.bundle-identities", "springer.line-table", "springer.diagonal-factor"}}},
       {}},
      {7, "kernel of the restriction map is stable under every generator, m = 2..5", 60,
       {{"springer", 2, 5, {"springer.kernel-stability"}}}, {}},
      {8, "orbit label counts against brute force, n <= m <= 4, N, r <= 3", 5,
       {{"orbits", 1, 4, {"orbits.injections", "orbits.count"}}}, {}},
      {9, "length formula against breadth-first search, m <= 3, |lambda_i| <= 2", 30,
       {{"weyl", 1, 3, {"weyl.length-bfs"}}}, {}},
      {10, "exactly one twist convention reproduces the five IC formulas, m = 2..5 (golden report)", 60,
       {{"dictionary", 2, 5, {}}}, dictionary_extra},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::string reason;
    try {
      for (const auto& p : c.parts) {
        SuiteOptions opts;
        opts.m_lo = p.m_lo;
        opts.m_hi = p.m_hi;
        opts.only = p.checks;
        reports.push_back(run_suite(p.suite, opts));
      }
      reason = first_failure(reports);
      if (reason.empty() && c.extra) reason = c.extra(reports);
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.budget_s) reason = "over budget";
    const bool ok = reason.empty();
    failures += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_s);
    std::cout << "criterion " << c.number << (c.number < 10 ? "  " : " ") << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << instances(reports) << " instances, " << timing << "]";
    if (!ok) std::cout << "\n    " << reason;
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
