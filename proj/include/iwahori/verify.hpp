#pragma once

// Batch verification: every suite is a list of named checks run for each m
// in a range. Reports are deterministic for fixed (suite, range, seed).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace iwahori {

enum class Status { Pass, Fail, ConventionA, ConventionB };
std::string to_string(Status s);

struct CheckResult {
  std::string id;
  std::string label;
  std::string anchor;  // the identity being checked
  int m = 0;
  Status status = Status::Pass;
  std::uint64_t instances = 0;
  std::string counterexample;
  std::int64_t elapsed_us = 0;
};

struct VerificationReport {
  std::string suite;
  int m_lo = 0;
  int m_hi = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  nlohmann::json details = nlohmann::json::object();

  bool ok() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json(bool timings = false) const;
  /// One line per check, derived from the JSON form.
  std::string to_text(bool timings = false) const;
};

struct SuiteOptions {
  int m_lo = 1;
  int m_hi = 1;
  std::uint64_t seed = 0;
  /// Overrides the per-check default number of random samples.
  std::optional<int> samples;
  /// Orbit suite: a single (n, N, r) configuration instead of the full sweep.
  std::optional<int> n;
  std::optional<std::pair<int, int>> bounds;
  /// Restricts the run to these check ids (all when empty).
  std::vector<std::string> only;
};

/// Suites: weyl, hecke, polyrep, springer, theta, main-theorem, orbits, dictionary.
std::vector<std::string> suite_names();
/// Check ids of a suite, in execution order.
std::vector<std::string> check_ids(const std::string& suite);
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opts);

/// Parses "A..B" or "A".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace iwahori
